# mocktheta
#
# Copyright (C) 2026 The mocktheta authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

# All floating point work in mocktheta happens in Python complex numbers,
# except for q-Pochhammer symbols and the exact finite sums at roots of
# unity.  The sums have partial products that grow like e^{0.16 N} before
# cancelling down to a value of size √N, so they are carried out in an
# mpmath context whose precision grows with the order N and only the final
# value is converted back.  mpmath raises a context's precision temporarily
# inside functions such as qp, so each thread gets its own context for each
# precision.

import functools
import logging
import math
import threading
from fractions import Fraction
from typing import Any, Dict

import mpmath

from .errors import DomainError

logger = logging.getLogger(__name__)

# precision of q-Pochhammer products outside the sums at roots of unity
DEFAULT_DIGITS = 24

_QUARTER_TURNS: Dict[Fraction, complex] = {
    Fraction(0): 1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(-1, 2): -1 + 0j,
    Fraction(-1, 4): -1j,
}


def reduced_turn(numerator: int, denominator: int) -> Fraction:
    """The fraction numerator/denominator reduced modulo 1 into [-1/2, 1/2)"""
    if denominator <= 0:
        raise DomainError(f'root of unity with non-positive order {denominator}')
    turn = Fraction(numerator, denominator) % 1
    if turn >= Fraction(1, 2):
        turn -= 1
    return turn


def exact_root(numerator: int, denominator: int) -> complex:
    """Compute e^{2πi·numerator/denominator}

    The exponent is reduced exactly before anything is rounded, so large
    numerators lose no phase accuracy.  Quarter turns are returned exactly.
    """
    turn = reduced_turn(numerator, denominator)
    try:
        return _QUARTER_TURNS[turn]
    except KeyError:
        angle = 2 * math.pi * turn.numerator / turn.denominator
        return complex(math.cos(angle), math.sin(angle))


def root_sum_digits(order: int) -> int:
    """Decimal digits needed for an exact finite sum at a root of order N"""
    return DEFAULT_DIGITS + math.ceil(0.08 * order)


@functools.lru_cache()
def _thread_context(digits: int, thread: int) -> Any:
    context = mpmath.MPContext()
    context.dps = digits
    logger.debug('created mpmath context with %d digits for thread %d', digits, thread)
    return context


def working_context(digits: int = DEFAULT_DIGITS) -> Any:
    """The calling thread's mpmath context at the given decimal precision"""
    return _thread_context(digits, threading.get_ident())


def context_root(context: Any, numerator: int, denominator: int) -> Any:
    """e^{2πi·numerator/denominator} as an mpc in the given context"""
    turn = reduced_turn(numerator, denominator)
    if turn in _QUARTER_TURNS:
        return context.mpc(_QUARTER_TURNS[turn])
    return context.expjpi(2 * context.mpf(turn.numerator) / turn.denominator)
