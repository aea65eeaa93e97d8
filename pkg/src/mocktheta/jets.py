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

# Jets are truncated Taylor series in the radial parameter t of q = ζ·e^{-t}.
# A Pochhammer factor 1 ∓ q^m whose constant term vanishes at ζ is built with
# an exact zero there, decided from the exponents, so that products of such
# factors carry exact leading zeros and the valuation is never guessed from
# rounding dust.

import logging
import math
from typing import Iterable, Iterator, Tuple, Union

import numpy as np

from . import numeric
from .asymptotics import AsymptoticSeries, Scale
from .errors import DomainError, OrderMismatch, WrongParity
from .qseries import RootOfUnity, SeriesId

logger = logging.getLogger(__name__)

ZERO_THRESHOLD = 1e-12


class TaylorJet:
    """The Taylor coefficients c_0 … c_N of a function of t, modulo t^{N+1}"""
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[complex]):
        array = np.array(list(coeffs), dtype=complex)
        if array.ndim != 1 or array.size == 0:
            raise DomainError('a jet needs a flat, non-empty list of coefficients')
        array.flags.writeable = False
        self._coeffs = array

    @classmethod
    def constant(cls, value: complex, order: int) -> 'TaylorJet':
        coeffs = np.zeros(order + 1, dtype=complex)
        coeffs[0] = value
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    def __getitem__(self, j: int) -> complex:
        return complex(self._coeffs[j])

    def __len__(self) -> int:
        return len(self._coeffs)

    def valuation(self) -> int:
        """The index of the first coefficient that is not zero, or N+1"""
        magnitudes = np.abs(self._coeffs)
        threshold = ZERO_THRESHOLD * (1 + magnitudes.max())
        nonzero = np.flatnonzero(magnitudes >= threshold)
        return int(nonzero[0]) if nonzero.size else self.order + 1

    def __call__(self, t: float) -> complex:
        return complex(np.polynomial.polynomial.polyval(t, self._coeffs))

    def __add__(self, other: 'TaylorJet') -> 'TaylorJet':
        if not isinstance(other, TaylorJet):
            return NotImplemented
        return jet_add(self, other)

    def __sub__(self, other: 'TaylorJet') -> 'TaylorJet':
        if not isinstance(other, TaylorJet):
            return NotImplemented
        return jet_add(self, jet_scale(other, -1))

    def __neg__(self) -> 'TaylorJet':
        return jet_scale(self, -1)

    def __mul__(self, other: Union['TaylorJet', complex]) -> 'TaylorJet':
        if isinstance(other, TaylorJet):
            return jet_mul(self, other)
        if isinstance(other, (int, float, complex)):
            return jet_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TaylorJet):
            return NotImplemented
        return np.array_equal(self._coeffs, other._coeffs)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f'TaylorJet({self._coeffs.tolist()!r})'


def _check_orders(a: TaylorJet, b: TaylorJet) -> None:
    if a.order != b.order:
        raise OrderMismatch(a.order, b.order)


def jet_add(a: TaylorJet, b: TaylorJet) -> TaylorJet:
    _check_orders(a, b)
    return TaylorJet(a.coeffs + b.coeffs)


def jet_mul(a: TaylorJet, b: TaylorJet) -> TaylorJet:
    """The Cauchy product, truncated at the common order"""
    _check_orders(a, b)
    return TaylorJet(np.convolve(a.coeffs, b.coeffs)[:a.order + 1])


def jet_scale(a: TaylorJet, scalar: complex) -> TaylorJet:
    return TaylorJet(scalar * a.coeffs)


def jet_root_power(r: RootOfUnity, m: int, N: int) -> TaylorJet:
    """The jet of q^m = ζ^m e^{-mt}: coefficient j is ζ^m (-m)^j / j!"""
    if N < 0:
        raise DomainError(f'jet order must be non-negative, not {N}')
    zeta = numeric.exact_root(m * r.numerator, r.denominator)
    return TaylorJet(zeta * (-m) ** j / math.factorial(j) for j in range(N + 1))


def jet_q(r: RootOfUnity, N: int) -> TaylorJet:
    """The jet of q(t) = ζ e^{-t} to order N"""
    return jet_root_power(r, 1, N)


def _factor(r: RootOfUnity, m: int, sign: int, N: int) -> Tuple[TaylorJet, bool]:
    # 1 + sign·q^m, and whether it vanishes at t = 0
    l, order = r.numerator, r.denominator
    if sign < 0:
        vanishes = (m * l) % order == 0
    else:
        vanishes = order % 2 == 0 and (m * l) % order == order // 2
    coeffs = sign * jet_root_power(r, m, N).coeffs
    coeffs[0] = 0 if vanishes else 1 + coeffs[0]
    return TaylorJet(coeffs), vanishes


def _prefix_products(r: RootOfUnity, N: int, odd: bool) -> Iterator[Tuple[TaylorJet, int]]:
    # (q;q²)_n when odd, (-q²;q²)_n otherwise, with the count of vanishing factors
    product = TaylorJet.constant(1, N)
    zeros = 0
    j = 0
    while True:
        yield product, zeros
        if odd:
            factor, vanishes = _factor(r, 2 * j + 1, -1, N)
        else:
            factor, vanishes = _factor(r, 2 * j + 2, +1, N)
        product = jet_mul(product, factor)
        zeros += vanishes
        j += 1


def pochhammer_jets(r: RootOfUnity, N: int, odd: bool = True) -> Iterator[TaylorJet]:
    """The jets of (q;q²)_0, (q;q²)_1, … or, when odd is False, of (-q²;q²)_n"""
    for product, _zeros in _prefix_products(r, N, odd):
        yield product


def odd_pochhammer_jet(r: RootOfUnity, n: int, N: int) -> TaylorJet:
    """The jet of (q; q²)_n at q = ζ e^{-t}"""
    for j, (product, _zeros) in enumerate(_prefix_products(r, N, odd=True)):
        if j == n:
            return product
    raise AssertionError('unreachable')


def even_pochhammer_jet(r: RootOfUnity, n: int, N: int) -> TaylorJet:
    """The jet of (-q²; q²)_n at q = ζ e^{-t}"""
    for j, (product, _zeros) in enumerate(_prefix_products(r, N, odd=False)):
        if j == n:
            return product
    raise AssertionError('unreachable')


def radial_expansion(s: SeriesId, r: RootOfUnity, N: int) -> AsymptoticSeries:
    """The Taylor coefficients in t of s(ζ e^{-t}) up to t^N

    Each term of the sum form contains a prefix product whose valuation is
    the number of its factors that vanish at ζ.  Summation stops at the first
    prefix whose valuation exceeds N, since the valuations never decrease.

    :raises WrongParity: if s does not degenerate at r
    """
    if s is SeriesId.F:
        raise DomainError('F has no radial expansion here')
    if not s.admits(r.parity):
        raise WrongParity(s.value, str(r))
    if N < 0:
        raise DomainError(f'expansion order must be non-negative, not {N}')

    if s is SeriesId.PSI:
        total = TaylorJet.constant(0, N)
        prefixes = _prefix_products(r, N, odd=False)
    else:
        total = TaylorJet.constant(1, N)
        prefixes = _prefix_products(r, N, odd=True)

    terms = 0
    for n, (product, zeros) in enumerate(prefixes):
        if zeros > N:
            break
        if s is SeriesId.PSI:
            total = total + jet_root_power(r, n + 1, N) * product
        else:
            total = total + (-1) ** n * jet_root_power(r, 2 * n + 1, N) * product
        terms += 1

    if s is SeriesId.G:
        total = total * 0.5
    logger.debug('radial expansion of %s at %s to order %d: %d terms', s.value, r, N, terms)
    return AsymptoticSeries(Scale.POWERS_OF_T, tuple(total.coeffs), f'{s.value}(ζ e^{{-t}}) at ζ = {r}')
