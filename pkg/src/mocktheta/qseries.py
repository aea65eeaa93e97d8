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

import cmath
import enum
import functools
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from . import numeric
from .errors import DomainError, NonConvergence, WrongParity

logger = logging.getLogger(__name__)

TERM_CAP = 20000
DEFAULT_TOLERANCE = 1e-14


class Parity(enum.Enum):
    ODD = 'odd'             # N odd
    FOURFOLD = 'fourfold'   # N ≡ 0 (mod 4)
    OTHER = 'other'


class SeriesId(enum.Enum):
    F = 'F'
    G = 'G'
    PHI = 'PHI'
    PSI = 'PSI'

    @property
    def parity(self) -> Optional[Parity]:
        """The parity of the roots of unity where the series degenerates, or None for all roots"""
        return _SERIES_PARITY[self]

    def admits(self, parity: Parity) -> bool:
        return self.parity is None or self.parity is parity


_SERIES_PARITY = {
    SeriesId.F: None,
    SeriesId.G: Parity.ODD,
    SeriesId.PHI: Parity.ODD,
    SeriesId.PSI: Parity.FOURFOLD,
}


class Form(enum.Enum):
    EULERIAN = 'eulerian'
    SUMFORM = 'sumform'


@dataclass(frozen=True)
class AlphaPoint:
    """A point q = e^{-α} of the closed unit disc, carried by its exponent α

    Keeping α rather than q makes fractional powers single valued:
    q^s is always e^{-sα}.  Re α ≥ 0 and α ≠ 0 are enforced.
    """
    alpha: complex

    def __post_init__(self) -> None:
        alpha = complex(self.alpha)
        if not cmath.isfinite(alpha):
            raise DomainError(f'α must be finite, not {alpha}')
        if alpha == 0:
            raise DomainError('α = 0 (q = 1) is not a valid point')
        if alpha.real < 0:
            raise DomainError(f'Re α must be non-negative, not {alpha.real}')
        object.__setattr__(self, 'alpha', alpha)

    @classmethod
    def from_q(cls, q: complex) -> 'AlphaPoint':
        q = complex(q)
        if q == 0 or abs(q) > 1:
            raise DomainError(f'q = {q} is not in the punctured closed unit disc')
        return cls(-cmath.log(q))

    @classmethod
    def from_tau(cls, z: complex) -> 'AlphaPoint':
        """The point with q = e^{πiz}, so that z ↦ -1/z becomes α ↦ π²/α"""
        return cls(-1j * math.pi * complex(z))

    @property
    def q(self) -> complex:
        return cmath.exp(-self.alpha)

    @property
    def interior(self) -> bool:
        return self.alpha.real > 0

    def power(self, s: float) -> complex:
        """q^s, computed as e^{-sα}"""
        return cmath.exp(-s * self.alpha)

    def __str__(self) -> str:
        return f'α={self.alpha}'


@dataclass(frozen=True)
class RootOfUnity:
    """The root of unity ζ_N^l = e^{2πil/N}

    Any integer numerator is accepted; the fraction is reduced so that
    0 ≤ l < N and gcd(l, N) = 1.
    """
    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator <= 0:
            raise DomainError(f'root of unity with non-positive order {self.denominator}')
        turn = Fraction(self.numerator, self.denominator) % 1
        object.__setattr__(self, 'numerator', turn.numerator)
        object.__setattr__(self, 'denominator', turn.denominator)

    @property
    def parity(self) -> Parity:
        if self.denominator % 2 == 1:
            return Parity.ODD
        elif self.denominator % 4 == 0:
            return Parity.FOURFOLD
        else:
            return Parity.OTHER

    @property
    def value(self) -> complex:
        return numeric.exact_root(self.numerator, self.denominator)

    def alpha_point(self) -> AlphaPoint:
        return AlphaPoint(complex(0.0, -2 * math.pi * self.numerator / self.denominator))

    def __str__(self) -> str:
        return f'{self.numerator}/{self.denominator}'


def qpochhammer(a: complex, b: complex, n: int) -> complex:
    """The finite product (a; b)_n = ∏_{j<n} (1 - a·b^j)

    The product is formed by mpmath at numeric.DEFAULT_DIGITS digits and
    rounded once at the end.
    """
    if n < 0:
        raise DomainError(f'q-Pochhammer symbol with negative length {n}')
    ctx = numeric.working_context()
    return complex(ctx.qp(ctx.mpc(a), ctx.mpc(b), n))


def _converge(terms: Iterator[complex], initial: complex, tol: float, what: str) -> complex:
    # stop after three consecutive terms below tol·max(1, |S|)
    total = initial
    small = 0
    for count, term in enumerate(terms, start=1):
        total += term
        if abs(term) < tol * max(1.0, abs(total)):
            small += 1
            if small == 3:
                logger.debug('%s converged after %d terms', what, count)
                return total
        else:
            small = 0
        if count >= TERM_CAP:
            break
    raise NonConvergence(what, TERM_CAP)


def _phi_eulerian_terms(alpha: complex) -> Iterator[complex]:
    # q^{n²} / (-q²; q²)_n for n ≥ 1
    denominator = complex(1)
    for n in itertools.count(1):
        denominator *= 1 + cmath.exp(-2 * n * alpha)
        yield cmath.exp(-n * n * alpha) / denominator


def _phi_sum_terms(alpha: complex) -> Iterator[complex]:
    # (-1)^n q^{2n+1} (q; q²)_n for n ≥ 0
    product = complex(1)
    for n in itertools.count():
        if n > 0:
            product *= 1 - cmath.exp(-(2 * n - 1) * alpha)
        yield (-1) ** n * cmath.exp(-(2 * n + 1) * alpha) * product


def _psi_eulerian_terms(alpha: complex) -> Iterator[complex]:
    # q^{n²} / (q; q²)_n for n ≥ 1
    denominator = complex(1)
    for n in itertools.count(1):
        denominator *= 1 - cmath.exp(-(2 * n - 1) * alpha)
        yield cmath.exp(-n * n * alpha) / denominator


def _psi_sum_terms(alpha: complex) -> Iterator[complex]:
    # q^{n+1} (-q²; q²)_n for n ≥ 0
    product = complex(1)
    for n in itertools.count():
        if n > 0:
            product *= 1 + cmath.exp(-2 * n * alpha)
        yield cmath.exp(-(n + 1) * alpha) * product


def _check_interior(p: AlphaPoint, tol: float) -> None:
    if not p.interior:
        raise DomainError(f'{p} is on the unit circle; use eval_at_root for roots of unity')
    if not tol > 0:
        raise DomainError(f'tolerance must be positive, not {tol}')


def eval_phi(p: AlphaPoint, form: Form = Form.EULERIAN, tol: float = DEFAULT_TOLERANCE) -> complex:
    """Evaluate φ(q) inside the unit disc

    :param p: the point q = e^{-α}, with Re α > 0
    :param form: EULERIAN for Σ q^{n²}/(-q²;q²)_n, SUMFORM for
        1 + Σ (-1)^n q^{2n+1} (q;q²)_n
    :param tol: the tolerance of the stopping rule
    :returns: the value φ(q)
    """
    _check_interior(p, tol)
    if form is Form.EULERIAN:
        return _converge(_phi_eulerian_terms(p.alpha), 1, tol, f'φ Eulerian form at {p}')
    else:
        return _converge(_phi_sum_terms(p.alpha), 1, tol, f'φ sum form at {p}')


def eval_psi(p: AlphaPoint, form: Form = Form.EULERIAN, tol: float = DEFAULT_TOLERANCE) -> complex:
    """Evaluate ψ(q) inside the unit disc

    EULERIAN is Σ_{n≥1} q^{n²}/(q;q²)_n, SUMFORM is Σ_{n≥0} q^{n+1}(-q²;q²)_n.
    """
    _check_interior(p, tol)
    if form is Form.EULERIAN:
        return _converge(_psi_eulerian_terms(p.alpha), 0, tol, f'ψ Eulerian form at {p}')
    else:
        return _converge(_psi_sum_terms(p.alpha), 0, tol, f'ψ sum form at {p}')


def eval_G(p: AlphaPoint, tol: float = DEFAULT_TOLERANCE) -> complex:
    """G(q) = φ(q)/2, the extension of Σ(-1)^n (q;q²)_n into the disc

    Note that this gives G(0) = 1/2, while the formal sum at q = 0 is 1.
    """
    return eval_phi(p, Form.SUMFORM, tol) / 2


def _first_vanishing(root: RootOfUnity, step: int, offset: int, negated: bool) -> int:
    # smallest j with 1 - ζ^{step·j + offset} = 0, or 1 + ζ^{...} = 0 when negated
    l, N = root.numerator, root.denominator
    if negated:
        if N % 2:
            return -1
        target = N // 2
    else:
        target = 0
    for j in range(N):
        if (l * (step * j + offset)) % N == target:
            return j
    return -1


def vanishing_index(s: SeriesId, r: RootOfUnity) -> int:
    """The number of terms of the degenerate finite sum of s at r

    This is one more than the index of the first Pochhammer factor that is
    exactly zero at r, found by arithmetic on the exponents.
    """
    if not s.admits(r.parity):
        raise WrongParity(s.value, str(r))
    if s is SeriesId.F:
        j = _first_vanishing(r, 1, 1, negated=False)
    elif s is SeriesId.PSI:
        j = _first_vanishing(r, 2, 2, negated=True)
    else:
        j = _first_vanishing(r, 2, 1, negated=False)
    assert j >= 0, (s, r)
    return j + 1


@functools.lru_cache(maxsize=1024)
def eval_at_root(s: SeriesId, r: RootOfUnity) -> complex:
    """Evaluate a series exactly at a root of unity where it terminates

    :param s: the series: F at any root, G and PHI at roots of odd order,
        PSI at roots of order divisible by 4
    :param r: the root of unity
    :returns: the value of the finite sum
    :raises WrongParity: if the series does not terminate at r
    """
    terms = vanishing_index(s, r)
    l, N = r.numerator, r.denominator
    digits = numeric.root_sum_digits(N)
    ctx = numeric.working_context(digits)
    logger.debug('%s at %s: %d terms at %d digits', s.value, r, terms, digits)

    # F sums (ζ;ζ)_n, PHI and G sum (-1)^n (ζ;ζ²)_n, PSI sums ζ^{n+1} (-ζ²;ζ²)_n
    zeta = numeric.context_root(ctx, l, N)
    zeta2 = numeric.context_root(ctx, 2 * l, N)
    a, b = {SeriesId.F: (zeta, zeta), SeriesId.PSI: (-zeta2, zeta2)}.get(s, (zeta, zeta2))

    total = ctx.mpc(0)
    for n in range(terms):
        product = ctx.qp(a, b, n)
        if s is SeriesId.F:
            total += product
        elif s is SeriesId.PSI:
            total += numeric.context_root(ctx, l * (n + 1), N) * product
        else:
            total += product if n % 2 == 0 else -product

    if s is SeriesId.PHI:
        total *= 2
    return complex(total)
