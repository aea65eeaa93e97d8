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

# Coefficients are exact: rationals for the radial expansion of φ at q = 1,
# Gaussian rationals times a symbolic π^n for the expansions at roots of
# unity.  Floating point only enters when a truncated series is evaluated.

import cmath
import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from . import numeric
from .errors import DomainError
from .euler import EulerTable, euler_numbers
from .qseries import RootOfUnity, SeriesId, eval_at_root

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


class Scale(enum.Enum):
    POWERS_OF_T = 't'
    POWERS_OF_INV_M = '1/m'


@dataclass(frozen=True)
class AsymptoticSeries:
    """A truncated asymptotic series

    coeffs[n] multiplies t^n (scale POWERS_OF_T) or m^{-n} (POWERS_OF_INV_M).
    """
    scale: Scale
    coeffs: Tuple[complex, ...]
    meta: str = ''

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DomainError('an asymptotic series needs at least one coefficient')
        object.__setattr__(self, 'coeffs', tuple(complex(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def term(self, n: int, x: float) -> complex:
        if self.scale is Scale.POWERS_OF_T:
            return self.coeffs[n] * x ** n
        else:
            return self.coeffs[n] / x ** n

    def partial_sum(self, x: float, N: Optional[int] = None) -> complex:
        last = self.order if N is None else min(N, self.order)
        return sum((self.term(n, x) for n in range(last + 1)), complex(0))


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, 're', Fraction(self.re))
        object.__setattr__(self, 'im', Fraction(self.im))

    @classmethod
    def i_power(cls, n: int) -> 'GaussianRational':
        return (cls(1), cls(0, 1), cls(-1), cls(0, -1))[n % 4]

    def __add__(self, other: 'Union[GaussianRational, Rational]') -> 'GaussianRational':
        if not isinstance(other, GaussianRational):
            other = GaussianRational(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __mul__(self, other: 'Union[GaussianRational, Rational]') -> 'GaussianRational':
        if not isinstance(other, GaussianRational):
            other = GaussianRational(other)
        return GaussianRational(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self) -> 'GaussianRational':
        return GaussianRational(-self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        imaginary = f'{self.im}i' if abs(self.im) != 1 else ('i' if self.im > 0 else '-i')
        if self.re == 0:
            return imaginary
        return f'{self.re}{"" if imaginary.startswith("-") else "+"}{imaginary}'


@dataclass(frozen=True)
class PiScaled:
    """An exact Gaussian rational times π^power"""
    part: GaussianRational
    power: int

    def __complex__(self) -> complex:
        return complex(self.part) * math.pi ** self.power

    def __str__(self) -> str:
        if self.power == 0:
            return str(self.part)
        return f'({self.part})*pi^{self.power}'


def _table_for(n: int, table: Optional[EulerTable]) -> EulerTable:
    if n < 0:
        raise DomainError(f'coefficient index must be non-negative, not {n}')
    return euler_numbers(n) if table is None else table


def coeff_a(n: int, table: Optional[EulerTable] = None) -> Fraction:
    """The exact coefficient a_n of φ(e^{-t}) ~ Σ a_n t^n / n!

    :raises TableTooSmall: if table ends before E_{2n}
    """
    table = _table_for(n, table)
    total = Fraction(0)
    f = math.factorial
    for a in range(n + 1):
        for b in range((n - a) // 2 + 1):
            c = n - a - 2 * b
            total += (Fraction(f(n), f(a) * f(2 * b) * f(c)) * Fraction(3, 2) ** a * Fraction(5, 2) ** (2 * b)
                      * table[2 * a + 2 * b])
            if c == 0:
                total += (Fraction(f(n), f(a) * f(2 * b)) * Fraction(3, 2) ** a * Fraction(1, 2) ** (2 * b)
                          * table[2 * a + 2 * b])
    return total


def coeff_a_kernel(n: int, table: Optional[EulerTable] = None) -> Fraction:
    """a_n again, from the Taylor series of the W kernel

    Near q = 1 the ψ(q₁) term of Watson's transformation is exponentially
    small, so e^{t/24} φ(e^{-t}) has the Gaussian moment expansion
    Σ_j κ_j 3^j (2j-1)!! t^j, where κ_j is the coefficient of x^{2j} in
    (cosh(5x/6) + cosh(x/6)) sech(x).  Multiplying by e^{-t/24} gives a_n/n!.
    """
    table = _table_for(n, table)
    f = math.factorial

    def cosh_part(i: int) -> Fraction:
        return (Fraction(5, 6) ** (2 * i) + Fraction(1, 6) ** (2 * i)) / f(2 * i)

    moments = []
    for j in range(n + 1):
        kappa = sum((cosh_part(i) * Fraction(table[2 * (j - i)], f(2 * (j - i))) for i in range(j + 1)), Fraction(0))
        double_factorial = Fraction(f(2 * j), 2 ** j * f(j))
        moments.append(kappa * 3 ** j * double_factorial)

    coefficient = sum((moments[j] * Fraction(-1, 24) ** (n - j) / f(n - j) for j in range(n + 1)), Fraction(0))
    return coefficient * f(n)


def coeff_aA(n: int, A: Rational, table: Optional[EulerTable] = None) -> PiScaled:
    """The coefficient of m^{-n} in h(A/m; 12/m), exactly

    a(A)_n = π^n Σ_{a+2b=n} (-1)^{a+b} (3i)^a A^{2b} / (a! (2b)!) E_{2a+2b}
    """
    table = _table_for(n, table)
    A = Fraction(A)
    f = math.factorial
    part = GaussianRational()
    for a in range(n % 2, n + 1, 2):
        b = (n - a) // 2
        coefficient = Fraction((-1) ** (a + b) * 3 ** a, f(a) * f(2 * b)) * A ** (2 * b) * table[2 * a + 2 * b]
        part += GaussianRational.i_power(a) * coefficient
    return PiScaled(part, n)


def coeff_b(n: int, table: Optional[EulerTable] = None) -> PiScaled:
    return coeff_aA(n, -1, table)


def coeff_c(n: int, table: Optional[EulerTable] = None) -> PiScaled:
    return coeff_aA(n, -5, table)


def phi_radial_series(N: int) -> AsymptoticSeries:
    table = euler_numbers(N)
    coeffs = tuple(complex(coeff_a(n, table) / math.factorial(n)) for n in range(N + 1))
    return AsymptoticSeries(Scale.POWERS_OF_T, coeffs, 'φ(e^{-t}) ~ Σ a_n t^n / n!')


def h_series(A: Rational, N: int) -> AsymptoticSeries:
    table = euler_numbers(N)
    return AsymptoticSeries(Scale.POWERS_OF_INV_M, tuple(complex(coeff_aA(n, A, table)) for n in range(N + 1)),
                            f'h({A}/m; 12/m) ~ Σ a({A})_n m^-n')


def phi_radial_partial_sum(N: int, t: float) -> float:
    """Σ_{n≤N} a_n t^n / n!"""
    if not 0 < t <= 1:
        raise DomainError(f't must lie in (0, 1], not {t}')
    return phi_radial_series(N).partial_sum(t).real


def _check_root_index(k: int, N: int) -> None:
    if k < 1:
        raise DomainError(f'k must be positive, not {k}')
    if N < 0:
        raise DomainError(f'truncation order must be non-negative, not {N}')


def phi_root_asymptotic(k: int, N: int) -> complex:
    """The truncated expansion of ζ_{24m}^{-1} φ(ζ_m) in powers of 1/m, m = 2k+1"""
    _check_root_index(k, N)
    m = 2 * k + 1
    table = euler_numbers(N)
    main = cmath.sqrt(2j * m) * numeric.exact_root(-23 * m, 96)
    first, second = numeric.exact_root(-1, 24 * m), numeric.exact_root(-25, 24 * m)
    tail = sum(((first * complex(coeff_b(n, table)) + second * complex(coeff_c(n, table))) / m ** n
                for n in range(N + 1)), complex(0))
    return main + tail


def psi_root_asymptotic(k: int, N: int) -> complex:
    """The truncated expansion of ζ_{96k}^{-1} ψ(ζ_{4k}) in powers of 1/(4k)"""
    _check_root_index(k, N)
    m = 4 * k
    table = euler_numbers(N)
    main = cmath.sqrt(2j * k) * numeric.exact_root(k, 24)
    first, second = numeric.exact_root(-1, 96 * k), numeric.exact_root(-25, 96 * k)
    tail = sum(((first * complex(coeff_b(n, table)) + second * complex(coeff_c(n, table))) / m ** n
                for n in range(N + 1)), complex(0))
    return main - tail / 2


def phi_root_normalized(k: int) -> complex:
    """ζ_{24m}^{-1} φ(ζ_m) for m = 2k+1, from the exact finite sum"""
    m = 2 * k + 1
    return numeric.exact_root(-1, 24 * m) * eval_at_root(SeriesId.PHI, RootOfUnity(1, m))


def psi_root_normalized(k: int) -> complex:
    """ζ_{96k}^{-1} ψ(ζ_{4k}), from the exact finite sum"""
    return numeric.exact_root(-1, 96 * k) * eval_at_root(SeriesId.PSI, RootOfUnity(1, 4 * k))


def main_term_phase_offset(s: SeriesId, k: int, N: int) -> float:
    """The argument of (exact - partial sum of the tail) / main term

    A value far from zero points at a wrong constant phase in the main term.
    """
    if s is SeriesId.PHI:
        m = 2 * k + 1
        exact = phi_root_normalized(k)
        main = cmath.sqrt(2j * m) * numeric.exact_root(-23 * m, 96)
        asymptotic = phi_root_asymptotic(k, N)
    elif s is SeriesId.PSI:
        exact = psi_root_normalized(k)
        main = cmath.sqrt(2j * k) * numeric.exact_root(k, 24)
        asymptotic = psi_root_asymptotic(k, N)
    else:
        raise DomainError(f'no expansion at roots of unity for {s.value}')
    offset = cmath.phase((exact - (asymptotic - main)) / main)
    logger.debug('%s main term at k=%d: phase offset %.3g', s.value, k, offset)
    return offset


def suggest_truncation(series: AsymptoticSeries, x: float) -> int:
    """The first n ≥ 1 at which |term_n| exceeds |term_{n-1}|, or the length of the series

    This is only a suggestion: the divergence profile of these series is not
    characterised.
    """
    magnitudes: Sequence[float] = [abs(series.term(n, x)) for n in range(series.order + 1)]
    for n in range(1, len(magnitudes)):
        if magnitudes[n] > magnitudes[n - 1]:
            return n
    return len(magnitudes)
