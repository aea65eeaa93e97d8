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

import functools
import logging
import math
from typing import Iterator, Sequence, Tuple

from scipy import optimize

from .errors import DomainError, TableTooSmall
from .quadrature import QuadratureConfig, integrate, panel_count, truncation_radius

logger = logging.getLogger(__name__)

# w^{2n} sech(πw) peaks near 10⁷ at n = 10; beyond that double precision runs out
MAX_INTEGRAL_INDEX = 10


class EulerTable:
    """The even Euler numbers E_0, E_2, …, E_{2M}, the Taylor coefficients of sech

    Indexing is by the Euler number's own index: table[4] is E_4 = 5, and odd
    indices give 0.
    """
    __slots__ = ('_values',)

    def __init__(self, values: Sequence[int]):
        if not values:
            raise DomainError('an Euler table holds at least E_0')
        self._values: Tuple[int, ...] = tuple(values)

    @property
    def size(self) -> int:
        """M, where the last stored number is E_{2M}"""
        return len(self._values) - 1

    @property
    def values(self) -> Tuple[int, ...]:
        return self._values

    def covers(self, index: int) -> bool:
        return 0 <= index <= 2 * self.size

    def __getitem__(self, index: int) -> int:
        if not self.covers(index):
            raise TableTooSmall(index, 2 * self.size)
        if index % 2:
            return 0
        return self._values[index // 2]

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        return f'EulerTable({list(self._values)!r})'


@functools.lru_cache()
def euler_numbers(M: int) -> EulerTable:
    """Exact E_0 … E_{2M} from Σ_k binomial(2n, 2k)·E_{2k} = 0"""
    if M < 0:
        raise DomainError(f'table size must be non-negative, not {M}')
    values = [1]
    for n in range(1, M + 1):
        values.append(-sum(math.comb(2 * n, 2 * k) * values[k] for k in range(n)))
    return EulerTable(values)


def euler_truncation_radius(n: int, tolerance: float) -> float:
    """The point past which w^{2n} e^{-πw} stays below tolerance·10⁻²"""
    target = math.log(tolerance * 1e-2)
    if n == 0:
        return max(1.0, -target / math.pi)

    def excess(w: float) -> float:
        return 2 * n * math.log(w) - math.pi * w - target

    # the envelope peaks at 2n/π and decreases afterwards
    lo = max(1.0, 2 * n / math.pi)
    hi = 2 * lo
    while excess(hi) > 0:
        hi *= 2
    return float(optimize.brentq(excess, lo, hi))


def euler_integral(n: int, cfg: QuadratureConfig) -> float:
    """(-1)^n 4^n ∫ w^{2n} / cosh(πw) dw, which equals E_{2n}"""
    if not 0 <= n <= MAX_INTEGRAL_INDEX:
        raise DomainError(f'the Euler integral is only evaluated for 0 ≤ n ≤ {MAX_INTEGRAL_INDEX}, not {n}')
    expected = euler_numbers(n)[2 * n]
    radius = truncation_radius(cfg, euler_truncation_radius(n, cfg.tolerance))
    scale = max(1.0, abs(expected) / 4 ** n)

    def integrand(w: float) -> complex:
        return complex(w ** (2 * n) / math.cosh(math.pi * w))

    half = integrate(integrand, 0.0, radius, cfg, panels=panel_count(radius, 0.0), scale=scale, real=True,
                     what=f'Euler integral for E_{2 * n}')
    return (-1) ** n * 4 ** n * 2 * half.real


def euler_integral_residual(n: int, cfg: QuadratureConfig) -> float:
    """|quadrature - E_{2n}| / max(1, |E_{2n}|)"""
    expected = euler_numbers(n)[2 * n] if n >= 0 else 0
    value = euler_integral(n, cfg)
    residual = abs(value - expected) / max(1, abs(expected))
    logger.debug('E_%d = %d, quadrature %r, residual %.3g', 2 * n, expected, value, residual)
    return residual
