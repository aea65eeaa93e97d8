import math
import unittest

import pytest

from mocktheta import euler
from mocktheta.errors import DomainError, TableTooSmall
from mocktheta.quadrature import QuadratureConfig


def test_known_values() -> None:
    table = euler.euler_numbers(5)
    assert list(table) == [1, -1, 5, -61, 1385, -50521]
    assert table[0] == 1
    assert table[4] == 5
    assert table[3] == 0
    assert table.size == 5
    assert len(table) == 6


def test_recurrence() -> None:
    table = euler.euler_numbers(16)
    for n in range(1, 17):
        assert sum(math.comb(2 * n, 2 * k) * table[2 * k] for k in range(n + 1)) == 0


def test_table_bounds() -> None:
    table = euler.euler_numbers(3)
    assert table.covers(6)
    assert not table.covers(8)
    with pytest.raises(TableTooSmall) as raised:
        table[8]
    assert raised.value.index == 8
    assert raised.value.size == 6
    with pytest.raises(DomainError):
        euler.euler_numbers(-1)


def test_cached() -> None:
    assert euler.euler_numbers(7) is euler.euler_numbers(7)


class TestIntegral(unittest.TestCase):
    def setUp(self) -> None:
        self.cfg = QuadratureConfig(tolerance=1e-11)

    def test_small_indices(self) -> None:
        for n in range(7):
            self.assertLess(euler.euler_integral_residual(n, self.cfg), 1e-9, n)

    def test_signs(self) -> None:
        self.assertAlmostEqual(euler.euler_integral(0, self.cfg), 1, places=9)
        self.assertAlmostEqual(euler.euler_integral(1, self.cfg), -1, places=9)
        self.assertAlmostEqual(euler.euler_integral(2, self.cfg) / 5, 1, places=9)

    def test_largest_index(self) -> None:
        self.assertLess(euler.euler_integral_residual(euler.MAX_INTEGRAL_INDEX, QuadratureConfig()), 1e-6)

    def test_out_of_range(self) -> None:
        with self.assertRaises(DomainError):
            euler.euler_integral(-1, self.cfg)
        with self.assertRaises(DomainError):
            euler.euler_integral(euler.MAX_INTEGRAL_INDEX + 1, self.cfg)

    def test_truncation_radius(self) -> None:
        radius = euler.euler_truncation_radius(4, 1e-10)
        self.assertGreater(radius, 8 / math.pi)
        self.assertAlmostEqual(8 * math.log(radius) - math.pi * radius, math.log(1e-12), places=6)
