import math
from fractions import Fraction

import numpy as np
import pytest

from mocktheta import asymptotics, euler
from mocktheta.asymptotics import AsymptoticSeries, GaussianRational, PiScaled, Scale
from mocktheta.errors import DomainError, TableTooSmall
from mocktheta.mordell import QuadratureConfig, mordell_h
from mocktheta.qseries import AlphaPoint, Form, SeriesId, eval_phi


@pytest.mark.parametrize(('n', 'expected'), [(0, 2), (1, -2), (2, 14), (3, -254)])
def test_coeff_a(n: int, expected: int) -> None:
    assert asymptotics.coeff_a(n) == expected


@pytest.mark.parametrize('n', range(13))
def test_coeff_a_two_ways(n: int) -> None:
    table = euler.euler_numbers(12)
    assert asymptotics.coeff_a(n, table) == asymptotics.coeff_a_kernel(n, table)


def test_coeff_a_table_too_small() -> None:
    with pytest.raises(TableTooSmall):
        asymptotics.coeff_a(4, euler.euler_numbers(2))
    with pytest.raises(DomainError):
        asymptotics.coeff_a(-1)


def test_coeff_b() -> None:
    assert str(asymptotics.coeff_b(0)) == '1'
    assert asymptotics.coeff_b(2) == PiScaled(GaussianRational(-22), 2)
    assert asymptotics.coeff_b(3) == PiScaled(GaussianRational(0, -267), 3)
    assert asymptotics.coeff_b(4) == PiScaled(GaussianRational(Fraction(13612, 3)), 4)


def test_coeff_c() -> None:
    assert asymptotics.coeff_c(2) == PiScaled(GaussianRational(-10), 2)
    assert asymptotics.coeff_c(3) == PiScaled(GaussianRational(0, -87), 3)
    assert asymptotics.coeff_c(4) == PiScaled(GaussianRational(Fraction(4120, 3)), 4)
    assert abs(complex(asymptotics.coeff_aA(2, Fraction(-5, 1))) + 10 * math.pi ** 2) < 1e-12


def test_coefficient_phases() -> None:
    # b_n is a real multiple of i^n
    for n in range(9):
        part = asymptotics.coeff_b(n).part
        if n % 2:
            assert part.re == 0
        else:
            assert part.im == 0


def test_gaussian_rational() -> None:
    i = GaussianRational(0, 1)
    assert i * i == GaussianRational(-1)
    assert GaussianRational.i_power(3) == GaussianRational(0, -1)
    assert str(GaussianRational(Fraction(1, 2), -1)) == '1/2-i'
    assert str(GaussianRational(0, 3)) == '3i'
    assert str(PiScaled(GaussianRational(-22), 2)) == '(-22)*pi^2'
    assert complex(1 + i) == 1 + 1j


def test_radial_partial_sum_remainder() -> None:
    def remainder(t: float) -> float:
        return abs(asymptotics.phi_radial_partial_sum(4, t) - eval_phi(AlphaPoint(t), Form.SUMFORM, 1e-16).real)

    ratio = remainder(0.02) / remainder(0.01)
    assert 2 ** 4 * 0.7 <= ratio <= 2 ** 6 * 1.3


def test_radial_partial_sum_domain() -> None:
    with pytest.raises(DomainError):
        asymptotics.phi_radial_partial_sum(3, 0)
    with pytest.raises(DomainError):
        asymptotics.phi_radial_partial_sum(3, 2)


def test_series_container() -> None:
    series = AsymptoticSeries(Scale.POWERS_OF_INV_M, (1, 2, 4))
    assert series.order == 2
    assert series.partial_sum(2) == 1 + 1 + 1
    assert series.partial_sum(2, 0) == 1
    assert series.term(2, 2) == 1
    with pytest.raises(DomainError):
        AsymptoticSeries(Scale.POWERS_OF_T, ())


def test_suggest_truncation() -> None:
    series = asymptotics.phi_radial_series(10)
    assert 1 <= asymptotics.suggest_truncation(series, 0.5) <= 11
    assert asymptotics.suggest_truncation(AsymptoticSeries(Scale.POWERS_OF_T, (1, 0.5, 0.25)), 1) == 3


def _slope(ms, errors) -> float:
    return -float(np.polyfit(np.log(ms), np.log(errors), 1)[0])


@pytest.mark.parametrize('N', range(4))
def test_phi_root_expansion_decay(N: int) -> None:
    ks = [100, 141, 200, 283, 400]
    errors = [abs(asymptotics.phi_root_normalized(k) - asymptotics.phi_root_asymptotic(k, N)) for k in ks]
    assert _slope([2 * k + 1 for k in ks], errors) >= N + 0.8


@pytest.mark.parametrize('N', range(4))
def test_psi_root_expansion_decay(N: int) -> None:
    ks = [50, 71, 100, 141, 200]
    errors = [abs(asymptotics.psi_root_normalized(k) - asymptotics.psi_root_asymptotic(k, N)) for k in ks]
    assert _slope([4 * k for k in ks], errors) >= N + 0.8


def test_root_expansion_improves() -> None:
    k = 100
    exact = asymptotics.phi_root_normalized(k)
    errors = [abs(exact - asymptotics.phi_root_asymptotic(k, N)) for N in range(4)]
    assert errors == sorted(errors, reverse=True)
    # stopping at order 2 the error drops by about 2³ from k to 2k
    ratio = (abs(asymptotics.psi_root_normalized(50) - asymptotics.psi_root_asymptotic(50, 2))
             / abs(asymptotics.psi_root_normalized(100) - asymptotics.psi_root_asymptotic(100, 2)))
    assert 8 * 0.6 <= ratio <= 8 * 1.4


@pytest.mark.parametrize('series', [SeriesId.PHI, SeriesId.PSI])
def test_main_term_phase(series: SeriesId) -> None:
    assert abs(asymptotics.main_term_phase_offset(series, 200, 3)) < 1e-3


@pytest.mark.parametrize('A', [-1, -5])
def test_h_expansion_decay(A: int) -> None:
    cfg = QuadratureConfig(tolerance=1e-12)
    ms = [400, 566, 800, 1131, 1600]
    values = [mordell_h(A / m, 12 / m, cfg) for m in ms]
    series = asymptotics.h_series(A, 3)
    for N in range(4):
        errors = [abs(value - series.partial_sum(m, N)) for m, value in zip(ms, values)]
        assert abs(_slope(ms, errors) - (N + 1)) <= 0.2, N


def test_bad_root_index() -> None:
    with pytest.raises(DomainError):
        asymptotics.phi_root_asymptotic(0, 2)
    with pytest.raises(DomainError):
        asymptotics.psi_root_asymptotic(3, -1)
    with pytest.raises(DomainError):
        asymptotics.main_term_phase_offset(SeriesId.F, 3, 1)
