import cmath
import math

import numpy as np
import pytest

from mocktheta import numeric, qseries
from mocktheta.errors import DomainError, NonConvergence, WrongParity
from mocktheta.qseries import AlphaPoint, Form, Parity, RootOfUnity, SeriesId, eval_at_root


@pytest.fixture
def points():
    rng = np.random.default_rng(0)
    return [AlphaPoint.from_q(0.9 * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform()))
            for _ in range(100)]


def test_special_values() -> None:
    assert abs(eval_at_root(SeriesId.PHI, RootOfUnity(0, 1)) - 2) < 1e-14
    assert abs(eval_at_root(SeriesId.PSI, RootOfUnity(1, 4)) - 1j) < 1e-14
    assert abs(eval_at_root(SeriesId.PSI, RootOfUnity(3, 4)) + 1j) < 1e-14
    assert abs(eval_at_root(SeriesId.PSI, RootOfUnity(-1, 4)) + 1j) < 1e-14


def test_F_at_small_roots() -> None:
    assert eval_at_root(SeriesId.F, RootOfUnity(0, 1)) == 1
    assert abs(eval_at_root(SeriesId.F, RootOfUnity(1, 2)) - 3) < 1e-14
    # 1 + (1 - ζ_3) + (1 - ζ_3)(1 - ζ_3²) = 5 - ζ_3
    zeta = cmath.exp(2j * math.pi / 3)
    assert abs(eval_at_root(SeriesId.F, RootOfUnity(1, 3)) - (5 - zeta)) < 1e-14


def test_dual_forms(points) -> None:
    for p in points:
        assert abs(2 * qseries.eval_G(p) - qseries.eval_phi(p, Form.EULERIAN)) < 1e-10, p
        assert abs(qseries.eval_psi(p, Form.SUMFORM) - qseries.eval_psi(p, Form.EULERIAN)) < 1e-10, p


def test_near_origin() -> None:
    p = AlphaPoint.from_q(1e-3)
    q = 1e-3
    assert abs(qseries.eval_phi(p) - (1 + q / (1 + q * q) + q ** 4 / ((1 + q * q) * (1 + q ** 4)))) < 1e-15
    assert abs(qseries.eval_psi(p, Form.SUMFORM) - (q + q ** 2 + q ** 3)) < 1e-8
    # the extension of G into the disc is φ/2, so G(q) → 1/2 as q → 0
    assert abs(qseries.eval_G(p) - 0.5) < 1e-3


def test_conjugation() -> None:
    p = AlphaPoint(0.4 + 1.3j)
    mirror = AlphaPoint(0.4 - 1.3j)
    assert abs(qseries.eval_phi(mirror) - qseries.eval_phi(p).conjugate()) < 1e-12
    assert abs(qseries.eval_psi(mirror) - qseries.eval_psi(p).conjugate()) < 1e-12


@pytest.mark.parametrize(('series', 'root'), [
    (SeriesId.PHI, RootOfUnity(1, 3)),
    (SeriesId.PHI, RootOfUnity(2, 5)),
    (SeriesId.PSI, RootOfUnity(1, 4)),
    (SeriesId.PSI, RootOfUnity(3, 8)),
])
def test_radial_limit(series: SeriesId, root: RootOfUnity) -> None:
    exact = eval_at_root(series, root)
    evaluate = qseries.eval_psi if series is SeriesId.PSI else qseries.eval_phi
    for t in (1e-5, 1e-6):
        p = AlphaPoint(complex(t, -2 * math.pi * root.numerator / root.denominator))
        value = evaluate(p, Form.SUMFORM, 1e-16)
        assert abs(value - exact) < 1e-3 * max(1, abs(exact)), (t, value, exact)


@pytest.mark.parametrize(('series', 'root'), [
    (SeriesId.PHI, RootOfUnity(1, 4)),
    (SeriesId.G, RootOfUnity(1, 2)),
    (SeriesId.PSI, RootOfUnity(1, 3)),
    (SeriesId.PSI, RootOfUnity(1, 6)),
])
def test_wrong_parity(series: SeriesId, root: RootOfUnity) -> None:
    with pytest.raises(WrongParity) as raised:
        eval_at_root(series, root)
    assert raised.value.root == str(root)
    assert isinstance(raised.value, DomainError)


def test_G_is_half_phi_at_roots() -> None:
    for order in (3, 5, 7, 9):
        root = RootOfUnity(1, order)
        assert abs(2 * eval_at_root(SeriesId.G, root) - eval_at_root(SeriesId.PHI, root)) < 1e-14


@pytest.mark.parametrize('order', [1, 3, 9, 25, 101])
def test_vanishing_index_phi(order: int) -> None:
    # (q; q²)_n first vanishes at the factor 1 - q^{2j+1} with 2j+1 ≡ 0 mod N
    root = RootOfUnity(1, order)
    index = qseries.vanishing_index(SeriesId.PHI, root)
    assert (2 * (index - 1) + 1) % order == 0
    assert index == (order + 1) // 2


def test_vanishing_index_psi() -> None:
    # 1 + q^{2j+2} = 0 needs 2j+2 ≡ 2k mod 4k at ζ_{4k}
    assert qseries.vanishing_index(SeriesId.PSI, RootOfUnity(1, 4)) == 1
    assert qseries.vanishing_index(SeriesId.PSI, RootOfUnity(1, 12)) == 3


def test_large_root_is_finite() -> None:
    value = eval_at_root(SeriesId.PHI, RootOfUnity(1, 801))
    assert cmath.isfinite(value)
    # |φ(ζ_m)| grows like √(2m)
    assert 0.5 * math.sqrt(2 * 801) < abs(value) < 2 * math.sqrt(2 * 801)


def test_roots_reduce() -> None:
    assert RootOfUnity(2, 6) == RootOfUnity(1, 3)
    assert RootOfUnity(-1, 4) == RootOfUnity(3, 4)
    assert RootOfUnity(5, 4) == RootOfUnity(1, 4)
    assert RootOfUnity(0, 7) == RootOfUnity(0, 1)
    assert str(RootOfUnity(6, 8)) == '3/4'
    assert RootOfUnity(1, 4).value == 1j
    assert RootOfUnity(1, 12).parity is Parity.FOURFOLD
    assert RootOfUnity(1, 6).parity is Parity.OTHER
    with pytest.raises(DomainError):
        RootOfUnity(1, 0)


@pytest.mark.parametrize('alpha', [0, -0.1, complex('nan'), complex(-1, 2)])
def test_bad_alpha(alpha: complex) -> None:
    with pytest.raises(DomainError):
        AlphaPoint(alpha)


def test_boundary_rejected() -> None:
    with pytest.raises(DomainError):
        qseries.eval_phi(AlphaPoint(2j))
    with pytest.raises(DomainError):
        qseries.eval_psi(AlphaPoint(1), tol=0)
    with pytest.raises(DomainError):
        AlphaPoint.from_q(1.5)


def test_alpha_point() -> None:
    p = AlphaPoint.from_tau(1j)
    assert p.alpha == math.pi
    assert abs(p.q - math.exp(-math.pi)) < 1e-16
    assert abs(p.power(0.5) - math.exp(-math.pi / 2)) < 1e-16
    assert p.interior
    assert not RootOfUnity(1, 3).alpha_point().interior


@pytest.mark.parametrize('form', [Form.EULERIAN, Form.SUMFORM])
def test_term_cap(monkeypatch, form: Form) -> None:
    # at α = 1e-4 none of the sums meets the stopping rule within five terms
    cap = 5
    monkeypatch.setattr(qseries, 'TERM_CAP', cap)
    with pytest.raises(NonConvergence) as raised:
        qseries.eval_phi(AlphaPoint(1e-4), form)
    assert raised.value.terms == cap
    with pytest.raises(NonConvergence):
        qseries.eval_psi(AlphaPoint(1e-4), form)


def test_qpochhammer() -> None:
    assert qseries.qpochhammer(0.5, 0.5, 0) == 1
    assert qseries.qpochhammer(0.5, 0.25, 2) == (1 - 0.5) * (1 - 0.125)
    assert qseries.qpochhammer(-1, -1, 3) == 0
    assert qseries.qpochhammer(2, 3, 3) == (1 - 2) * (1 - 6) * (1 - 18)
    with pytest.raises(DomainError):
        qseries.qpochhammer(0.5, 0.5, -1)


def test_qpochhammer_recurrence() -> None:
    rng = np.random.default_rng(0)
    for _ in range(20):
        a = complex(*rng.uniform(-1.5, 1.5, 2))
        b = 0.95 * complex(*rng.uniform(-0.7, 0.7, 2))
        n = int(rng.integers(0, 30))
        step = qseries.qpochhammer(a, b, n) * (1 - a * b ** n)
        assert abs(qseries.qpochhammer(a, b, n + 1) - step) < 1e-12 * max(1.0, abs(step))


def test_root_sums_are_pochhammer_sums() -> None:
    root = RootOfUnity(2, 7)
    zeta = root.value
    terms = qseries.vanishing_index(SeriesId.F, root)
    expected = sum(qseries.qpochhammer(zeta, zeta, n) for n in range(terms))
    assert abs(eval_at_root(SeriesId.F, root) - expected) < 1e-12
    terms = qseries.vanishing_index(SeriesId.G, root)
    expected = sum((-1) ** n * qseries.qpochhammer(zeta, zeta * zeta, n) for n in range(terms))
    assert abs(eval_at_root(SeriesId.G, root) - expected) < 1e-12


def test_exact_roots() -> None:
    assert numeric.exact_root(3, 12) == 1j
    assert numeric.exact_root(10 ** 18 + 2, 4) == -1
    assert abs(numeric.exact_root(10 ** 18, 3) - cmath.exp(2j * math.pi / 3)) < 1e-15
    assert numeric.reduced_turn(3, 4) == numeric.reduced_turn(-1, 4)
    assert numeric.root_sum_digits(100) == 32
    assert numeric.working_context(30) is numeric.working_context(30)
    with pytest.raises(DomainError):
        numeric.exact_root(1, 0)
