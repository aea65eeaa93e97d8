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

# Verification suites.  Each suite returns a list of Checks in a fixed order;
# random sample points come from numpy's default generator with a fixed seed,
# so two runs with the same arguments give identical output.

import cmath
import inspect
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import asymptotics, euler, jets, mordell, transforms
from .qseries import AlphaPoint, Form, RootOfUnity, SeriesId, eval_at_root, eval_G, eval_phi, eval_psi
from .quadrature import QuadratureConfig

logger = logging.getLogger(__name__)

# the quadrature used by the suites, a little tighter than the thresholds they check
SUITE_CONFIG = QuadratureConfig(tolerance=1e-11)


@dataclass(frozen=True)
class Check:
    """One verified property

    :value: the measured quantity (usually a residual)
    :bound: human readable acceptance condition, like '< 1e-09'
    :passed: whether value met the bound
    """
    suite: str
    name: str
    value: float
    bound: str
    passed: bool
    inputs: Dict[str, str] = field(default_factory=dict)


def _below(suite: str, name: str, value: float, threshold: float, **inputs: object) -> Check:
    passed = math.isfinite(value) and value < threshold
    return Check(suite, name, value, f'< {threshold:.3g}', passed, {k: str(v) for k, v in inputs.items()})


def _at_least(suite: str, name: str, value: float, threshold: float, **inputs: object) -> Check:
    passed = math.isfinite(value) and value >= threshold
    return Check(suite, name, value, f'>= {threshold:.3g}', passed, {k: str(v) for k, v in inputs.items()})


def _within(suite: str, name: str, value: float, lo: float, hi: float, **inputs: object) -> Check:
    passed = math.isfinite(value) and lo <= value <= hi
    return Check(suite, name, value, f'in [{lo:.3g}, {hi:.3g}]', passed, {k: str(v) for k, v in inputs.items()})


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def _fit_exponent(ms: Sequence[float], errors: Sequence[float]) -> float:
    """Minus the slope of log(error) against log(m)"""
    slope, _intercept = np.polyfit(np.log(ms), np.log(errors), 1)
    return float(-slope)


def special_values() -> List[Check]:
    checks = []
    for series, root, expected in [
        (SeriesId.PHI, RootOfUnity(0, 1), 2),
        (SeriesId.PSI, RootOfUnity(1, 4), 1j),
        (SeriesId.PSI, RootOfUnity(3, 4), -1j),
        (SeriesId.F, RootOfUnity(0, 1), 1),
        (SeriesId.F, RootOfUnity(1, 2), 3),
    ]:
        residual = abs(eval_at_root(series, root) - expected)
        checks.append(_below('special-values', f'{series.value} at {root}', residual, 1e-14))
    return checks


def dual_forms(samples: int = 100, seed: int = 0) -> List[Check]:
    rng = _rng(seed)
    checks = []
    for i in range(samples):
        q = 0.9 * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
        p = AlphaPoint.from_q(q)
        phi_gap = abs(2 * eval_G(p) - eval_phi(p, Form.EULERIAN))
        psi_gap = abs(eval_psi(p, Form.SUMFORM) - eval_psi(p, Form.EULERIAN))
        checks.append(_below('dual-forms', f'2G - φ #{i}', phi_gap, 1e-10, q=q))
        checks.append(_below('dual-forms', f'ψ forms #{i}', psi_gap, 1e-10, q=q))
    return checks


def _watson_samples(samples: int, seed: int) -> List[AlphaPoint]:
    rng = _rng(seed)
    return [AlphaPoint(complex(rng.uniform(0.3, 3.0), rng.uniform(-3.0, 3.0))) for _ in range(samples)]


def watson(samples: int = 20, seed: int = 0, cfg: QuadratureConfig = SUITE_CONFIG) -> List[Check]:
    checks = []
    points = [AlphaPoint(1), AlphaPoint(0.8 + 0.5j), AlphaPoint(2), AlphaPoint(math.pi)]
    for p in points + _watson_samples(samples, seed):
        phi = transforms.watson_phi_residual(p, cfg)
        psi = transforms.watson_psi_residual(p, cfg)
        checks.append(_below('watson', 'φ transformation', phi, 1e-8, alpha=p.alpha))
        checks.append(_below('watson', 'ψ transformation', psi, 1e-8, alpha=p.alpha))
        checks.append(_below('watson', 'composition', transforms.watson_composition_residual(p), 1e-8, alpha=p.alpha))
    # approaching roots of unity radially
    for k, l in [(1, 1), (2, 1), (1, 2)]:
        for t in (1e-1, 1e-2, 1e-3):
            p = AlphaPoint(complex(t, -2 * math.pi * l / (2 * k + 1)))
            checks.append(_below('watson', 'φ transformation near a root', transforms.watson_phi_residual(p, cfg),
                                 1e-6, k=k, l=l, t=t))
    return checks


def zwegers(samples: int = 20, seed: int = 0, cfg: QuadratureConfig = SUITE_CONFIG) -> List[Check]:
    rng = _rng(seed)
    points = [(0j, 1j), (0.1 + 0j, 2j), (-1 / 12 + 0j, 0.5 + 2j)]
    for _ in range(samples):
        z = complex(rng.uniform(-1, 1), rng.uniform(-0.25, 0.25))
        tau = complex(rng.uniform(-1, 1), rng.uniform(0.5, 3))
        points.append((z, tau))
    checks = []
    for z, tau in points:
        checks.append(_below('zwegers', 'h(z/τ; -1/τ)', mordell.zwegers_residual(z, tau, cfg), 1e-9, z=z, tau=tau))
    for z, tau in points[:5]:
        gap = abs(mordell.mordell_h(z, tau, cfg) - mordell.mordell_h(-z, tau, cfg))
        checks.append(_below('zwegers', 'h even in z', gap, 1e-10, z=z, tau=tau))
    return checks


def reflection(samples: int = 10, seed: int = 0, cfg: QuadratureConfig = SUITE_CONFIG) -> List[Check]:
    rng = _rng(seed)
    points = [AlphaPoint(math.pi), AlphaPoint(1), AlphaPoint(2 + 1j)]
    points += [AlphaPoint(complex(rng.uniform(0.5, 3), rng.uniform(-2, 2))) for _ in range(samples)]
    checks = []
    for p in points:
        bound = 1e-12 if p.alpha == math.pi else 1e-9
        checks.append(_below('remark22', 'W(π²/α) = (α/π)^{3/2} W(α)', mordell.remark_residual(p, cfg), bound,
                             alpha=p.alpha))
    for p in points[:3]:
        phi_gap, psi_gap = transforms.prefactor_mismatch(p, cfg)
        checks.append(_below('remark22', 'integral prefactor, φ', phi_gap, 1e-12, alpha=p.alpha))
        checks.append(_below('remark22', 'integral prefactor, ψ', psi_gap, 1e-12, alpha=p.alpha))
    return checks


def _w_samples(samples: int, seed: int) -> List[AlphaPoint]:
    rng = _rng(seed)
    points = []
    for _ in range(samples):
        re = rng.uniform(0.5, 3)
        points.append(AlphaPoint(complex(re, rng.uniform(-re, re))))
    return points


def wforms(samples: int = 20, seed: int = 0, cfg: QuadratureConfig = SUITE_CONFIG) -> List[Check]:
    checks = []
    for p in [AlphaPoint(1), AlphaPoint(2 - 1j), AlphaPoint(0.5 + 0.3j), *_w_samples(samples, seed)]:
        values = [mordell.w_direct(p, cfg), mordell.w_extended(p, cfg), mordell.w_via_h(p, cfg)]
        spread = max(abs(a - b) for a in values for b in values)
        checks.append(_below('wforms', 'three forms of W', spread, 1e-9, alpha=p.alpha))
        mirror = mordell.w_extended(AlphaPoint(p.alpha.conjugate()), cfg)
        checks.append(_below('wforms', 'conjugation symmetry', abs(mirror - values[1].conjugate()), 1e-10,
                             alpha=p.alpha))
    for m in (5, 12):
        p = AlphaPoint(complex(0, -2 * math.pi / m))
        gap = abs(mordell.w_at_imaginary(m, cfg) - mordell.w_extended(p, cfg))
        checks.append(_below('wforms', 'imaginary axis', gap, 1e-8, m=m))

    refined = cfg.refined()
    for p in (AlphaPoint(1), AlphaPoint(complex(0, -2 * math.pi / 7))):
        change = abs(mordell.w_extended(p, cfg) - mordell.w_extended(p, refined))
        checks.append(_below('wforms', 'refinement stability', change, cfg.tolerance, alpha=p.alpha))

    ms = [50, 100, 200, 400, 800]
    growth = _fit_exponent(ms, [1 / abs(mordell.w_at_imaginary(m, cfg)) for m in ms])
    checks.append(_within('wforms', 'growth of |W(-2πi/m)|', growth, 0.45, 0.55))
    return checks


def euler_suite(n_max: int = 6, cfg: QuadratureConfig = SUITE_CONFIG) -> List[Check]:
    checks = []
    table = euler.euler_numbers(16)
    for n in range(1, table.size + 1):
        recurrence = sum(math.comb(2 * n, 2 * k) * table[2 * k] for k in range(n + 1))
        checks.append(_below('euler', 'binomial recurrence', abs(recurrence), 0.5, n=n))
    for n in range(n_max + 1):
        checks.append(_below('euler', f'integral for E_{2 * n}', euler.euler_integral_residual(n, cfg), 1e-9, n=n))
    return checks


def _radial_roots() -> List[tuple]:
    roots = []
    for order in range(1, 16, 2):
        roots += [(SeriesId.PHI, RootOfUnity(l, order)) for l in range(order) if math.gcd(l, order) == 1]
    for order in (4, 8, 12):
        roots += [(SeriesId.PSI, RootOfUnity(l, order)) for l in range(order) if math.gcd(l, order) == 1]
    return roots


def _radial_value(series: SeriesId, root: RootOfUnity, t: float) -> complex:
    p = AlphaPoint(complex(t, -2 * math.pi * root.numerator / root.denominator))
    if series is SeriesId.PSI:
        return eval_psi(p, Form.SUMFORM, 1e-16)
    return eval_phi(p, Form.SUMFORM, 1e-16)


def radial() -> List[Check]:
    checks = []
    expansion = jets.radial_expansion(SeriesId.PHI, RootOfUnity(0, 1), 8)
    table = euler.euler_numbers(12)
    for n in range(9):
        expected = asymptotics.coeff_a(n, table) / math.factorial(n)
        gap = abs(expansion.coeffs[n] - float(expected)) / max(1.0, abs(float(expected)))
        checks.append(_below('radial', 'a_n/n! against jets', gap, 1e-9, n=n))
    for n in range(13):
        same = asymptotics.coeff_a(n, table) == asymptotics.coeff_a_kernel(n, table)
        checks.append(Check('radial', 'a_n against the kernel expansion', 0.0 if same else 1.0, 'exact', same,
                            {'n': str(n)}))

    def remainder(t: float) -> float:
        return abs(asymptotics.phi_radial_partial_sum(4, t) - eval_phi(AlphaPoint(t), Form.SUMFORM, 1e-16).real)

    ratio = remainder(0.02) / remainder(0.01)
    checks.append(_within('radial', 'remainder of the order 4 sum', ratio, 2 ** 4 * 0.7, 2 ** 6 * 1.3))

    for series, root in _radial_roots():
        coefficients = jets.radial_expansion(series, root, 4)
        c0 = coefficients.coeffs[0]
        scale = max(1.0, abs(c0))
        exact = eval_at_root(series, root)
        checks.append(_below('radial', 'c_0 against the finite sum', abs(c0 - exact) / scale, 1e-12,
                             series=series.value, root=root))
        # the sum form and the jet both need 0.6·N²·t well below 1
        t = 1e-4 if root.denominator <= 8 else 1e-5
        near = _radial_value(series, root, t)
        checks.append(_below('radial', 'order 4 jet', abs(near - coefficients.partial_sum(t)) / scale, 1e-6,
                             series=series.value, root=root, t=t))
        if root.denominator > 8:
            continue
        t1, t2 = 1e-4, 1e-5
        extrapolated = (10 * _radial_value(series, root, t2) - _radial_value(series, root, t1)) / 9
        bound = 2 * abs(coefficients.coeffs[2]) * t1 * t2 + abs(coefficients.coeffs[3]) * t1 ** 3 / 4 + 1e-10 * scale
        checks.append(_below('radial', 'Richardson limit', abs(extrapolated - exact), bound,
                             series=series.value, root=root))
    return checks


def valuation(k_max: int = 5) -> List[Check]:
    checks = []
    for k in range(1, k_max + 1):
        order = 2 * k + 1
        for l in range(1, order):
            if math.gcd(l, order) != 1:
                continue
            root = RootOfUnity(l, order)
            previous = 0
            for n, product in enumerate(jets.pochhammer_jets(root, 6, odd=True)):
                if n > 4 * order:
                    break
                bound = (n + k) // order
                found = product.valuation()
                ok = found >= bound and found >= previous
                checks.append(Check('valuation', '(q;q²)_n', float(found), f'>= {bound}', ok,
                                    {'root': str(root), 'n': str(n)}))
                previous = found
    return checks


def quantum(k_max: int = 10, cfg: QuadratureConfig = SUITE_CONFIG) -> List[Check]:
    checks = []
    for k in range(1, k_max + 1):
        order = 2 * k + 1
        for l in range(1, order):
            if math.gcd(l, order) == 1:
                checks.append(_below('quantum', 'φ at a root', transforms.quantum_residual_phi(k, l, cfg), 1e-6,
                                     k=k, l=l))
    for k in range(1, k_max + 1):
        order = 4 * k
        for l in range(1, order, 2):
            if math.gcd(l, order) == 1:
                checks.append(_below('quantum', 'ψ at a root', transforms.quantum_residual_psi(k, l, cfg), 1e-6,
                                     k=k, l=l))
    return checks


PHI_ASYMPTOTIC_KS = (100, 141, 200, 283, 400)    # m = 2k+1 from 201 to 801
PSI_ASYMPTOTIC_KS = (50, 71, 100, 141, 200)      # m = 4k from 200 to 800
H_EXPANSION_MS = (400, 566, 800, 1131, 1600)


def roots_asymptotic(n_max: int = 3) -> List[Check]:
    checks = []
    cases: List[tuple] = [
        (SeriesId.PHI, PHI_ASYMPTOTIC_KS, asymptotics.phi_root_normalized, asymptotics.phi_root_asymptotic,
         lambda k: 2 * k + 1),
        (SeriesId.PSI, PSI_ASYMPTOTIC_KS, asymptotics.psi_root_normalized, asymptotics.psi_root_asymptotic,
         lambda k: 4 * k),
    ]
    for series, ks, exact, expansion, modulus in cases:
        values = [exact(k) for k in ks]
        ms = [modulus(k) for k in ks]
        for N in range(n_max + 1):
            errors = [abs(value - expansion(k, N)) for k, value in zip(ks, values)]
            checks.append(_at_least('roots-asymptotic', f'decay of the {series.value} expansion',
                                    _fit_exponent(ms, errors), N + 0.8, N=N))
        offset = asymptotics.main_term_phase_offset(series, ks[-1], n_max)
        finding = 'none' if abs(offset) <= 1e-3 else 'constant phase offset in the main term'
        checks.append(Check('roots-asymptotic', f'{series.value} main term phase', offset, 'report', True,
                            {'k': str(ks[-1]), 'finding': finding}))

    cfg = QuadratureConfig(tolerance=1e-12)
    for A in (-1, -5):
        values = [mordell.mordell_h(A / m, 12 / m, cfg) for m in H_EXPANSION_MS]
        series_A = asymptotics.h_series(A, n_max)
        for N in range(n_max + 1):
            errors = [abs(value - series_A.partial_sum(m, N)) for m, value in zip(H_EXPANSION_MS, values)]
            slope = _fit_exponent(H_EXPANSION_MS, errors)
            checks.append(_within('roots-asymptotic', 'decay of the h expansion', slope, N + 0.8, N + 1.2, A=A, N=N))
    return checks


SUITES: Dict[str, Callable[..., List[Check]]] = {
    'watson': watson,
    'zwegers': zwegers,
    'remark22': reflection,
    'quantum': quantum,
    'euler': euler_suite,
    'wforms': wforms,
    'radial': radial,
    'roots-asymptotic': roots_asymptotic,
    'dual-forms': dual_forms,
    'special-values': special_values,
    'valuation': valuation,
}


def run_suite(name: str, *, k_max: Optional[int] = None, n_max: Optional[int] = None, samples: Optional[int] = None,
              seed: Optional[int] = None, cfg: Optional[QuadratureConfig] = None) -> List[Check]:
    """Run a suite, passing along only the parameters it understands"""
    suite = SUITES[name]
    offered = {'k_max': k_max, 'n_max': n_max, 'samples': samples, 'seed': seed, 'cfg': cfg}
    accepted = inspect.signature(suite).parameters
    kwargs = {key: value for key, value in offered.items() if value is not None and key in accepted}
    logger.debug('running suite %s with %s', name, kwargs)
    return suite(**kwargs)
