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

# Watson's transformations relate φ at q = e^{-α} to ψ at q₁ = e^{-π²/α}
# and back, up to the obstruction integral W(α):
#
#   q^{-1/24} φ(q) = √(4π/α) q₁^{-1/24} ψ(q₁) + √(6α/π) W(α)
#   q^{-1/24} ψ(q) = √(π/4α) q₁^{-1/24} φ(q₁) - √(3α/2π) W(α)
#
# All square roots are principal.  At α = -2πil/N the q-series become the
# exact finite sums at ζ_N^l and at its image root.

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import DomainError, WrongParity
from .mordell import kernel_integral, w_at_imaginary, w_extended
from .qseries import AlphaPoint, Form, Parity, RootOfUnity, SeriesId, eval_at_root, eval_phi, eval_psi
from .quadrature import QuadratureConfig

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = QuadratureConfig()

# below this real part the Eulerian forms lose too much to cancellation
EULERIAN_THRESHOLD = 0.3
SERIES_TOLERANCE = 1e-15


@dataclass(frozen=True)
class TransformPair:
    """A point and its image under α ↦ π²/α, the z ↦ -1/z of α = -πiz"""
    source: AlphaPoint
    image: AlphaPoint


def q1_of(p: AlphaPoint) -> AlphaPoint:
    return AlphaPoint(math.pi ** 2 / p.alpha)


def transform_pair(p: AlphaPoint) -> TransformPair:
    return TransformPair(p, q1_of(p))


def _image_of(numerator: int, denominator: int) -> RootOfUnity:
    # e^{-π²/α} at α = -2πil/N is ζ_{4l}^{-N}
    if numerator == 0:
        raise DomainError('α = 0 has no image under α ↦ π²/α')
    if numerator < 0:
        return RootOfUnity(denominator, -4 * numerator)
    return RootOfUnity(-denominator, 4 * numerator)


def root_image(r: RootOfUnity) -> RootOfUnity:
    """The image of ζ_N^l under q ↦ q₁, taking α = -2πil/N

    ζ_{2k+1}^l goes to ζ_{4l}^{-(2k+1)} and ζ_{4k}^l to ζ_l^{-k}.
    """
    if r.parity is Parity.OTHER:
        raise WrongParity('q ↦ q₁', str(r), 'needs odd order or order divisible by 4')
    return _image_of(r.numerator, r.denominator)


def _phi(p: AlphaPoint) -> complex:
    form = Form.EULERIAN if p.alpha.real >= EULERIAN_THRESHOLD else Form.SUMFORM
    return eval_phi(p, form, SERIES_TOLERANCE)


def _psi(p: AlphaPoint) -> complex:
    form = Form.EULERIAN if p.alpha.real >= EULERIAN_THRESHOLD else Form.SUMFORM
    return eval_psi(p, form, SERIES_TOLERANCE)


def _require_interior(p: AlphaPoint) -> None:
    if not p.interior:
        raise DomainError(f'Watson transformations are evaluated inside the disc, not at {p}')


def watson_phi_residual(p: AlphaPoint, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    _require_interior(p)
    alpha = p.alpha
    image = q1_of(p)
    lhs = p.power(-1 / 24) * _phi(p)
    rhs = cmath.sqrt(4 * math.pi / alpha) * image.power(-1 / 24) * _psi(image)
    rhs += cmath.sqrt(6 * alpha / math.pi) * w_extended(p, cfg)
    return abs(lhs - rhs)


def watson_psi_residual(p: AlphaPoint, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    _require_interior(p)
    alpha = p.alpha
    image = q1_of(p)
    lhs = p.power(-1 / 24) * _psi(p)
    rhs = cmath.sqrt(math.pi / (4 * alpha)) * image.power(-1 / 24) * _phi(image)
    rhs -= cmath.sqrt(3 * alpha / (2 * math.pi)) * w_extended(p, cfg)
    return abs(lhs - rhs)


def watson_composition_residual(p: AlphaPoint) -> float:
    """Check W(π²/α) = (α/π)^{3/2} W(α) using nothing but q-series

    The φ transformation at α and the ψ transformation at π²/α each solve
    for one side of the identity; no integral is evaluated.
    """
    _require_interior(p)
    alpha = p.alpha
    image = q1_of(p)
    alpha1 = image.alpha
    phi_part = p.power(-1 / 24) * _phi(p)
    psi_part = image.power(-1 / 24) * _psi(image)
    w = (phi_part - cmath.sqrt(4 * math.pi / alpha) * psi_part) / cmath.sqrt(6 * alpha / math.pi)
    w1 = (cmath.sqrt(math.pi / (4 * alpha1)) * phi_part - psi_part) / cmath.sqrt(3 * alpha1 / (2 * math.pi))
    return abs(w1 - (alpha / math.pi) ** 1.5 * w)


def _check_root(k: int, l: int, order: int) -> None:
    if k < 1:
        raise DomainError(f'k must be positive, not {k}')
    if l < 1:
        raise DomainError(f'l must be positive, not {l}')
    if math.gcd(l, order) != 1:
        raise WrongParity('quantum transformation', f'{l}/{order}', 'l must be coprime to the order')


def quantum_residual_phi(k: int, l: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """The φ transformation at α = -2πil/(2k+1), on the unit circle

    φ and ψ come from the exact finite sums at ζ_{2k+1}^l and its image,
    W from Mordell integrals with a real modulus.
    """
    order = 2 * k + 1
    _check_root(k, l, order)
    alpha = complex(0.0, -2 * math.pi * l / order)
    alpha1 = complex(0.0, math.pi * order / (2 * l))
    lhs = cmath.exp(alpha / 24) * eval_at_root(SeriesId.PHI, RootOfUnity(l, order))
    rhs = cmath.sqrt(4 * math.pi / alpha) * cmath.exp(alpha1 / 24) * eval_at_root(SeriesId.PSI, _image_of(l, order))
    rhs += cmath.sqrt(6 * alpha / math.pi) * w_at_imaginary(Fraction(order, l), cfg)
    residual = abs(lhs - rhs)
    logger.debug('φ transformation at ζ_%d^%d: residual %.3g', order, l, residual)
    return residual


def quantum_residual_psi(k: int, l: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """The ψ transformation at α = -2πil/(4k), on the unit circle"""
    order = 4 * k
    _check_root(k, l, order)
    alpha = complex(0.0, -2 * math.pi * l / order)
    alpha1 = complex(0.0, math.pi * order / (2 * l))
    lhs = cmath.exp(alpha / 24) * eval_at_root(SeriesId.PSI, RootOfUnity(l, order))
    rhs = cmath.sqrt(math.pi / (4 * alpha)) * cmath.exp(alpha1 / 24) * eval_at_root(SeriesId.PHI, _image_of(l, order))
    rhs -= cmath.sqrt(3 * alpha / (2 * math.pi)) * w_at_imaginary(Fraction(order, l), cfg)
    residual = abs(lhs - rhs)
    logger.debug('ψ transformation at ζ_%d^%d: residual %.3g', order, l, residual)
    return residual


def prefactor_mismatch(p: AlphaPoint, cfg: QuadratureConfig = DEFAULT_CONFIG) -> Tuple[float, float]:
    """Compare the two ways of writing the integral term, for φ and for ψ

    One form multiplies the bare kernel integral I(α) by √(2π/3α) and
    √(π/6α); the other multiplies W(α) = (π/3α) I(α) by √(6α/π) and
    √(3α/2π).  A constant-factor mismatch would show up here.
    """
    alpha = p.alpha
    integral = kernel_integral(p, cfg)
    w = math.pi / (3 * alpha) * integral
    phi_gap = abs(cmath.sqrt(2 * math.pi / (3 * alpha)) * integral - cmath.sqrt(6 * alpha / math.pi) * w)
    psi_gap = abs(cmath.sqrt(math.pi / (6 * alpha)) * integral - cmath.sqrt(3 * alpha / (2 * math.pi)) * w)
    return phi_gap, psi_gap
