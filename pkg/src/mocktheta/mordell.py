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
import logging
import math
from fractions import Fraction
from typing import Union

from . import numeric
from .errors import DomainError
from .qseries import AlphaPoint
from .quadrature import QuadratureConfig, decay_radius, integrate, panel_count, truncation_radius

logger = logging.getLogger(__name__)

__all__ = [
    'QuadratureConfig',
    'kernel_integral',
    'mordell_h',
    'remark_residual',
    'w_at_imaginary',
    'w_direct',
    'w_extended',
    'w_via_h',
    'zwegers_residual',
]

DEFAULT_CONFIG = QuadratureConfig()


def _kernel_ratio(y: complex) -> complex:
    # (cosh(5y/6) + cosh(y/6)) / cosh(y), rewritten in decaying exponentials; needs Re y ≥ 0
    numerator = cmath.exp(-y / 6) + cmath.exp(-5 * y / 6) + cmath.exp(-7 * y / 6) + cmath.exp(-11 * y / 6)
    return numerator / (1 + cmath.exp(-2 * y))


def _upper_half_plane(tau: complex) -> complex:
    tau = complex(tau)
    if tau == 0 or not cmath.isfinite(tau):
        raise DomainError(f'τ = {tau} is not a valid modular variable')
    if tau.imag < 0:
        # rounding dust from τ = πi/(6α) and friends with α on the imaginary axis
        if tau.imag < -1e-14 * abs(tau):
            raise DomainError(f'τ = {tau} is below the real axis')
    if tau.imag <= 0:
        tau = complex(tau.real, 0.0)
    return tau


def mordell_h(z: complex, tau: complex, cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """The Mordell integral h(z; τ) = ∫ e^{πiτx² - 2πzx} / cosh(πx) dx

    The integral is taken along the line x = e^{iθ}s with θ = (π/2 - arg τ)/2,
    where the Gaussian factor becomes e^{-π|τ|s²}.  For τ in the upper half
    plane this is the same integral.  For real τ it is the boundary value from
    the upper half plane, which exists for every z.

    :param z: any complex number
    :param tau: Im τ > 0, or τ real and non-zero
    :raises DomainError: for Im τ < 0 or τ = 0
    :raises QuadratureFailure: if the tolerance cannot be met
    """
    z = complex(z)
    tau = _upper_half_plane(tau)
    theta = (math.pi / 2 - cmath.phase(tau)) / 2
    rotation = cmath.exp(1j * theta)

    def integrand(s: float) -> complex:
        x = rotation * s
        return rotation * cmath.exp(1j * math.pi * tau * x * x - 2 * math.pi * z * x) / cmath.cosh(math.pi * x)

    # |1/cosh(w)| ≤ 4e^{-|Re w|} once |Re w| ≥ ln 2
    sech_rate = math.pi * math.cos(theta)
    linear = 2 * math.pi * abs((z * rotation).real) - sech_rate
    radius = truncation_radius(cfg, decay_radius(math.pi * abs(tau), linear, math.log(4), cfg.truncation_target,
                                                 math.log(2) / sech_rate))
    phase = (2 * math.pi * abs((z * rotation).imag) + math.pi * abs(math.sin(theta))) * radius
    panels = panel_count(radius, phase, minimum=2)
    logger.debug('h(%s; %s): rotation %.4f, radius %.3f, %d panels per side', z, tau, theta, radius, panels)
    return integrate(integrand, -radius, radius, cfg, panels=2 * panels, what=f'h({z}; {tau})')


def zwegers_residual(z: complex, tau: complex, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """|h(z/τ; -1/τ) - √(-iτ) e^{-πiz²/τ} h(z; τ)|, principal square root"""
    z = complex(z)
    tau = _upper_half_plane(tau)
    lhs = mordell_h(z / tau, -1 / tau, cfg)
    rhs = cmath.sqrt(-1j * tau) * cmath.exp(-1j * math.pi * z * z / tau) * mordell_h(z, tau, cfg)
    return abs(lhs - rhs)


def w_direct(p: AlphaPoint, cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """W(α) = ∫_0^∞ e^{-3αx²/2} (cosh(5αx/2) + cosh(αx/2)) / cosh(3αx) dx, for Re α > 0"""
    if not p.interior:
        raise DomainError(f'the direct integral for W needs Re α > 0, not {p}')
    alpha = p.alpha

    def integrand(x: float) -> complex:
        return cmath.exp(-1.5 * alpha * x * x) * _kernel_ratio(3 * alpha * x)

    radius = truncation_radius(cfg, decay_radius(1.5 * alpha.real, 0.0, math.log(8), cfg.truncation_target, 1.0))
    phase = 1.5 * abs(alpha.imag) * radius * radius + 3 * abs(alpha) * radius
    panels = panel_count(radius, phase)
    return integrate(integrand, 0.0, radius, cfg, panels=panels, what=f'direct W at {p}')


def kernel_integral(p: AlphaPoint, cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """∫_0^∞ e^{-π²u²/(6α)} (cosh(5πu/6) + cosh(πu/6)) / cosh(πu) du, for Re α ≥ 0"""
    c = math.pi ** 2 / (6 * p.alpha)

    def integrand(u: float) -> complex:
        return cmath.exp(-c * u * u) * _kernel_ratio(math.pi * u)

    # the cosh ratio is at most 4e^{-πu/6} on the real line
    radius = truncation_radius(cfg, decay_radius(c.real, -math.pi / 6, math.log(4), cfg.truncation_target, 1.0))
    panels = panel_count(radius, c.imag * radius * radius)
    return integrate(integrand, 0.0, radius, cfg, panels=panels,
                     scale=min(1.0, abs(3 * p.alpha / math.pi)), what=f'kernel integral at {p}')


def w_extended(p: AlphaPoint, cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """W(α) after the substitution 3αx = πu, valid on the closed half plane Re α ≥ 0"""
    return math.pi / (3 * p.alpha) * kernel_integral(p, cfg)


def w_via_h(p: AlphaPoint, cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """W(α) = (π/6α)·(h(-1/12; πi/6α) + h(-5/12; πi/6α)), for Re α > 0"""
    if not p.interior:
        raise DomainError(f'πi/(6α) is not in the upper half plane for {p}')
    tau = 1j * math.pi / (6 * p.alpha)
    return math.pi / (6 * p.alpha) * (mordell_h(-1 / 12, tau, cfg) + mordell_h(-5 / 12, tau, cfg))


def w_at_imaginary(m: Union[int, Fraction], cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """W(-2πi/m) through Mordell integrals with the real modulus τ = 12/m

    m may be any positive rational, so that W(-2πil/N) = w_at_imaginary(N/l).
    """
    m = Fraction(m)
    if m <= 0:
        raise DomainError(f'm must be positive, not {m}')
    a, b = m.numerator, m.denominator
    tau = 12 * b / a
    first = numeric.exact_root(-b, 24 * a) * mordell_h(-b / a, tau, cfg)
    second = numeric.exact_root(-25 * b, 24 * a) * mordell_h(-5 * b / a, tau, cfg)
    return cmath.sqrt(1j * a / (12 * b)) * (first + second)


def remark_residual(p: AlphaPoint, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """|W(π²/α) - (α/π)^{3/2} W(α)|, principal branch"""
    if not p.interior:
        raise DomainError(f'the W reflection check needs Re α > 0, not {p}')
    image = AlphaPoint(math.pi ** 2 / p.alpha)
    return abs(w_extended(image, cfg) - (p.alpha / math.pi) ** 1.5 * w_extended(p, cfg))
