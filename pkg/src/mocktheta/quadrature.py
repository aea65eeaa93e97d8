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

# The improper integrals in mocktheta all have explicit decay envelopes of the
# form exp(-a·s² + b·s + c).  They are truncated where the envelope drops
# below a fraction of the tolerance, cut into equal panels (roughly one per
# oscillation), and each panel is handed to QUADPACK's adaptive
# Gauss-Kronrod rule.  Panels are summed in order, so results are
# reproducible bit for bit.

import dataclasses
import logging
import math
import warnings
from typing import Callable, Optional

import numpy as np
from scipy import integrate as _integrate

from .errors import DomainError, QuadratureFailure

logger = logging.getLogger(__name__)

# fraction of the tolerance spent on truncating the infinite range
TRUNCATION_SHARE = 1e-3


@dataclasses.dataclass(frozen=True)
class QuadratureConfig:
    """Settings for the improper integrals

    :tolerance: absolute error target of a returned value
    :max_subdivisions: the subinterval limit handed to QUADPACK per panel
    :truncation_radius_override: use this radius instead of the one derived
        from the decay envelope
    """
    tolerance: float = 1e-10
    max_subdivisions: int = 200
    truncation_radius_override: Optional[float] = None

    def __post_init__(self) -> None:
        if not self.tolerance >= 1e-14:
            raise DomainError(f'quadrature tolerance {self.tolerance} is below the double precision floor 1e-14')
        if not 1 <= self.max_subdivisions <= 10 ** 6:
            raise DomainError(f'max_subdivisions must be between 1 and 10⁶, not {self.max_subdivisions}')
        if self.truncation_radius_override is not None and not self.truncation_radius_override > 0:
            raise DomainError(f'truncation radius must be positive, not {self.truncation_radius_override}')

    def refined(self) -> 'QuadratureConfig':
        return dataclasses.replace(self, tolerance=self.tolerance / 2)

    @property
    def truncation_target(self) -> float:
        return self.tolerance * TRUNCATION_SHARE


def decay_radius(quadratic: float, linear: float, constant: float, target: float, minimum: float = 0.0) -> float:
    """The smallest R ≥ minimum with exp(-quadratic·s² + linear·s + constant) ≤ target for all s ≥ R

    :raises DomainError: if the envelope does not decay
    """
    c = constant - math.log(target)
    if quadratic > 0:
        discriminant = max(linear * linear + 4 * quadratic * c, 0.0)
        radius = (linear + math.sqrt(discriminant)) / (2 * quadratic)
    elif linear < 0:
        radius = c / -linear
    else:
        raise DomainError('the integrand does not decay')
    return max(radius, minimum)


def truncation_radius(cfg: QuadratureConfig, derived: float) -> float:
    if cfg.truncation_radius_override is not None:
        return cfg.truncation_radius_override
    return derived


def integrate(func: Callable[[float], complex], a: float, b: float, cfg: QuadratureConfig, *,
              panels: int = 1, scale: float = 1.0, real: bool = False, what: str = 'integral') -> complex:
    """Integrate a complex-valued function over [a, b]

    :param func: the integrand
    :param panels: the number of equal panels [a, b] is cut into
    :param scale: the accepted error is cfg.tolerance·scale
    :param real: func returns real values, skip the imaginary part
    :param what: a description, for logging and errors
    :returns: the integral
    :raises QuadratureFailure: if the accumulated error estimate exceeds the accepted error
    """
    panels = max(1, panels)
    budget = cfg.tolerance * scale
    options = {'epsabs': budget * 1e-2 / panels, 'epsrel': 1e-13, 'limit': cfg.max_subdivisions}
    edges = np.linspace(a, b, panels + 1)

    total = complex(0)
    estimate = 0.0
    with warnings.catch_warnings():
        # judged by the accumulated estimate below instead
        warnings.simplefilter('ignore', _integrate.IntegrationWarning)
        for lo, hi in zip(edges[:-1], edges[1:]):
            re, re_error = _integrate.quad(lambda x: func(x).real, lo, hi, **options)
            if real:
                im, im_error = 0.0, 0.0
            else:
                im, im_error = _integrate.quad(lambda x: func(x).imag, lo, hi, **options)
            total += complex(re, im)
            estimate += re_error + im_error

    logger.debug('%s over [%g, %g] in %d panels: error estimate %.3g', what, a, b, panels, estimate)
    if not estimate <= budget:
        raise QuadratureFailure(what, estimate, budget)
    return total


def panel_count(radius: float, phase: float, minimum: int = 1) -> int:
    """Panels for [0, radius] so that each holds about one oscillation

    :param phase: total phase (in radians) swept over the interval
    """
    return max(minimum, math.ceil(radius), math.ceil(abs(phase) / (2 * math.pi)))
