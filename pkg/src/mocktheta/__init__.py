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

"""Mock theta functions φ and ψ near the unit circle"""

__version__ = "0"

from .errors import (
    DomainError,
    MockThetaError,
    NonConvergence,
    OrderMismatch,
    QuadratureFailure,
    TableTooSmall,
    WrongParity,
)
from .euler import euler_numbers
from .jets import TaylorJet, radial_expansion
from .mordell import QuadratureConfig, mordell_h, w_at_imaginary, w_extended
from .qseries import AlphaPoint, Form, RootOfUnity, SeriesId, eval_at_root, eval_G, eval_phi, eval_psi

__all__ = [
    "AlphaPoint",
    "DomainError",
    "Form",
    "MockThetaError",
    "NonConvergence",
    "OrderMismatch",
    "QuadratureConfig",
    "QuadratureFailure",
    "RootOfUnity",
    "SeriesId",
    "TableTooSmall",
    "TaylorJet",
    "WrongParity",
    "euler_numbers",
    "eval_G",
    "eval_at_root",
    "eval_phi",
    "eval_psi",
    "mordell_h",
    "radial_expansion",
    "w_at_imaginary",
    "w_extended",
]
