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

from typing import Optional


class MockThetaError(Exception):
    """Base class for every error raised by mocktheta"""


class DomainError(MockThetaError, ValueError):
    """An argument lies outside the domain of an operation

    Raised for points outside the closed disc, for real or vanishing τ where
    the upper half-plane is required, for invalid quadrature configurations,
    and similar precondition failures.
    """


class WrongParity(DomainError):
    """A root of unity of the wrong kind was given for a series

    φ and G are only defined at roots of odd order, ψ only at roots whose
    order is divisible by 4.

    :series: the name of the series that was asked for
    :root: the offending root, as 'l/N'
    """
    def __init__(self, series: str, root: str, detail: Optional[str] = None):
        message = f'{series} is not defined at the root of unity {root}'
        if detail is not None:
            message += f' ({detail})'
        super().__init__(message)
        self.series = series
        self.root = root


class NonConvergence(MockThetaError, ArithmeticError):
    """A series failed to meet its stopping rule within the term cap

    This normally means that |q| is too close to 1 for direct summation.

    :what: a description of the series being summed
    :terms: the number of terms that were summed before giving up
    """
    def __init__(self, what: str, terms: int):
        super().__init__(f'{what}: no convergence after {terms} terms')
        self.what = what
        self.terms = terms


class QuadratureFailure(MockThetaError, ArithmeticError):
    """Adaptive quadrature could not reach the requested tolerance

    :what: a description of the integral
    :estimate: the accumulated error estimate
    :tolerance: the tolerance that was asked for
    """
    def __init__(self, what: str, estimate: float, tolerance: float):
        super().__init__(f'{what}: error estimate {estimate:.3g} exceeds tolerance {tolerance:.3g}')
        self.what = what
        self.estimate = estimate
        self.tolerance = tolerance


class OrderMismatch(MockThetaError, ValueError):
    """Two jets of different truncation order were combined"""
    def __init__(self, left: int, right: int):
        super().__init__(f'cannot combine jets of order {left} and {right}')
        self.left = left
        self.right = right


class TableTooSmall(MockThetaError, IndexError):
    """An Euler number beyond the end of the table was requested

    :index: the Euler number index that was needed
    :size: the largest index the table covers
    """
    def __init__(self, index: int, size: int):
        super().__init__(f'E_{index} is not in a table that ends at E_{size}')
        self.index = index
        self.size = size
