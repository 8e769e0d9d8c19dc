# -*- coding: utf-8 -*-

"""This file is part of the ICNC library.

ICNC is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of
the License, or (at your option) any later version.

ICNC is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public
License along with ICNC. If not, see <http://www.gnu.org/licenses/>.

"""


class ICNCError(Exception):
    """Base class for every error raised by ICNC."""


class CapExceededError(ICNCError, RuntimeError):
    """An enumeration cap or exhaustive-search limit refused the request."""

    def __init__(self, message, cap=None, value=None):
        super(CapExceededError, self).__init__(message)
        self.cap = cap
        self.value = value


class SigFormatError(ICNCError, ValueError):
    """Malformed side-information graph text."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = 'line {}: {}'.format(line_number, message)
        super(SigFormatError, self).__init__(message)
        self.line_number = line_number


class AssignmentConflictError(ICNCError, ValueError):
    """An edge already carries a different global encoding vector."""

    def __init__(self, message, edge=None):
        super(AssignmentConflictError, self).__init__(message)
        self.edge = edge


class InfeasibleCodeError(ICNCError, ValueError):
    """A network code was required to be feasible but is not."""

    def __init__(self, message, report=None):
        super(InfeasibleCodeError, self).__init__(message)
        self.report = report


class DualityError(ICNCError, ValueError):
    """A coding matrix cannot be dualized into an index code."""

    def __init__(self, message, failures=()):
        super(DualityError, self).__init__(message)
        self.failures = list(failures)


class RoleMappingError(ICNCError, RuntimeError):
    """A final-configuration template could not be laid onto an instance."""

    def __init__(self, message, junction=None):
        super(RoleMappingError, self).__init__(message)
        self.junction = junction


class ClassificationError(ICNCError, ValueError):
    """A network does not have the structure a classification step requires."""

    def __init__(self, message, pairs=()):
        super(ClassificationError, self).__init__(message)
        self.pairs = list(pairs)
