# This code is part of quadsos.
#
# (C) Copyright quadsos developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
"""
Exceptions raised by quadsos.
"""


class QuadSosError(Exception):
    """Base class for errors raised by quadsos."""

    def __init__(self, *message):
        super().__init__(" ".join(message))
        self.message = " ".join(message)

    def __str__(self):
        return repr(self.message)


class NotSquarefreeError(QuadSosError, ValueError):
    """The field discriminant parameter is below 2 or not squarefree."""


class NotTotallyPositiveError(QuadSosError, ValueError):
    """An element outside the totally positive cone was passed where one is required."""


class FieldMismatchError(QuadSosError, ValueError):
    """Two quadratic integers from different fields were combined."""


class ParityError(QuadSosError, ValueError):
    """A parity precondition on an index or parameter does not hold."""
