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
r"""
Peters' criterion for sums of squares in real quadratic rings of integers.

A totally positive :math:`\xi` is a sum of (five) squares iff some rational integer
:math:`c` lies in an interval of radius :math:`\sqrt{N(\xi)}` around a point fixed
by the rational part of :math:`\xi`:

* :math:`D \equiv 2,3`: :math:`\xi = A + B\sqrt{D}` needs even :math:`B` and
  :math:`(2Dc - A)^2 \leq N(\xi)`.
* :math:`D \equiv 1`: :math:`\xi = A + B\omega_D`, :math:`M = 2A + B`, needs
  :math:`c \equiv B \pmod 2` and :math:`(Dc - M)^2 \leq 4N(\xi)`.

Both tests only compare integers.
"""

from dataclasses import dataclass
from typing import Optional

from quadsos.exceptions import NotTotallyPositiveError
from quadsos.field.quad_arith import MODE_1, QuadInt, is_totally_positive, norm


@dataclass(frozen=True)
class PetersVerdict:
    """Outcome of the criterion; ``certificate_c`` is the witnessing integer."""

    representable: bool
    certificate_c: Optional[int] = None

    def __bool__(self):
        return self.representable


def _check_mode_23(xi: QuadInt) -> PetersVerdict:
    # the sqrt(D) coefficient of any sum of squares is 2 * sum(a_i b_i)
    if xi.y % 2:
        return PetersVerdict(False)
    big_a = xi.x
    two_d = 2 * xi.d
    residue = big_a % two_d
    c = big_a // two_d
    if two_d - residue < residue:
        residue, c = two_d - residue, c + 1
    if residue * residue <= norm(xi):
        return PetersVerdict(True, c)
    return PetersVerdict(False)


def _check_mode_1(xi: QuadInt) -> PetersVerdict:
    d, b = xi.d, xi.y
    big_m = 2 * xi.x + b
    four_n = big_m * big_m - b * b * d
    below = big_m // d
    if (below - b) % 2:
        below -= 1
    # the closest parity-correct integers to M/D, one on each side
    for c in sorted((below, below + 2), key=lambda c: abs(d * c - big_m)):
        if (d * c - big_m) ** 2 <= four_n:
            return PetersVerdict(True, c)
    return PetersVerdict(False)


def is_sum_of_squares(xi: QuadInt) -> PetersVerdict:
    """Decide whether ``xi`` is a sum of squares of integers of its field.

    Raises:
        NotTotallyPositiveError: if ``xi`` is not totally positive.
    """
    if not is_totally_positive(xi):
        raise NotTotallyPositiveError(f"{xi} is not totally positive in Q(sqrt({xi.d})).")
    if xi.mode == MODE_1:
        return _check_mode_1(xi)
    return _check_mode_23(xi)
