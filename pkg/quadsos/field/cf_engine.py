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
Continued fraction of :math:`\omega_D`, its convergents and the units of the ring.

The expansion runs the integer recurrence on quadratic surds :math:`(P + \sqrt{D})/Q`:

.. parsed-literal::

    u = floor((P + sqrt(D)) / Q)
    P' = u*Q - P
    Q' = (D - P'^2) / Q

starting from :math:`(P, Q) = (0, 1)` for :math:`\sqrt{D}` and :math:`(1, 2)` for
:math:`(1+\sqrt{D})/2`. The state after the first step is reduced, so the expansion is
purely periodic from there and the period ends at the first return to that state.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .quad_arith import MODE_1, QuadInt, basis_mode, check_field, isqrt, norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CFExpansion:
    r"""Periodic continued fraction :math:`\omega_D = [u_0; \overline{u_1, \ldots, u_s}]`."""

    d: int
    u0: int
    period: Tuple[int, ...]

    @property
    def s(self) -> int:
        """Period length."""
        return len(self.period)

    def u(self, i: int) -> int:
        """Partial quotient :math:`u_i` for any ``i >= 0``."""
        if i == 0:
            return self.u0
        return self.period[(i - 1) % len(self.period)]


def _initial_state(d: int) -> Tuple[int, int]:
    return (1, 2) if basis_mode(d) == MODE_1 else (0, 1)


def surd_states(d: int, steps: int) -> List[Tuple[int, int]]:
    """The first ``steps + 1`` surd states ``(P, Q)`` of the expansion of ``omega_D``."""
    root = isqrt(d)
    p, q = _initial_state(d)
    states = [(p, q)]
    for _ in range(steps):
        u = (p + root) // q
        p = u * q - p
        q = (d - p * p) // q
        states.append((p, q))
    return states


def partial_quotients(d: int, count: int) -> List[int]:
    """The first ``count`` partial quotients ``u_0, u_1, ...`` without period detection."""
    root = isqrt(d)
    return [(p + root) // q for p, q in surd_states(d, count - 1)]


def expand(d: int) -> CFExpansion:
    r"""Exact periodic continued fraction of :math:`\omega_D`.

    Raises:
        NotSquarefreeError: if ``d < 2`` or ``d`` is not squarefree.
    """
    check_field(d)
    root = isqrt(d)
    p, q = _initial_state(d)
    u0 = (p + root) // q
    p = u0 * q - p
    q = (d - p * p) // q
    start = (p, q)
    period = []
    while True:
        u = (p + root) // q
        period.append(u)
        p = u * q - p
        q = (d - p * p) // q
        if (p, q) == start:
            break
    logger.debug("D=%d: u0=%d, period length %d", d, u0, len(period))
    return CFExpansion(d=d, u0=u0, period=tuple(period))


class AlphaSeq:
    r"""Convergents :math:`p_i/q_i` and the elements :math:`\alpha_i = p_i - q_i\omega'_D`.

    Indices run from :math:`-1`; convergents are computed up to :math:`2s` and the
    elements up to :math:`2s - 1`, enough for the representatives of the indecomposables
    and for :math:`\varepsilon^+ = \alpha_{2s-1}`.
    """

    def __init__(self, cf: CFExpansion):
        self.cf = cf
        self.d = cf.d
        last = 2 * cf.s
        # recurrence X_{i+2} = u_{i+2} X_{i+1} + X_i with q_{-1} = 0, p_{-1} = q_0 = 1, p_0 = u_0
        p = {-1: 1, 0: cf.u0}
        q = {-1: 0, 0: 1}
        for i in range(1, last + 1):
            u = cf.u(i)
            p[i] = u * p[i - 1] + p[i - 2]
            q[i] = u * q[i - 1] + q[i - 2]
        self._p: Dict[int, int] = p
        self._q: Dict[int, int] = q
        self._alpha: Dict[int, QuadInt] = {i: self._make_alpha(i) for i in range(-1, last)}

    def _make_alpha(self, i: int) -> QuadInt:
        p_i, q_i = self._p[i], self._q[i]
        # omega' = 1 - omega resp. -omega
        if basis_mode(self.d) == MODE_1:
            return QuadInt(p_i - q_i, q_i, self.d)
        return QuadInt(p_i, q_i, self.d)

    @property
    def last_index(self) -> int:
        """Largest index ``i`` for which :meth:`alpha` is available."""
        return 2 * self.cf.s - 1

    def p(self, i: int) -> int:
        """Numerator of the ``i``-th convergent, ``-1 <= i <= 2s``."""
        return self._p[i]

    def q(self, i: int) -> int:
        """Denominator of the ``i``-th convergent, ``-1 <= i <= 2s``."""
        return self._q[i]

    def alpha(self, i: int) -> QuadInt:
        r""":math:`\alpha_i` for ``-1 <= i <= 2s - 1``."""
        return self._alpha[i]

    def alpha_r(self, i: int, r: int) -> QuadInt:
        r""":math:`\alpha_{i,r} = \alpha_i + r\,\alpha_{i+1}`."""
        return self._alpha[i] + r * self._alpha[i + 1]

    def entries(self) -> List[Tuple[int, QuadInt]]:
        """``(i, alpha_i)`` pairs in index order."""
        return sorted(self._alpha.items())


def alphas(cf: CFExpansion) -> AlphaSeq:
    """Convergents and alpha sequence of an expansion."""
    return AlphaSeq(cf)


def fundamental_unit(seq: AlphaSeq) -> QuadInt:
    r"""The fundamental unit :math:`\varepsilon = \alpha_{s-1}`."""
    unit = seq.alpha(seq.cf.s - 1)
    logger.debug("D=%d: fundamental unit %s of norm %d", seq.d, unit, norm(unit))
    return unit


def totally_positive_unit(seq: AlphaSeq) -> QuadInt:
    r"""Smallest totally positive unit :math:`\varepsilon^+ > 1`.

    Equal to :math:`\varepsilon` for even period length and to
    :math:`\varepsilon^2 = \alpha_{2s-1}` for odd period length.
    """
    s = seq.cf.s
    if s % 2 == 0:
        return seq.alpha(s - 1)
    return seq.alpha(2 * s - 1)
