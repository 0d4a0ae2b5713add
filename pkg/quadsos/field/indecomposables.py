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
Indecomposable elements of the totally positive cone.

The indecomposables are exactly :math:`\alpha_{i,r} = \alpha_i + r\alpha_{i+1}` with odd
:math:`i \geq -1`, :math:`0 \leq r \leq u_{i+2} - 1`, together with their conjugates.
Up to conjugation and multiplication by :math:`\varepsilon^2` it suffices to take
odd :math:`-1 \leq i \leq 2s - 3`.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional

from .cf_engine import AlphaSeq, CFExpansion
from .quad_arith import QuadInt


@dataclass(frozen=True)
class Indecomposable:
    r"""Representative :math:`\alpha_{i,r}` with its index."""

    i: int
    r: int
    value: QuadInt


def iter_indecomposables(
    seq: AlphaSeq, cf: Optional[CFExpansion] = None, start: int = -1, stop: Optional[int] = None
) -> Iterator[Indecomposable]:
    """Stream representatives in ``(i, r)`` order.

    ``start`` and ``stop`` restrict ``i`` to odd values in ``[start, stop]`` so that
    disjoint ranges can be handed to different consumers.
    """
    cf = cf if cf is not None else seq.cf
    if cf.d != seq.d:
        raise ValueError(f"Expansion of D={cf.d} does not match alpha sequence of D={seq.d}.")
    last = 2 * cf.s - 3 if stop is None else stop
    first = start if start % 2 else start + 1
    for i in range(first, last + 1, 2):
        alpha_i = seq.alpha(i)
        alpha_next = seq.alpha(i + 1)
        value = alpha_i
        for r in range(cf.u(i + 2)):
            yield Indecomposable(i=i, r=r, value=value)
            value = value + alpha_next


def enumerate_indecomposables(
    seq: AlphaSeq, cf: Optional[CFExpansion] = None
) -> List[Indecomposable]:
    """All representatives, ordered by ``(i, r)``."""
    return list(iter_indecomposables(seq, cf))


def count(cf: CFExpansion) -> int:
    r""":math:`\sum_{j=1}^{s} u_{2j-1}` without building any element."""
    return sum(cf.u(2 * j - 1) for j in range(1, cf.s + 1))
