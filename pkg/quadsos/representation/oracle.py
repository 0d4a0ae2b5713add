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
Brute-force oracles used to validate the closed-form criteria.

Nothing here is clever on purpose: the sum-of-squares search walks all candidate
squares under the target, the lemma minimizer walks all multisets of pairs. Both are
meant for small inputs only.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from quadsos.exceptions import NotTotallyPositiveError
from quadsos.field.quad_arith import MODE_1, QuadInt, basis_mode, is_totally_positive, isqrt, mul

MAX_SQUARES = 5
"""Pythagoras number of the ring of integers of a real quadratic field."""


@dataclass(frozen=True)
class SquareDecomposition:
    """``target == sum(part**2 for part in parts)`` with non-zero parts."""

    parts: Tuple[QuadInt, ...]
    target: QuadInt

    def __post_init__(self):
        total = QuadInt(0, 0, self.target.d)
        for part in self.parts:
            total = total + mul(part, part)
        if total != self.target or len(self.parts) > MAX_SQUARES:
            raise ValueError(f"Parts do not decompose {self.target}.")


def totally_positive_elements(d: int, trace_max: int) -> Iterator[QuadInt]:
    """All totally positive elements of trace at most ``trace_max``, by trace then coefficient."""
    mode_1 = basis_mode(d) == MODE_1
    for big_x in range(1, trace_max + 1):
        # (X + Y*sqrt(D))/2 is totally positive iff X > |Y|*sqrt(D)
        y_max = isqrt((big_x * big_x - 1) // d)
        for big_y in range(-y_max, y_max + 1):
            if mode_1:
                if (big_x - big_y) % 2 == 0:
                    yield QuadInt.from_half(big_x, big_y, d)
            elif big_x % 2 == 0 and big_y % 2 == 0:
                yield QuadInt.from_half(big_x, big_y, d)


@lru_cache(maxsize=64)
def _square_candidates(d: int, trace_max: int) -> Tuple[Tuple[QuadInt, QuadInt], ...]:
    """``(beta, beta**2)`` for non-zero beta up to sign with ``trace(beta**2) <= trace_max``.

    Sorted by non-increasing trace of the square.
    """
    mode_1 = basis_mode(d) == MODE_1
    found = []
    # trace(beta^2) = (X^2 + D*Y^2) / 2 for beta = (X + Y*sqrt(D))/2
    bound = 2 * trace_max
    for big_y in range(0, isqrt(bound // d) + 1):
        rest = bound - d * big_y * big_y
        for big_x in range(-isqrt(rest), isqrt(rest) + 1):
            if big_y == 0 and big_x <= 0:
                continue
            if mode_1 and (big_x - big_y) % 2:
                continue
            if not mode_1 and (big_x % 2 or big_y % 2):
                continue
            beta = QuadInt.from_half(big_x, big_y, d)
            found.append((beta, mul(beta, beta)))
    found.sort(key=lambda pair: (-pair[1].trace(), -pair[1].y, -pair[0].x))
    return tuple(found)


def _dominated(square: QuadInt, target: QuadInt) -> bool:
    # target - square is zero or totally positive
    diff = target - square
    return (diff.x == 0 and diff.y == 0) or is_totally_positive(diff)


@lru_cache(maxsize=1 << 18)
def _search(target: QuadInt, depth: int) -> Optional[Tuple[QuadInt, ...]]:
    if target.x == 0 and target.y == 0:
        return ()
    if depth == 0:
        return None
    for beta, square in _square_candidates(target.d, target.trace()):
        if square.trace() > target.trace() or not _dominated(square, target):
            continue
        rest = _search(target - square, depth - 1)
        if rest is not None:
            return (beta,) + rest
    return None


def brute_force_sos(xi: QuadInt) -> Optional[SquareDecomposition]:
    """A decomposition of ``xi`` into at most five non-zero squares, or None.

    Raises:
        NotTotallyPositiveError: if ``xi`` is not totally positive.
    """
    if not is_totally_positive(xi):
        raise NotTotallyPositiveError(f"{xi} is not totally positive in Q(sqrt({xi.d})).")
    parts = _search(xi, MAX_SQUARES)
    if parts is None:
        return None
    parts = tuple(sorted(parts, key=lambda b: (-mul(b, b).trace(), -b.x, -b.y)))
    return SquareDecomposition(parts=parts, target=xi)


def _pairs(m: int, parity: bool) -> List[Tuple[int, int]]:
    # (a, b) with a, b >= 1 and a*b <= m; pairs with a*b == 0 never lower the sum
    return [
        (a, b)
        for a in range(1, m + 1)
        for b in range(1, m // a + 1)
        if not parity or (a - b) % 2 == 0
    ]


def brute_force_lemma_min(m: int, d: int, parity: bool = False) -> Optional[Fraction]:
    """Minimum of ``sum(a_i**2 + d*b_i**2)`` over non-negative tuples with ``sum(a_i*b_i) == m``.

    With ``parity`` every pair also needs ``a_i == b_i (mod 2)``. Returns None when no
    tuple qualifies. The value is returned as a :class:`~fractions.Fraction` so it
    compares directly with the lemma bound.
    """
    pairs = _pairs(m, parity)
    best: List[Optional[int]] = [0] + [None] * m
    # unbounded knapsack over the total of a_i*b_i
    for total in range(1, m + 1):
        for a, b in pairs:
            weight = a * b
            if weight > total or best[total - weight] is None:
                continue
            value = best[total - weight] + a * a + d * b * b
            if best[total] is None or value < best[total]:
                best[total] = value
    return None if best[m] is None else Fraction(best[m])
