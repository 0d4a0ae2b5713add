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
Decide whether every element of :math:`m\mathcal{O}^+` is a sum of squares.

# section: overview

    Sums of sums of squares are sums of squares, conjugates of sums of squares are sums
    of squares and :math:`\varepsilon^2` is a square. So it is enough to run Peters'
    criterion on :math:`m\alpha_{i,r}` for the indecomposable representatives with odd
    :math:`-1 \leq i \leq 2s-3`. The first failure in ``(i, r)`` order is the witness.

    Before any expansion two cheap corollaries are tried: small ``d`` are always
    accepted, and odd ``m`` with :math:`D \equiv 2,3 \pmod 4` is always rejected because
    the irrational part of a sum of squares is even.
"""

import logging
import multiprocessing
import sys
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from tqdm import tqdm

from quadsos.exceptions import QuadSosError
from quadsos.field.cf_engine import alphas, expand, partial_quotients
from quadsos.field.indecomposables import Indecomposable, count, iter_indecomposables
from quadsos.field.quad_arith import QuadInt, check_field, squarefree_sieve
from .bounds import Case, corollary_predicates, default_d_max, theorem2_intervals
from .peters import is_sum_of_squares

logger = logging.getLogger(__name__)

PRUNED = "pruned"
EXHAUSTIVE = "exhaustive"

REASON_SUFFICIENT = "sufficient-bound"
REASON_ODD = "odd-multiplier"
REASON_ENUMERATION = "enumeration"


@dataclass(frozen=True)
class Decision:
    """Answer for one ``(m, d)`` with the first failing representative when negative.

    ``indecomposable_count`` is None when a corollary decided before the expansion.
    """

    m: int
    d: int
    answer: bool
    witness: Optional[Indecomposable] = None
    indecomposable_count: Optional[int] = None
    reason: str = REASON_ENUMERATION


def _odd_multiplier_witness(d: int) -> Indecomposable:
    # 1 + u0 + sqrt(D) is alpha_{-1,1}, or alpha_{1,0} when u1 == 1; its sqrt(D) part is odd
    u0, u1 = partial_quotients(d, 2)
    value = QuadInt(u0 + 1, 1, d)
    if u1 >= 2:
        return Indecomposable(i=-1, r=1, value=value)
    return Indecomposable(i=1, r=0, value=value)


def decide(m: int, d: int) -> Decision:
    """Decide whether all elements of ``m`` times the totally positive cone are sums of squares.

    Raises:
        NotSquarefreeError: if ``d`` is not a valid field parameter.
        QuadSosError: if ``m`` is not positive.
    """
    check_field(d)
    if m < 1:
        raise QuadSosError(f"The multiplier m={m} must be a positive integer.")
    shortcut = corollary_predicates(m, d)
    if shortcut.sufficient_by_d:
        logger.debug("m=%d, D=%d: accepted by the small-D bound", m, d)
        return Decision(m, d, True, reason=REASON_SUFFICIENT)
    if shortcut.excluded_by_e:
        witness = _odd_multiplier_witness(d)
        logger.debug("m=%d, D=%d: odd multiplier, witness %s", m, d, witness.value)
        return Decision(m, d, False, witness=witness, reason=REASON_ODD)

    cf = expand(d)
    seq = alphas(cf)
    total = count(cf)
    logger.debug("m=%d, D=%d: checking %d indecomposables", m, d, total)
    for candidate in iter_indecomposables(seq, cf):
        if not is_sum_of_squares(m * candidate.value):
            logger.debug(
                "m=%d, D=%d: alpha_{%d,%d} = %s fails",
                m,
                d,
                candidate.i,
                candidate.r,
                candidate.value,
            )
            return Decision(m, d, False, witness=candidate, indecomposable_count=total)
    return Decision(m, d, True, indecomposable_count=total)


class _Pruner:
    """Analytic exclusions for one ``m``, built once per sweep."""

    def __init__(self, m: int):
        self.m = m
        self.by_case = {case: theorem2_intervals(m, case) for case in Case.for_multiplier(m)}

    def __call__(self, d: int) -> bool:
        verdict = corollary_predicates(self.m, d)
        if verdict.excluded_by_e or verdict.excluded_by_a_b_c:
            return True
        return self.by_case[Case.of(self.m, d)].excludes(d)


def sweep_candidates(m: int, mode: str = PRUNED, d_max: Optional[int] = None) -> List[int]:
    """Squarefree ``d`` in ``[2, d_max]`` that a sweep has to decide."""
    if mode not in (PRUNED, EXHAUSTIVE):
        raise QuadSosError(f"Unknown sweep mode {mode!r}.")
    d_max = default_d_max(m) if d_max is None else d_max
    if d_max < 2:
        return []
    candidates = [int(d) for d in squarefree_sieve(d_max).nonzero()[0]]
    if mode == EXHAUSTIVE:
        return candidates
    pruner = _Pruner(m)
    return [d for d in candidates if not pruner(d)]


def _answer(job: Tuple[int, int]) -> Tuple[int, bool]:
    m, d = job
    return d, decide(m, d).answer


def _run_jobs(
    jobs: List[Tuple[int, int]], workers: int, progress: bool, desc: str
) -> Iterable[Tuple[int, bool]]:
    bar = tqdm(total=len(jobs), desc=desc, disable=not progress, file=sys.stderr, leave=False)
    try:
        if workers <= 1 or len(jobs) < 2:
            for job in jobs:
                yield _answer(job)
                bar.update()
            return
        chunksize = max(1, len(jobs) // (workers * 16))
        with multiprocessing.Pool(processes=workers) as pool:
            for result in pool.imap_unordered(_answer, jobs, chunksize=chunksize):
                yield result
                bar.update()
    finally:
        bar.close()


def sweep(
    m: int,
    mode: str = PRUNED,
    d_max: Optional[int] = None,
    workers: int = 1,
    progress: bool = False,
) -> List[int]:
    """Squarefree ``d <= d_max`` for which all of ``m`` times the cone are sums of squares.

    ``d_max`` defaults to the upper bound of the corollary; ``mode`` is
    :data:`PRUNED` (skip ``d`` excluded by the analytic intervals) or
    :data:`EXHAUSTIVE` (decide every squarefree ``d``). The result is sorted and does
    not depend on ``workers``.
    """
    if m < 1:
        raise QuadSosError(f"The multiplier m={m} must be a positive integer.")
    candidates = sweep_candidates(m, mode, d_max)
    logger.info("m=%d: deciding %d values of D (%s)", m, len(candidates), mode)
    jobs = [(m, d) for d in candidates]
    accepted = sorted(d for d, ok in _run_jobs(jobs, workers, progress, "m=%d" % m) if ok)
    logger.info("m=%d: %d values of D accepted", m, len(accepted))
    return accepted
