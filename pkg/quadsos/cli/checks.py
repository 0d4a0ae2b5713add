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
Verification suites behind the ``verify-*``, ``family``, ``structure``, ``lemma`` and
``complexity`` subcommands.

Each suite stops at the first counterexample and returns a :class:`CheckReport`.
"""

import logging
import sys
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from quadsos.field.cf_engine import alphas, expand, fundamental_unit, totally_positive_unit
from quadsos.field.indecomposables import count
from quadsos.field.quad_arith import is_squarefree, squarefree_sieve
from quadsos.representation.bounds import (
    Case,
    covering_proposition_interval,
    family_members,
    family_odd_square_minus4,
    family_odd_square_minus4_largest_failures,
    family_odd_square_minus4_smallest,
    family_t2m1,
    family_t2m1_largest_failure,
    grouping_gaps,
    lemma_bound_attained,
    lemma_min,
    theorem2_intervals,
)
from quadsos.representation.decision import EXHAUSTIVE, PRUNED, decide, sweep
from quadsos.representation.oracle import (
    brute_force_lemma_min,
    brute_force_sos,
    totally_positive_elements,
)
from quadsos.representation.peters import is_sum_of_squares

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckReport:
    """Result of a suite: how many cases ran and the first counterexample, if any."""

    name: str
    checked: int
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        """True iff no counterexample was found."""
        return self.counterexample is None

    def summary(self) -> str:
        """One line report."""
        if self.passed:
            return "PASS %s: %d cases" % (self.name, self.checked)
        return "FAIL %s after %d cases: %s" % (self.name, self.checked, self.counterexample)


def _progress(items: Sequence, progress: bool, desc: str) -> Iterable:
    return tqdm(items, desc=desc, disable=not progress, file=sys.stderr, leave=False)


def _run(name: str, cases: Iterable, check_case: Callable[..., Optional[str]]) -> CheckReport:
    checked = 0
    for case in cases:
        checked += 1
        failure = check_case(case)
        if failure is not None:
            logger.warning("%s: %s", name, failure)
            return CheckReport(name, checked, failure)
    logger.info("%s: %d cases passed", name, checked)
    return CheckReport(name, checked)


def check_oracle(
    d_values: Iterable[int], trace_max: int, progress: bool = False
) -> CheckReport:
    """Peters' criterion against the square search on totally positive elements of small trace."""
    elements = [xi for d in d_values for xi in totally_positive_elements(d, trace_max)]

    def check_case(xi):
        fast = bool(is_sum_of_squares(xi))
        slow = brute_force_sos(xi) is not None
        if fast != slow:
            return "D=%d, xi=%s: criterion says %s, search says %s" % (xi.d, xi, fast, slow)
        return None

    return _run("oracle", _progress(elements, progress, "oracle"), check_case)


def _t2m1_check(m_max: int) -> Callable[[Tuple[int, int]], Optional[str]]:
    def check_case(member):
        t, d = member
        failing = []
        for m in range(1, m_max + 1):
            got = decide(2 * m, d).answer
            if got != family_t2m1(t, m):
                return "t=%d, D=%d, 2m=%d: decide says %s" % (t, d, 2 * m, got)
            if not got:
                failing.append(m)
        largest = family_t2m1_largest_failure(t)
        if largest < m_max and max(failing, default=-1) != max(largest, -1):
            return "t=%d, D=%d: largest failing m is %s, expected %d" % (
                t,
                d,
                max(failing, default=None),
                largest,
            )
        return None

    return check_case


def _odd_square_check(m_max: int) -> Callable[[Tuple[int, int]], Optional[str]]:
    def check_case(member):
        t, d = member
        accepted, failing = [], []
        for m in range(1, m_max + 1):
            got = decide(m, d).answer
            if got != family_odd_square_minus4(t, m):
                return "t=%d, D=%d, m=%d: decide says %s" % (t, d, m, got)
            (accepted if got else failing).append(m)
        for odd in (True, False):
            smallest = family_odd_square_minus4_smallest(t, odd)
            observed = min((m for m in accepted if m % 2 == odd), default=None)
            if smallest <= m_max and observed != smallest:
                return "t=%d, D=%d: smallest accepted %s m is %s, expected %d" % (
                    t,
                    d,
                    "odd" if odd else "even",
                    observed,
                    smallest,
                )
        candidates = family_odd_square_minus4_largest_failures(t)
        if max(candidates) < m_max:
            observed = {
                max((m for m in failing if m % 2 == parity), default=None) for parity in (0, 1)
            }
            if observed != set(candidates):
                return "t=%d, D=%d: largest failures %s, expected %s" % (
                    t,
                    d,
                    sorted(observed, key=str),
                    sorted(candidates),
                )
        return None

    return check_case


def check_family(kind: str, t_max: int, m_max: int, progress: bool = False) -> CheckReport:
    """``decide`` against the closed forms of a family, including its extremal values."""
    members = family_members(kind, t_max)
    check_case = _t2m1_check(m_max) if kind == "t2m1" else _odd_square_check(m_max)
    return _run("family %s" % kind, _progress(members, progress, kind), check_case)


def _structure_failure(d: int) -> Optional[str]:
    cf = expand(d)
    seq = alphas(cf)
    s = cf.s
    for i in range(-1, 2 * s):
        if seq.p(i + 1) * seq.q(i) - seq.p(i) * seq.q(i + 1) != (-1) ** (i % 2):
            return "D=%d: determinant identity fails at i=%d" % (d, i)
    unit = fundamental_unit(seq)
    if abs(unit.norm()) != 1:
        return "D=%d: fundamental unit %s has norm %d" % (d, unit, unit.norm())
    for i in range(-1, s):
        if seq.alpha(i + s) != unit * seq.alpha(i):
            return "D=%d: alpha_{%d} is not eps * alpha_{%d}" % (d, i + s, i)
    for i in range(-1, 2 * s - 2, 2):
        if seq.alpha_r(i, cf.u(i + 2)) != seq.alpha(i + 2):
            return "D=%d: alpha_{%d,u} does not glue to alpha_{%d}" % (d, i, i + 2)
    plus = totally_positive_unit(seq)
    if plus.norm() != 1 or not plus.is_totally_positive():
        return "D=%d: %s is not a totally positive unit" % (d, plus)
    return None


def check_structure(d_max: int, progress: bool = False) -> CheckReport:
    """Convergent and unit identities for every squarefree ``d <= d_max``."""
    fields = [int(d) for d in squarefree_sieve(d_max).nonzero()[0]]
    return _run("structure", _progress(fields, progress, "structure"), _structure_failure)


def _lemma_failure(case: Tuple[int, int, bool]) -> Optional[str]:
    m, d, parity = case
    bound = lemma_min(m, d, parity)
    brute = brute_force_lemma_min(m, d, parity)
    if brute is None or brute < bound.value:
        return "m=%d, D=%d, parity=%s: search %s below bound %s" % (
            m,
            d,
            parity,
            brute,
            bound.value,
        )
    attained = any(lemma_bound_attained(m, t, parity) for t in bound.ties)
    if (brute == bound.value) != attained:
        return "m=%d, D=%d, parity=%s: search %s, bound %s, attained %s" % (
            m,
            d,
            parity,
            brute,
            bound.value,
            attained,
        )
    return None


def check_lemma(m_max: int, d_max: int, progress: bool = False) -> CheckReport:
    """The lemma minimum against the knapsack search for ``m <= m_max`` and ``2 <= D <= d_max``."""
    grid = [
        (m, d, parity)
        for m in range(1, m_max + 1)
        for d in range(2, d_max + 1)
        for parity in (False, True)
    ]
    return _run("lemma", _progress(grid, progress, "lemma"), _lemma_failure)


def check_bounds(m_max: int, workers: int = 1, progress: bool = False) -> CheckReport:
    """Pruned and exhaustive sweeps agree and no accepted ``d`` lies in an exclusion interval.

    Both the grouped intervals and the single ``S(t, k)`` with ``t, k <= 16`` are checked.
    Head intervals must lie inside the union of the ``S(t, k)``; every squarefree ``d`` in a
    part of a grouped interval outside that union must be decided NO.
    """

    def check_case(m):
        pruned = sweep(m, PRUNED, workers=workers)
        exhaustive = sweep(m, EXHAUSTIVE, workers=workers)
        if pruned != exhaustive:
            extra = sorted(set(exhaustive).symmetric_difference(pruned))
            return "m=%d: pruned and exhaustive sweeps differ at D=%s" % (m, extra)
        systems = {case: theorem2_intervals(m, case) for case in Case.for_multiplier(m)}
        for d in exhaustive:
            if systems[Case.of(m, d)].excludes(d):
                return "m=%d: accepted D=%d lies in an exclusion interval" % (m, d)
            covering = covering_proposition_interval(m, d, t_max=16, k_max=16)
            if covering is not None:
                return "m=%d: accepted D=%d lies in %s" % (m, d, covering[2].label)
        for case in systems:
            for interval, gap in grouping_gaps(m, case):
                if interval.label == "head":
                    return "m=%d: %s head interval not covered from %s" % (m, case.value, gap.lo)
                logger.info(
                    "m=%d %s %s: %s not covered by S(t,k)",
                    m,
                    case.value,
                    interval.label,
                    gap.describe(),
                )
                first, last = gap.d_range()
                for d in range(max(first, 2), last + 1):
                    if is_squarefree(d) and Case.of(m, d) is case and decide(m, d).answer:
                        return "m=%d: accepted D=%d lies in %s outside every S(t,k)" % (
                            m,
                            d,
                            interval.label,
                        )
        return None

    return _run("bounds", _progress(range(1, m_max + 1), progress, "bounds"), check_case)


def mean_complexity(d_from: int, d_to: int, progress: bool = False) -> float:
    r"""Mean of ``count(d) / (sqrt(d) * log(d)**2)`` over squarefree ``d`` in the range."""
    mask = squarefree_sieve(d_to)
    ds = np.nonzero(mask[d_from:])[0] + d_from
    counts = np.array(
        [count(expand(int(d))) for d in _progress(ds, progress, "count")], dtype=float
    )
    logs = np.log(ds.astype(float))
    return float(np.mean(counts / (np.sqrt(ds) * logs * logs)))


def check_complexity(
    d_range: Tuple[int, int],
    ref_range: Tuple[int, int],
    factor: float,
    progress: bool = False,
) -> CheckReport:
    """Normalized indecomposable count in ``d_range`` within ``factor`` of that in ``ref_range``."""
    reference = mean_complexity(*ref_range, progress=progress)
    observed = mean_complexity(*d_range, progress=progress)
    logger.info("normalized count: %.6f (reference %.6f)", observed, reference)
    name = "complexity D=%d..%d vs %d..%d" % (d_range + ref_range)
    if observed > factor * reference:
        return CheckReport(
            name, 1, "normalized count %.6f exceeds %g x %.6f" % (observed, factor, reference)
        )
    return CheckReport(name, 1)
