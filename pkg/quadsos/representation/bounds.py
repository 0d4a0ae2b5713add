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
Necessary and sufficient conditions on :math:`D` in terms of :math:`m`.

# section: overview

    The elements :math:`\lfloor k\sqrt{D} \rfloor + 1 + k\sqrt{D}` are the smallest totally
    positive elements with a fixed irrational part. Comparing :math:`m` times such an
    element with the least possible value of :math:`\sum a_i^2 + D b_i^2` under
    :math:`\sum a_i b_i = mk/2` yields intervals of :math:`\sqrt{D}` in which
    :math:`m\mathcal{O}^+` contains an element that is not a sum of squares.

    This module provides

    1. the interval families :math:`I_t(m)` and :math:`J_t(m)` over :math:`D` and the
       minimum of :math:`m^2/x + xD` over (parity restricted) positive integers,
    2. the intervals :math:`S(t, k)` over :math:`\sqrt{D}` and their grouped form
       ``theorem2_intervals``, with the parts of the latter that no single interval covers,
    3. the corollary predicates used to short-circuit decisions and bound sweeps,
    4. the closed-form answers for the families :math:`D = t^2 - 1` and
       :math:`D = (2t+1)^2 - 4`.

    Endpoints are kept as :math:`(p + q\sqrt{r})/s` and every comparison is exact.
"""

import enum
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import List, Optional, Tuple

from quadsos.exceptions import ParityError
from quadsos.field.quad_arith import MODE_1, MODE_23, QuadInt, basis_mode, is_squarefree, isqrt
from quadsos.field.utils import ceil_div, sign_surd2

logger = logging.getLogger(__name__)


class Case(enum.Enum):
    """Residue class of ``d`` combined with the parity of ``m`` where it matters."""

    MOD23 = "d=2,3 mod 4"
    MOD1_EVEN = "d=1 mod 4, m even"
    MOD1_ODD = "d=1 mod 4, m odd"

    @classmethod
    def of(cls, m: int, d: int) -> "Case":
        """Case of the pair ``(m, d)``."""
        if basis_mode(d) != MODE_1:
            return cls.MOD23
        return cls.MOD1_EVEN if m % 2 == 0 else cls.MOD1_ODD

    @classmethod
    def for_multiplier(cls, m: int) -> Tuple["Case", "Case"]:
        """The two cases that occur for a fixed ``m``."""
        return cls.MOD23, cls.MOD1_EVEN if m % 2 == 0 else cls.MOD1_ODD


@total_ordering
@dataclass(frozen=True, eq=False)
class Endpoint:
    r"""The real number :math:`(p + q\sqrt{r})/s` with ``s > 0`` and ``r >= 0``."""

    p: int
    q: int = 0
    r: int = 0
    s: int = 1

    def __post_init__(self):
        if self.s <= 0 or self.r < 0:
            raise ValueError(f"Invalid endpoint ({self.p} + {self.q}*sqrt({self.r}))/{self.s}.")

    @classmethod
    def rational(cls, value) -> "Endpoint":
        """Endpoint equal to an ``int`` or :class:`~fractions.Fraction`."""
        value = Fraction(value)
        return cls(value.numerator, 0, 0, value.denominator)

    @classmethod
    def sqrt_of(cls, d: int) -> "Endpoint":
        r"""Endpoint equal to :math:`\sqrt{d}`."""
        return cls(0, 1, d, 1)

    def compare(self, other: "Endpoint") -> int:
        """Sign of ``self - other``."""
        # s2*(p1 + q1*sqrt(r1)) - s1*(p2 + q2*sqrt(r2))
        return sign_surd2(
            self.p * other.s - other.p * self.s,
            self.q * other.s,
            self.r,
            -other.q * self.s,
            other.r,
        )

    def __eq__(self, other):
        if not isinstance(other, Endpoint):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other):
        if not isinstance(other, Endpoint):
            return NotImplemented
        return self.compare(other) < 0

    __hash__ = None

    def squared_floor(self) -> int:
        """Largest integer ``n`` with ``sqrt(n) <= self`` (``-1`` when ``self < 0``)."""
        if self < Endpoint(0):
            return -1
        # s^2 * self^2 = p^2 + q^2*r + 2pq*sqrt(r); floor the surd term with isqrt
        cross = isqrt(4 * self.p * self.p * self.q * self.q * self.r)
        if self.p * self.q < 0:
            cross = -cross - 1
        numerator = self.p * self.p + self.q * self.q * self.r + cross
        guess = max(0, numerator // (self.s * self.s) - 1)
        while Endpoint.sqrt_of(guess + 1) <= self:
            guess += 1
        while guess >= 0 and Endpoint.sqrt_of(guess) > self:
            guess -= 1
        return guess

    def approx(self) -> float:
        """Decimal value, for display only."""
        return (self.p + self.q * math.sqrt(self.r)) / self.s

    def __str__(self):
        if self.q == 0 or self.r == 0:
            frac = Fraction(self.p, self.s)
            return str(frac)
        sign = "+" if self.q > 0 else "-"
        coef = "" if abs(self.q) == 1 else "%d*" % abs(self.q)
        body = "%d %s %ssqrt(%d)" % (self.p, sign, coef, self.r)
        return body if self.s == 1 else "(%s)/%d" % (body, self.s)


@dataclass(frozen=True)
class IntervalQ:
    r"""Closed interval with exact endpoints; ``hi is None`` means :math:`+\infty`.

    ``over`` is ``"D"`` or ``"sqrt(D)"``. ``min_d`` is the smallest ``d`` the producing
    statement applies to; membership ignores it, :meth:`applies_to` enforces it.
    """

    lo: Endpoint
    hi: Optional[Endpoint] = None
    over: str = "sqrt(D)"
    min_d: int = 2
    label: str = ""

    def is_empty(self) -> bool:
        """True iff ``lo > hi``."""
        return self.hi is not None and self.lo > self.hi

    def contains(self, value: Endpoint) -> bool:
        """Exact membership of a real number."""
        if value < self.lo:
            return False
        return self.hi is None or value <= self.hi

    def contains_d(self, d: int) -> bool:
        r"""Membership of ``d`` (or of :math:`\sqrt{d}` for intervals over ``sqrt(D)``)."""
        point = Endpoint.sqrt_of(d) if self.over == "sqrt(D)" else Endpoint.rational(d)
        return self.contains(point)

    def applies_to(self, d: int) -> bool:
        """Membership restricted to the ``d`` the producing statement covers."""
        return d >= self.min_d and self.contains_d(d)

    def d_range(self) -> Tuple[int, Optional[int]]:
        """Integers ``d`` inside the interval as ``(first, last)``, ``last`` None if unbounded."""
        if self.over == "sqrt(D)":
            first = max(0, self.lo.squared_floor())
            if not self.contains_d(first):
                first += 1
            last = None if self.hi is None else self.hi.squared_floor()
        else:
            first = ceil_div(self.lo.p, self.lo.s)
            last = None if self.hi is None else self.hi.p // self.hi.s
        return first, last

    def describe(self) -> str:
        """Symbolic form with approximate decimals."""
        hi = "inf" if self.hi is None else str(self.hi)
        hi_approx = "inf" if self.hi is None else "%.6f" % self.hi.approx()
        return "%s in [%s, %s]  (approx. [%.6f, %s])" % (
            self.over,
            self.lo,
            hi,
            self.lo.approx(),
            hi_approx,
        )


@dataclass(frozen=True)
class ExclusionIntervals:
    """Head interval and non-empty grouped intervals for one case of one ``m``."""

    m: int
    case: Case
    intervals: Tuple[IntervalQ, ...] = field(default_factory=tuple)

    def excludes(self, d: int) -> bool:
        """True iff ``d`` belongs to this case and lies in one of the intervals."""
        return Case.of(self.m, d) is self.case and any(iv.applies_to(d) for iv in self.intervals)


# --- interval families over D ------------------------------------------------------------------


def interval_I(t: int, m: int) -> IntervalQ:  # pylint: disable=invalid-name
    r""":math:`I_t(m) = [m^2/(t(t+1)), m^2/((t-1)t)]`, unbounded for ``t == 1``."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}.")
    lo = Endpoint.rational(Fraction(m * m, t * (t + 1)))
    hi = None if t == 1 else Endpoint.rational(Fraction(m * m, (t - 1) * t))
    return IntervalQ(lo, hi, over="D", label="I_%d(%d)" % (t, m))


def interval_J(t: int, m: int) -> IntervalQ:  # pylint: disable=invalid-name
    r""":math:`J_t(m) = [m^2/(t(t+2)), m^2/((t-2)t)]`, unbounded for ``t`` in {1, 2}."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}.")
    lo = Endpoint.rational(Fraction(m * m, t * (t + 2)))
    hi = None if t <= 2 else Endpoint.rational(Fraction(m * m, (t - 2) * t))
    return IntervalQ(lo, hi, over="D", label="J_%d(%d)" % (t, m))


@dataclass(frozen=True)
class LemmaBound:
    """Minimizing ``t``, the bound ``m**2/t + t*D`` and every tied minimizer."""

    t: int
    value: Fraction
    ties: Tuple[int, ...]


def lemma_min(m: int, d: int, parity: bool = False) -> LemmaBound:
    r"""Minimum of :math:`f(x) = m^2/x + xD` over positive integers ``x``.

    With ``parity`` the minimum is taken over ``x`` congruent to ``m`` mod 2, matching
    sums with :math:`a_i \equiv b_i \pmod 2`. The minimizer is the ``t`` with
    :math:`D \in I_t(m)` resp. :math:`D \in J_t(m)`.
    """
    if m < 1 or d <= 0:
        raise ValueError(f"lemma_min expects m >= 1 and D > 0, got m={m}, D={d}.")
    step = 2 if parity else 1
    first = (2 - m % 2) if parity else 1
    msq = m * m
    # f(x) <= f(x + step) iff x*(x + step)*D >= m^2; f is convex, take the first such x
    t = max(first, isqrt(msq // d) - 2 * step)
    if (t - first) % step:
        t -= 1
    while t - step >= first and (t - step) * t * d >= msq:
        t -= step
    while t * (t + step) * d < msq:
        t += step
    ties = (t, t + step) if t * (t + step) * d == msq else (t,)
    return LemmaBound(t=t, value=Fraction(msq, t) + t * d, ties=ties)


def lemma_bound_attained(m: int, t: int, parity: bool = False) -> bool:
    r"""Whether :math:`\sum a_i^2 + D b_i^2 = m^2/t + tD` is reachable with :math:`\sum b_i^2 = t`.

    Without parity this is :math:`t^2/\gcd(m,t)^2 \mid t`. With parity the
    construction :math:`a_i = (m/t) b_i` must also keep :math:`a_i \equiv b_i`.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}.")
    g = math.gcd(m, t)
    t_red, m_red = t // g, m // g
    if g % t_red:
        return False
    if not parity:
        return True
    if (m - t) % 2:
        return False
    return (m_red - t_red) % 2 == 0 or (g // t_red) % 4 == 0


# --- intervals over sqrt(D) --------------------------------------------------------------------


def proposition_interval(t: int, k: int, m: int, mode: int) -> IntervalQ:
    r"""The interval :math:`S(t, k)` of :math:`\sqrt{D}` excluded for ``m``.

    For :math:`D \equiv 2,3` it is
    :math:`[mk/(2t) + \sqrt{m/t},\ mk/(2(t-1)) - \sqrt{m/(t-1)}]` and applies to
    :math:`D \geq m`; for :math:`D \equiv 1` it is
    :math:`[mk/t + 2\sqrt{m/t},\ mk/(t-2) - 2\sqrt{m/(t-2)}]`, needs
    :math:`t \equiv mk \pmod 2` and applies to :math:`D \geq 4m`.

    Raises:
        ParityError: for ``mode == MODE_1`` and ``t`` of the wrong parity.
    """
    if t < 1 or k < 1:
        raise ValueError(f"t and k must be positive, got t={t}, k={k}.")
    mk = m * k
    label = "S(%d,%d)" % (t, k)
    if mode == MODE_1:
        if (t - mk) % 2:
            raise ParityError(f"S({t},{k}) for m={m} needs t = mk (mod 2) when D = 1 (mod 4).")
        lo = Endpoint(mk, 2, m * t, t)
        hi = None if t <= 2 else Endpoint(mk, -2, m * (t - 2), t - 2)
        return IntervalQ(lo, hi, min_d=max(2, 4 * m), label=label)
    lo = Endpoint(mk, 2, m * t, 2 * t)
    hi = None if t == 1 else Endpoint(mk, -2, m * (t - 1), 2 * (t - 1))
    return IntervalQ(lo, hi, min_d=max(2, m), label=label)


def proposition_witness(d: int, k: int) -> QuadInt:
    r"""Smallest totally positive element whose :math:`\omega_D` coefficient is ``k``.

    This is :math:`\lfloor k\sqrt{D}\rfloor + 1 + k\sqrt{D}` for :math:`D \equiv 2,3` and
    :math:`\lfloor (k\sqrt{D} - k)/2 \rfloor + 1 + k\omega_D` for :math:`D \equiv 1`; its
    ``m``-multiple fails to be a sum of squares whenever :math:`\sqrt{D} \in S(t, k)`.
    """
    root = isqrt(k * k * d)
    if basis_mode(d) == MODE_1:
        return QuadInt((root - k) // 2 + 1, k, d)
    return QuadInt(root + 1, k, d)


def _grouped_interval(m: int, case: Case, i: int) -> IntervalQ:
    root40, root70 = 40, 70
    if case is Case.MOD23:
        lo = Endpoint(m, 2 * i * i, root40, 2 * i)
        hi = Endpoint(m, -2 * (i - 1) ** 2, root70, 2 * (i - 1))
    elif case is Case.MOD1_EVEN:
        lo = Endpoint(m, 4 * i * i, root40, 2 * i)
        hi = Endpoint(m, -4 * (i - 1) ** 2, root70, 2 * (i - 1))
    else:
        lo = Endpoint(m, (2 * i + 1) * (4 * i + 2), root40, 2 * i + 1)
        hi = Endpoint(m, -(2 * i - 1) * (4 * i - 2), root70, 2 * i - 1)
    return IntervalQ(lo, hi, label="i=%d" % i)


def head_interval(m: int, case: Case) -> IntervalQ:
    r"""The unbounded interval of a case.

    Its left end is :math:`m/2 + 4`, :math:`m/2 + 8` resp. :math:`m + 4`.
    """
    if case is Case.MOD23:
        lo = Endpoint(m + 8, s=2)
    elif case is Case.MOD1_EVEN:
        lo = Endpoint(m + 16, s=2)
    else:
        lo = Endpoint(m + 4)
    return IntervalQ(lo, None, label="head")


def theorem2_intervals(m: int, case: Case) -> ExclusionIntervals:
    r"""All non-empty grouped exclusion intervals of :math:`\sqrt{D}` for ``m`` and ``case``.

    The grouped intervals widen the gaps between consecutive :math:`S(t, k)` with the
    constants :math:`\sqrt{40}` and :math:`\sqrt{70}`; their left minus right endpoint
    grows with ``i``, so generation stops at the first empty one.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}.")
    if case is Case.MOD1_EVEN and m % 2 or case is Case.MOD1_ODD and m % 2 == 0:
        raise ParityError(f"Case {case.value!r} does not match m={m}.")
    intervals = [head_interval(m, case)]
    i = 1 if case is Case.MOD1_ODD else 2
    while True:
        interval = _grouped_interval(m, case, i)
        if interval.is_empty():
            break
        intervals.append(interval)
        i += 1
    logger.debug("m=%d, %s: %d exclusion intervals", m, case.value, len(intervals))
    return ExclusionIntervals(m=m, case=case, intervals=tuple(intervals))


def covering_proposition_interval(
    m: int, d: int, t_max: int = 64, k_max: int = 64
) -> Optional[Tuple[int, int, IntervalQ]]:
    """First applicable ``S(t, k)`` (by ``k`` then ``t``) containing ``sqrt(d)``.

    Returned as ``(t, k, interval)``, or None when no such interval exists.
    """
    mode = basis_mode(d)
    for k in range(1, k_max + 1):
        for t in range(1, t_max + 1):
            if mode == MODE_1 and (t - m * k) % 2:
                continue
            interval = proposition_interval(t, k, m, mode)
            if not interval.is_empty() and interval.applies_to(d):
                return t, k, interval
    return None


def proposition_cover(m: int, case: Case, t_max: Optional[int] = None) -> List[IntervalQ]:
    """Non-empty ``S(t, k)`` with ``k <= t <= t_max`` for ``case``, sorted by left end.

    ``t_max`` defaults to ``m // 4 + 2``, which reaches past the left end of every head
    interval.
    """
    mode = MODE_23 if case is Case.MOD23 else MODE_1
    t_max = max(4, m // 4 + 2) if t_max is None else t_max
    cover = []
    for t in range(1, t_max + 1):
        for k in range(1, t + 1):
            if mode == MODE_1 and (t - m * k) % 2:
                continue
            interval = proposition_interval(t, k, m, mode)
            if not interval.is_empty():
                cover.append(interval)
    cover.sort(key=lambda interval: interval.lo)
    return cover


def uncovered_parts(interval: IntervalQ, cover: List[IntervalQ]) -> List[IntervalQ]:
    """Parts of ``interval`` outside the union of ``cover``, which must be sorted by left end.

    Each part is returned closed; its end points themselves may be covered.
    """
    gaps = []
    reached = interval.lo
    for piece in cover:
        if interval.hi is not None and interval.hi < piece.lo:
            break
        if piece.hi is not None and piece.hi < reached:
            continue
        if reached < piece.lo:
            gaps.append(IntervalQ(reached, piece.lo, over=interval.over, label="gap"))
        if piece.hi is None:
            return gaps
        if reached < piece.hi:
            reached = piece.hi
        if interval.hi is not None and not reached < interval.hi:
            return gaps
    gaps.append(IntervalQ(reached, interval.hi, over=interval.over, label="gap"))
    return gaps


def grouping_gaps(
    m: int, case: Case, t_max: Optional[int] = None
) -> List[Tuple[IntervalQ, IntervalQ]]:
    """``(interval, gap)`` for each part of an exclusion interval that no ``S(t, k)`` covers.

    Head intervals are always covered. A grouped interval can leave a gap at small ``m``:
    for ``m = 88`` the part of ``[22 + 2*sqrt(40), 44 - sqrt(70)]`` below the left end
    of ``S(3, 2)`` is uncovered.
    """
    cover = proposition_cover(m, case, t_max)
    return [
        (interval, gap)
        for interval in theorem2_intervals(m, case).intervals
        for gap in uncovered_parts(interval, cover)
    ]


# --- corollary ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class CorollaryVerdict:
    """The corollary's exclusion and sufficiency predicates for ``(m, d)``."""

    excluded_by_a_b_c: bool
    sufficient_by_d: bool
    excluded_by_e: bool


def corollary_predicates(m: int, d: int) -> CorollaryVerdict:
    """Evaluate the upper bounds, the small-``d`` sufficiency and the odd-``m`` obstruction."""
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}.")
    if basis_mode(d) == MODE_1:
        if m % 2 == 0:
            upper = 4 * d >= (m + 16) ** 2
        else:
            upper = d >= (m + 4) ** 2
        return CorollaryVerdict(upper, d <= 2 * m, False)
    upper = 4 * d >= (m + 8) ** 2
    return CorollaryVerdict(upper, m % 2 == 0 and d <= m, m % 2 == 1)


def default_d_max(m: int) -> int:
    """Largest ``d`` not excluded by the upper bounds of any case for ``m``."""
    if m % 2 == 0:
        return ceil_div((m + 16) ** 2, 4) - 1
    return (m + 4) ** 2 - 1


# --- families ----------------------------------------------------------------------------------


def family_t2m1(t: int, m: int) -> bool:
    r"""Whether :math:`2m\mathcal{O}^+` consists of sums of squares for :math:`D = t^2 - 1`.

    Only even ``t`` is covered. True iff :math:`m = (t-1)k + l`
    with :math:`k \geq 0` and :math:`0 \leq l \leq 2k`.

    Raises:
        ParityError: if ``t`` is odd.
    """
    if t % 2:
        raise ParityError(f"The t^2 - 1 family is classified for even t only, got t={t}.")
    if t < 2:
        raise ValueError(f"t must exceed 1, got {t}.")
    step = t - 1
    return any(0 <= m - step * k <= 2 * k for k in range(m // step + 1))


def family_t2m1_largest_failure(t: int) -> int:
    """Largest ``m`` failing :func:`family_t2m1`; negative when none fails."""
    return (t * t - 3 * t) // 2


def family_odd_square_minus4(t: int, m: int) -> bool:
    r"""Closed form for :math:`D = (2t+1)^2 - 4`: are all of :math:`m\mathcal{O}^+` sums of squares.

    With :math:`m = (4t-2)k + l`, :math:`k \geq 0`, one of: ``l`` even and
    :math:`0 \leq l \leq 8k`; ``l`` odd and :math:`0 \leq l \leq 8k - 2t - 3`; ``l`` odd and
    :math:`2t - 1 \leq l \leq 8k + 2t + 3`.
    """
    if t < 2:
        raise ValueError(f"t must exceed 1, got {t}.")
    step = 4 * t - 2
    for k in range(m // step + 1):
        rest = m - step * k
        if rest % 2 == 0:
            if rest <= 8 * k:
                return True
        elif rest <= 8 * k - 2 * t - 3 or 2 * t - 1 <= rest <= 8 * k + 2 * t + 3:
            return True
    return False


def family_odd_square_minus4_smallest(t: int, odd: bool) -> int:
    """Smallest odd (``2t - 1``) resp. even (``4t - 2``) ``m`` accepted for ``(2t+1)**2 - 4``."""
    return 2 * t - 1 if odd else 4 * t - 2


def family_odd_square_minus4_largest_failures(t: int) -> Tuple[int, int]:
    """The two values among which the largest failing even and odd ``m`` lie."""
    return 2 * t * t - t - 2, 2 * t * t - 3 * t - 1


def family_members(kind: str, t_max: int) -> List[Tuple[int, int]]:
    """``(t, d)`` for the squarefree members of a family up to ``t_max``.

    ``kind`` is ``"t2m1"`` (even ``t``, ``d = t**2 - 1``) or ``"odd-sq-m4"``
    (``t > 1``, ``d = (2t+1)**2 - 4``).
    """
    if kind == "t2m1":
        candidates = [(t, t * t - 1) for t in range(2, t_max + 1, 2)]
    elif kind == "odd-sq-m4":
        candidates = [(t, (2 * t + 1) ** 2 - 4) for t in range(2, t_max + 1)]
    else:
        raise ValueError(f"Unknown family {kind!r}.")
    return [(t, d) for t, d in candidates if is_squarefree(d)]
