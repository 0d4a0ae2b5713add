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
"""Sum-of-squares criteria, analytic bounds, oracles and the decision procedure."""

from .peters import PetersVerdict, is_sum_of_squares
from .oracle import (
    SquareDecomposition,
    brute_force_lemma_min,
    brute_force_sos,
    totally_positive_elements,
)
from .bounds import (
    Case,
    CorollaryVerdict,
    Endpoint,
    ExclusionIntervals,
    IntervalQ,
    LemmaBound,
    corollary_predicates,
    default_d_max,
    family_odd_square_minus4,
    family_t2m1,
    grouping_gaps,
    interval_I,
    interval_J,
    lemma_bound_attained,
    lemma_min,
    proposition_interval,
    proposition_witness,
    theorem2_intervals,
)
from .decision import EXHAUSTIVE, PRUNED, Decision, decide, sweep
