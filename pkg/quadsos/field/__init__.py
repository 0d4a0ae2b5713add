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
"""Quadratic integers, continued fractions of omega_D and indecomposables."""

from .quad_arith import (
    MODE_1,
    MODE_23,
    QuadInt,
    basis_mode,
    check_field,
    conjugate,
    is_squarefree,
    is_totally_positive,
    isqrt,
    mul,
    norm,
    squarefree_sieve,
    trace,
)
from .cf_engine import (
    AlphaSeq,
    CFExpansion,
    alphas,
    expand,
    fundamental_unit,
    partial_quotients,
    totally_positive_unit,
)
from .indecomposables import Indecomposable, count, enumerate_indecomposables, iter_indecomposables
