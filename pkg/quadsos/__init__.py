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
====================================================
Sums of squares in quadratic fields (:mod:`quadsos`)
====================================================

For a squarefree ``D >= 2`` and a positive integer ``m``, decide whether every
``m``-multiple of a totally positive integer of ``Q(sqrt(D))`` is a sum of squares of
integers, and reproduce the bounds and families that constrain the answer.

.. code-block:: python

    from quadsos import decide, sweep

    decide(4, 13).answer      # True
    decide(4, 14).witness     # first indecomposable whose 4-multiple fails
    sweep(4)                  # [2, 3, 5, 6, 7, 10, 11, 13]
"""

from .version import __version__
from .exceptions import QuadSosError
from .field import QuadInt, expand, alphas, count, enumerate_indecomposables
from .representation import decide, sweep, is_sum_of_squares, brute_force_sos
