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
"""Tests for the continued fraction of omega_D and its convergents."""

import unittest

from hypothesis import given, strategies as st

from quadsos.exceptions import NotSquarefreeError
from quadsos.field.cf_engine import (
    alphas,
    expand,
    fundamental_unit,
    partial_quotients,
    surd_states,
    totally_positive_unit,
)
from quadsos.field.quad_arith import QuadInt, is_squarefree, is_totally_positive, norm

SQUAREFREE = st.sampled_from([2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 19, 21, 22, 31, 46, 61, 94, 109])


class TestExpand(unittest.TestCase):
    """Periodic expansions."""

    def test_known_expansions(self):
        """Expansions of sqrt(D) and (1 + sqrt(D))/2"""
        expected = {
            2: (1, (2,)),
            3: (1, (1, 2)),
            5: (1, (1,)),
            7: (2, (1, 1, 1, 4)),
            13: (2, (3,)),
            14: (3, (1, 2, 1, 6)),
            15: (3, (1, 6)),
            17: (2, (1, 1, 3)),
        }
        for d, (u0, period) in expected.items():
            cf = expand(d)
            self.assertEqual((cf.u0, cf.period), (u0, period), msg=str(d))
            self.assertEqual(cf.s, len(period))

    def test_t_squared_minus_one(self):
        """sqrt(t**2 - 1) = [t - 1; 1, 2(t - 1)]"""
        for t in range(2, 41):
            d = t * t - 1
            if not is_squarefree(d):
                continue
            cf = expand(d)
            self.assertEqual((cf.u0, cf.period), (t - 1, (1, 2 * (t - 1))), msg=str(d))

    def test_odd_square_minus_four(self):
        """(1 + sqrt((2t + 1)**2 - 4))/2 = [t; 1, 2t - 1]"""
        for t in range(2, 21):
            d = (2 * t + 1) ** 2 - 4
            if not is_squarefree(d):
                continue
            cf = expand(d)
            self.assertEqual((cf.u0, cf.period), (t, (1, 2 * t - 1)), msg=str(d))

    def test_u_is_periodic(self):
        """u(i) repeats the period for i >= 1"""
        cf = expand(17)
        self.assertEqual([cf.u(i) for i in range(8)], [2, 1, 1, 3, 1, 1, 3, 1])
        self.assertEqual(partial_quotients(2, 4), [1, 2, 2, 2])

    def test_surd_states_return(self):
        """The state after the first step recurs after one period"""
        cf = expand(14)
        states = surd_states(14, cf.s + 1)
        self.assertEqual(states[1], states[cf.s + 1])

    def test_rejects_invalid_field(self):
        """Non-squarefree parameters are rejected"""
        with self.assertRaises(NotSquarefreeError):
            expand(12)


class TestAlphaSeq(unittest.TestCase):
    """Convergents, alpha_i and units."""

    def test_convergents_sqrt2(self):
        """p_i/q_i for sqrt(2) and alpha_i = p_i + q_i sqrt(2)"""
        seq = alphas(expand(2))
        self.assertEqual([seq.p(i) for i in range(-1, 3)], [1, 1, 3, 7])
        self.assertEqual([seq.q(i) for i in range(-1, 3)], [0, 1, 2, 5])
        self.assertEqual(seq.alpha(-1), QuadInt(1, 0, 2))
        self.assertEqual(seq.alpha(1), QuadInt(3, 2, 2))
        self.assertEqual(seq.last_index, 1)

    def test_alpha_mode_1(self):
        """alpha_i = p_i - q_i omega' in the (1, omega) basis"""
        seq = alphas(expand(5))
        self.assertEqual(seq.alpha(0), QuadInt(0, 1, 5))
        self.assertEqual(seq.alpha(1), QuadInt(1, 1, 5))
        self.assertEqual(seq.alpha_r(-1, 1), QuadInt(1, 1, 5))

    def test_units(self):
        """Fundamental and totally positive units"""
        self.assertEqual(fundamental_unit(alphas(expand(2))), QuadInt(1, 1, 2))
        self.assertEqual(totally_positive_unit(alphas(expand(2))), QuadInt(3, 2, 2))
        self.assertEqual(fundamental_unit(alphas(expand(3))), QuadInt(2, 1, 3))
        self.assertEqual(totally_positive_unit(alphas(expand(3))), QuadInt(2, 1, 3))
        self.assertEqual(fundamental_unit(alphas(expand(13))), QuadInt(1, 1, 13))
        self.assertEqual(fundamental_unit(alphas(expand(14))), QuadInt(15, 4, 14))

    def test_entries_ordered(self):
        """entries() lists alpha_{-1} .. alpha_{2s-1}"""
        seq = alphas(expand(14))
        self.assertEqual([i for i, _ in seq.entries()], list(range(-1, 8)))

    @given(SQUAREFREE)
    def test_determinant_identity(self, d):
        """p_{i+1} q_i - p_i q_{i+1} = (-1)^i"""
        seq = alphas(expand(d))
        for i in range(-1, 2 * seq.cf.s):
            self.assertEqual(seq.p(i + 1) * seq.q(i) - seq.p(i) * seq.q(i + 1), (-1) ** (i % 2))

    @given(SQUAREFREE)
    def test_unit_shift(self, d):
        """alpha_{i+s} = eps alpha_i and eps has norm +-1"""
        seq = alphas(expand(d))
        unit = fundamental_unit(seq)
        self.assertEqual(abs(norm(unit)), 1)
        s = seq.cf.s
        for i in range(-1, s):
            self.assertEqual(seq.alpha(i + s), unit * seq.alpha(i))
        self.assertEqual(norm(unit), (-1) ** s)

    @given(SQUAREFREE)
    def test_totally_positive_unit(self, d):
        """eps+ is a totally positive unit of norm 1"""
        plus = totally_positive_unit(alphas(expand(d)))
        self.assertEqual(norm(plus), 1)
        self.assertTrue(is_totally_positive(plus))


if __name__ == "__main__":
    unittest.main()
