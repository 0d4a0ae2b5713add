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
"""Tests for Peters' criterion."""

import unittest

from hypothesis import given, strategies as st

from quadsos.exceptions import NotTotallyPositiveError
from quadsos.field.quad_arith import MODE_1, QuadInt, basis_mode, isqrt, norm
from quadsos.representation.oracle import brute_force_sos, totally_positive_elements
from quadsos.representation.peters import PetersVerdict, is_sum_of_squares

FIELDS = st.sampled_from([2, 3, 5, 6, 7, 10, 13, 14, 17, 21, 33])


@st.composite
def totally_positive(draw, d=None):
    """A totally positive element, optionally of a given field."""
    d = draw(FIELDS) if d is None else d
    y = draw(st.integers(min_value=-30, max_value=30))
    extra = draw(st.integers(min_value=0, max_value=80))
    root = isqrt(y * y * d)
    if basis_mode(d) == MODE_1:
        # 2x + y > |y| sqrt(D)
        return QuadInt((root + 2 - y) // 2 + extra, y, d)
    return QuadInt(root + 1 + extra, y, d)


@st.composite
def same_field(draw):
    """Two totally positive elements and a non-zero element of one field."""
    d = draw(FIELDS)
    sigma = QuadInt(draw(st.integers(-6, 6)), draw(st.integers(-6, 6)), d)
    if sigma == QuadInt(0, 0, d):
        sigma = QuadInt(1, 0, d)
    return draw(totally_positive(d)), draw(totally_positive(d)), sigma


class TestPeters(unittest.TestCase):
    """Exact representability by sums of squares."""

    def test_mode_23(self):
        """D = 2: 1 and squares pass, 2 + sqrt(2) fails on parity"""
        self.assertEqual(is_sum_of_squares(QuadInt(1, 0, 2)), PetersVerdict(True, 0))
        self.assertTrue(is_sum_of_squares(QuadInt(3, 2, 2)))
        self.assertFalse(is_sum_of_squares(QuadInt(2, 1, 2)))

    def test_mode_23_interval(self):
        """4(4 + sqrt(14)) has an even sqrt(14) part but no integer c"""
        verdict = is_sum_of_squares(QuadInt(16, 4, 14))
        self.assertFalse(verdict)
        self.assertIsNone(verdict.certificate_c)
        self.assertTrue(is_sum_of_squares(QuadInt(4, 0, 14)))

    def test_mode_1(self):
        """D = 5: 2 = 1 + 1 with c = 0"""
        verdict = is_sum_of_squares(QuadInt(2, 0, 5))
        self.assertTrue(verdict)
        self.assertEqual(verdict.certificate_c, 0)
        self.assertTrue(is_sum_of_squares(QuadInt(1, 1, 5)))

    def test_multiples_for_d13(self):
        """Every 4-multiple of an indecomposable of Q(sqrt(13)) is a sum of squares"""
        for value in (QuadInt(1, 0, 13), QuadInt(2, 1, 13), QuadInt(3, 2, 13)):
            self.assertTrue(is_sum_of_squares(4 * value), msg=str(value))

    def test_rejects_non_totally_positive(self):
        """Elements outside the cone are a contract violation"""
        for xi in (QuadInt(1, 1, 2), QuadInt(0, 0, 5), QuadInt(1, -1, 5)):
            with self.assertRaises(NotTotallyPositiveError):
                is_sum_of_squares(xi)

    def test_agrees_with_search(self):
        """The criterion matches the square search for small traces"""
        for d in (2, 3, 5, 13):
            for xi in totally_positive_elements(d, 14):
                self.assertEqual(
                    bool(is_sum_of_squares(xi)), brute_force_sos(xi) is not None, msg=str(xi)
                )


class TestPetersProperties(unittest.TestCase):
    """Algebraic laws of the criterion."""

    @given(same_field())
    def test_sums_stay_representable(self, elements):
        """The sum of two sums of squares is a sum of squares"""
        xi, upsilon, _ = elements
        if is_sum_of_squares(xi) and is_sum_of_squares(upsilon):
            self.assertTrue(is_sum_of_squares(xi + upsilon), msg=(str(xi), str(upsilon)))

    @given(same_field())
    def test_square_multiples_stay_representable(self, elements):
        """xi * sigma**2 is a sum of squares whenever xi is"""
        xi, _, sigma = elements
        if is_sum_of_squares(xi):
            self.assertTrue(is_sum_of_squares(xi * sigma * sigma), msg=(str(xi), str(sigma)))

    @given(totally_positive())
    def test_large_norm_is_enough(self, xi):
        """An even sqrt(D) part and N >= D**2, or 4N >= D**2 when D = 1 mod 4, suffice"""
        d = xi.d
        if basis_mode(d) == MODE_1:
            sufficient = 4 * norm(xi) >= d * d
        else:
            sufficient = xi.y % 2 == 0 and norm(xi) >= d * d
        if sufficient:
            self.assertTrue(is_sum_of_squares(xi), msg=str(xi))


if __name__ == "__main__":
    unittest.main()
