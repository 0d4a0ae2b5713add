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
"""Tests for exact quadratic integer arithmetic."""

import unittest

from hypothesis import given, strategies as st

from quadsos.exceptions import FieldMismatchError, NotSquarefreeError
from quadsos.field.quad_arith import (
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

FIELDS = st.sampled_from([2, 3, 5, 6, 7, 13, 14, 17, 21, 33])
COORDS = st.integers(min_value=-60, max_value=60)


@st.composite
def pairs(draw):
    """Two elements of the same field."""
    d = draw(FIELDS)
    return QuadInt(draw(COORDS), draw(COORDS), d), QuadInt(draw(COORDS), draw(COORDS), d)


@st.composite
def triples(draw):
    """Three elements of the same field."""
    d = draw(FIELDS)
    return tuple(QuadInt(draw(COORDS), draw(COORDS), d) for _ in range(3))


class TestIntegers(unittest.TestCase):
    """Integer square roots and squarefree tests."""

    def test_isqrt(self):
        """isqrt returns the floor of the square root"""
        self.assertEqual(isqrt(0), 0)
        self.assertEqual(isqrt(15), 3)
        self.assertEqual(isqrt(10**6), 1000)
        self.assertEqual(isqrt(10**40 + 1), 10**20)

    def test_isqrt_negative(self):
        """isqrt rejects negative input"""
        with self.assertRaises(ValueError):
            isqrt(-1)

    @given(st.integers(min_value=0, max_value=10**30))
    def test_isqrt_bracket(self, n):
        """r**2 <= n < (r + 1)**2"""
        r = isqrt(n)
        self.assertLessEqual(r * r, n)
        self.assertLess(n, (r + 1) ** 2)

    def test_is_squarefree(self):
        """Trial division finds square factors"""
        self.assertFalse(is_squarefree(12))
        self.assertFalse(is_squarefree(18))
        self.assertTrue(is_squarefree(15))
        self.assertTrue(is_squarefree(21))
        with self.assertRaises(ValueError):
            is_squarefree(1)

    def test_sieve_matches_trial_division(self):
        """The sieve agrees with is_squarefree"""
        mask = squarefree_sieve(500)
        self.assertFalse(mask[0] or mask[1])
        for n in range(2, 501):
            self.assertEqual(bool(mask[n]), is_squarefree(n), msg=str(n))
        self.assertEqual(list(squarefree_sieve(12).nonzero()[0]), [2, 3, 5, 6, 7, 10, 11])

    def test_check_field(self):
        """Invalid field parameters raise an error that is also a ValueError"""
        self.assertEqual(check_field(13), 13)
        for d in (1, 12, -5):
            with self.assertRaises(NotSquarefreeError):
                check_field(d)
        with self.assertRaises(ValueError):
            QuadInt(1, 1, 12)

    def test_basis_mode(self):
        """The basis depends on d mod 4"""
        self.assertEqual(basis_mode(5), MODE_1)
        self.assertEqual(basis_mode(2), MODE_23)
        self.assertEqual(basis_mode(3), MODE_23)


class TestQuadInt(unittest.TestCase):
    """Ring operations in the omega basis."""

    def test_mul_examples(self):
        """Products in both bases"""
        self.assertEqual(mul(QuadInt(1, 1, 2), QuadInt(1, 1, 2)), QuadInt(3, 2, 2))
        self.assertEqual(mul(QuadInt.omega(5), QuadInt.omega(5)), QuadInt(1, 1, 5))
        self.assertEqual(QuadInt(2, 1, 13) * QuadInt(2, 1, 13), QuadInt(7, 5, 13))
        self.assertEqual(QuadInt(1, 1, 2) ** 3, QuadInt(7, 5, 2))
        self.assertEqual(3 * QuadInt(1, -1, 5), QuadInt(3, -3, 5))

    def test_mismatched_fields(self):
        """Elements of different fields do not combine"""
        with self.assertRaises(FieldMismatchError):
            mul(QuadInt(1, 1, 2), QuadInt(1, 1, 3))
        with self.assertRaises(ValueError):
            _ = QuadInt(1, 1, 2) + QuadInt(1, 1, 5)

    def test_conjugate_norm_trace(self):
        """Conjugates use omega' = 1 - omega when d = 1 mod 4"""
        self.assertEqual(conjugate(QuadInt.omega(5)), QuadInt(1, -1, 5))
        self.assertEqual(conjugate(QuadInt(3, 2, 2)), QuadInt(3, -2, 2))
        self.assertEqual(norm(QuadInt(1, 1, 2)), -1)
        self.assertEqual(norm(QuadInt.omega(5)), -1)
        self.assertEqual(norm(QuadInt(1, 1, 13)), -1)
        self.assertEqual(trace(QuadInt.omega(5)), 1)
        self.assertEqual(trace(QuadInt(3, 2, 2)), 6)

    def test_totally_positive(self):
        """Both embeddings are compared exactly"""
        self.assertFalse(is_totally_positive(QuadInt(1, 1, 2)))
        self.assertTrue(is_totally_positive(QuadInt(3, 2, 2)))
        self.assertTrue(is_totally_positive(QuadInt(2, -1, 5)))
        self.assertFalse(is_totally_positive(QuadInt(1, -1, 5)))
        self.assertFalse(is_totally_positive(QuadInt(0, 0, 7)))

    def test_half_coordinates(self):
        """(X + Y*sqrt(D))/2 round trip and integrality"""
        self.assertEqual(QuadInt.from_half(3, 1, 5), QuadInt(1, 1, 5))
        self.assertEqual(QuadInt(1, 1, 5).half_coords(), (3, 1))
        self.assertEqual(QuadInt(3, 2, 2).sqrt_coefficient(), 4)
        with self.assertRaises(ValueError):
            QuadInt.from_half(1, 1, 2)
        with self.assertRaises(ValueError):
            QuadInt.from_half(2, 1, 5)

    def test_str(self):
        """Readable rendering"""
        self.assertEqual(str(QuadInt(3, -2, 2)), "3 - 2*sqrt(2)")
        self.assertEqual(str(QuadInt(0, 1, 5)), "1*w5")
        self.assertEqual(str(QuadInt(4, 0, 5)), "4")

    @given(pairs())
    def test_norm_multiplicative(self, pair):
        """N(ab) = N(a) N(b)"""
        a, b = pair
        self.assertEqual(norm(a * b), norm(a) * norm(b))

    @given(pairs())
    def test_mul_commutative(self, pair):
        """ab = ba"""
        a, b = pair
        self.assertEqual(mul(a, b), mul(b, a))

    @given(triples())
    def test_mul_associative_and_distributive(self, triple):
        """(ab)c = a(bc) and a(b + c) = ab + ac"""
        a, b, c = triple
        self.assertEqual(mul(mul(a, b), c), mul(a, mul(b, c)))
        self.assertEqual(mul(a, b + c), mul(a, b) + mul(a, c))
        self.assertEqual(mul(a + b, c), mul(a, c) + mul(b, c))

    @given(pairs())
    def test_trace_additive(self, pair):
        """Tr(a + b) = Tr(a) + Tr(b) and conjugation is a ring map"""
        a, b = pair
        self.assertEqual(trace(a + b), trace(a) + trace(b))
        self.assertEqual(conjugate(a * b), conjugate(a) * conjugate(b))

    @given(pairs())
    def test_norm_is_product_with_conjugate(self, pair):
        """a * a' is the rational integer N(a)"""
        a, _ = pair
        self.assertEqual(a * conjugate(a), QuadInt.from_int(norm(a), a.d))
        self.assertEqual(conjugate(conjugate(a)), a)

    @given(pairs())
    def test_totally_positive_matches_norm_and_trace(self, pair):
        """Totally positive iff N(a) > 0 and Tr(a) > 0"""
        a, _ = pair
        self.assertEqual(is_totally_positive(a), norm(a) > 0 and trace(a) > 0)


if __name__ == "__main__":
    unittest.main()
