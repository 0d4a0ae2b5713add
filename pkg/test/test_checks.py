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
"""Tests for the verification suites."""

import unittest

from quadsos.cli.checks import (
    CheckReport,
    check_bounds,
    check_complexity,
    check_family,
    check_lemma,
    check_oracle,
    check_structure,
    mean_complexity,
)


class TestChecks(unittest.TestCase):
    """Suites on reduced ranges."""

    def test_report(self):
        """Reports pass iff there is no counterexample"""
        self.assertTrue(CheckReport("x", 3).passed)
        self.assertEqual(CheckReport("x", 3).summary(), "PASS x: 3 cases")
        failed = CheckReport("x", 2, "bad")
        self.assertFalse(failed.passed)
        self.assertEqual(failed.summary(), "FAIL x after 2 cases: bad")

    def test_oracle(self):
        """Criterion and search agree"""
        report = check_oracle([2, 3, 5], 16)
        self.assertTrue(report.passed, msg=report.counterexample)
        self.assertGreater(report.checked, 0)

    def test_structure(self):
        """Convergent identities up to 300"""
        report = check_structure(300)
        self.assertTrue(report.passed, msg=report.counterexample)

    def test_lemma(self):
        """Lemma grid with the parity-aware equality law"""
        report = check_lemma(6, 16)
        self.assertTrue(report.passed, msg=report.counterexample)
        self.assertEqual(report.checked, 6 * 15 * 2)

    def test_family(self):
        """Both families on small ranges, extremal values included"""
        report = check_family("t2m1", 6, 20)
        self.assertTrue(report.passed, msg=report.counterexample)
        report = check_family("odd-sq-m4", 4, 40)
        self.assertTrue(report.passed, msg=report.counterexample)

    def test_bounds(self):
        """Pruned and exhaustive sweeps agree for small m"""
        report = check_bounds(8)
        self.assertTrue(report.passed, msg=report.counterexample)
        self.assertEqual(report.checked, 8)

    def test_complexity(self):
        """Normalized counts of nearby ranges are of the same size"""
        self.assertGreater(mean_complexity(1000, 1100), 0.0)
        report = check_complexity((2000, 2200), (1000, 1200), 10.0)
        self.assertTrue(report.passed, msg=report.counterexample)


if __name__ == "__main__":
    unittest.main()
