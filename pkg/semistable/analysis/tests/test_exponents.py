import math
import unittest

import mpmath
import pytest

from semistable.error import DomainError
from semistable.analysis import (
    admissible_alpha, critical_power, dimension_threshold, lambda_sharp, regularity_exponents,
)

class TestRegularityExponents(unittest.TestCase):
    def test_dimension_eleven(self):
        """Test p0 and p1 against high precision values"""
        mpmath.mp.dps = 30
        root = 2 * mpmath.sqrt(10)
        p0, p1, N_m = regularity_exponents(11)
        self.assertAlmostEqual(p0, float(22 / (11 - root - 4)), places=9)
        self.assertAlmostEqual(p1, float(22 / (11 - root - 2)), places=9)
        self.assertAlmostEqual(p0, 32.571, places=2)
        self.assertIsNone(N_m)

    def test_dimension_ten(self):
        p0, p1, _ = regularity_exponents(10)
        self.assertEqual(p0, math.inf)
        self.assertAlmostEqual(p1, 10.0)

    def test_low_dimensions_are_unbounded(self):
        for n in range(2, 10):
            self.assertEqual(regularity_exponents(n).p0, math.inf)

    def test_dimension_threshold(self):
        mpmath.mp.dps = 30
        expected = 2 + 4 * mpmath.mpf(3) / 2 + 4 * mpmath.sqrt(mpmath.mpf(3) / 2)
        self.assertAlmostEqual(dimension_threshold(3), float(expected), places=12)
        self.assertAlmostEqual(regularity_exponents(13, 3).N_m, 12.898979, places=6)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            regularity_exponents(1)
        with self.assertRaises(DomainError):
            dimension_threshold(1.0)
        with self.assertRaises(DomainError):
            lambda_sharp(10, 0.5)

class TestCriticalPower(unittest.TestCase):
    def test_inverts_threshold(self):
        self.assertAlmostEqual(critical_power(dimension_threshold(3)), 3.0, places=9)
        for n in (11, 13, 20, 50):
            self.assertAlmostEqual(dimension_threshold(critical_power(n)), n, places=9)

    def test_no_solution_at_or_below_ten(self):
        with self.assertRaises(DomainError):
            critical_power(10)

@pytest.mark.parametrize("n, m, expected", [(13, 3, 10.0), (20, 2, 2 * (20 - 4)), (11, 5, 0.5 * (11 - 2.5))])
def test_lambda_sharp(n, m, expected):
    assert lambda_sharp(n, m) == pytest.approx(expected)

class TestAdmissibleAlpha(unittest.TestCase):
    def test_small_exponent_uses_one(self):
        self.assertEqual(admissible_alpha(20, 2.0), 1.0)
        self.assertEqual(admissible_alpha(20, 2.0, "W1p"), 1.0)

    def test_near_critical_exponent(self):
        """Test the chosen alpha reaches p below p0"""
        n, p = 11, 30.0
        alpha = admissible_alpha(n, p)
        self.assertTrue(1.0 <= alpha < 1.0 + math.sqrt(n - 1))
        self.assertLess(p, 2 * n / (n - 2 * alpha - 2))

    def test_w1p(self):
        n = 11
        p = 0.9 * regularity_exponents(n).p1
        alpha = admissible_alpha(n, p, "W1p")
        self.assertLess(p, 2 * n / (n - 2 * alpha))

    def test_beyond_critical_exponent(self):
        with self.assertRaises(DomainError):
            admissible_alpha(11, 40.0)
        with self.assertRaises(DomainError):
            admissible_alpha(11, 2.0, "Linf")
