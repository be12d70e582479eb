import json
import math
import unittest
from unittest import mock

import pytest

from semistable.error import DomainError
from semistable.geometry import ModelKind, make_space_form
from semistable.nonlinearity import make_exp_model, make_gelfand
from semistable.analysis import (
    ExponentTable, ExtremalReport, HypothesisError, LadderLevel, ReportFailure, check_ladder,
    extremal_ladder, nine_digits, verify_extremal,
)

class TestCheckLadder(unittest.TestCase):
    def test_valid(self):
        self.assertEqual(check_ladder((256, 512.0)), [256, 512])

    def test_invalid(self):
        with self.assertRaises(DomainError):
            check_ladder([])
        with self.assertRaises(DomainError):
            check_ladder([512, 256])

class TestVerifyExtremal(unittest.TestCase):
    def test_hyperbolic_exp_model(self):
        """Test the fold on H^10 lands within 2% of lambda* = 16"""
        model = make_space_form(ModelKind.HYPERBOLIC, 10, 1.0)
        report = verify_extremal(model, make_exp_model(model), [512, 1024, 2048], jobs=2)
        self.assertEqual(report.lambda_star_closed, 16.0)
        self.assertLess(report.relative_error, 0.02)
        self.assertEqual(report.exponents.p0, math.inf)
        self.assertAlmostEqual(report.exponents.p1, 10.0)

    def test_hypothesis_violation(self):
        model = make_space_form(ModelKind.HYPERBOLIC, 10, 1.0)
        with self.assertRaises(HypothesisError):
            verify_extremal(model, make_gelfand(), [64])

    @mock.patch("semistable.analysis.verify.extremal_ladder")
    def test_missed_extremal_parameter(self, ladder):
        """Test a fold more than 2% away raises with the report attached"""
        ladder.return_value = [LadderLevel(64, 15.0, 0.1, 1e-3)]
        model = make_space_form(ModelKind.HYPERBOLIC, 10, 1.0)
        with self.assertRaises(ReportFailure) as ctx:
            verify_extremal(model, make_exp_model(model), [64])
        self.assertEqual(ctx.exception.report.lambda_star_numeric, 15.0)
        self.assertAlmostEqual(ctx.exception.report.relative_error, 1 / 16)

    @mock.patch("semistable.analysis.verify.extremal_ladder")
    def test_residual_must_decrease(self, ladder):
        ladder.return_value = [LadderLevel(64, 15.9, 0.1, 1e-3), LadderLevel(128, 15.95, 0.1, 2e-3)]
        model = make_space_form(ModelKind.HYPERBOLIC, 10, 1.0)
        with self.assertRaises(ReportFailure):
            verify_extremal(model, make_exp_model(model), [64, 128])

class TestReport(unittest.TestCase):
    def test_json(self):
        report = ExtremalReport(
            lambda_star_numeric=15.9876543219, lambda_star_closed=16.0, max_pointwise_gap=0.25,
            weak_residual_of_closed_form=1e-4, exponents=ExponentTable(p0=math.inf, p1=10.0),
        )
        data = json.loads(report.to_json())
        self.assertEqual(data["lambda_star_numeric"], 15.9876543)
        self.assertEqual(data["exponents"]["p0"], "inf")
        self.assertIsNone(data["exponents"]["N_m"])

    def test_nine_digits(self):
        self.assertEqual(nine_digits(1 / 3), 0.333333333)
        self.assertEqual(nine_digits(-math.inf), "-inf")
        self.assertIsNone(nine_digits(None))


@pytest.mark.parametrize("kind", [ModelKind.EUCLIDEAN, ModelKind.HYPERBOLIC])
def test_pointwise_gap_shrinks_with_mesh(kind):
    """The last branch point approaches the singular solution away from the pole"""
    model = make_space_form(kind, 10, 1.0)
    nl = make_gelfand() if kind is ModelKind.EUCLIDEAN else make_exp_model(model)
    levels = extremal_ladder(model, nl, [512, 1024, 2048], jobs=3)
    gaps = [level.gap for level in levels]
    assert all(math.isfinite(gap) for gap in gaps)
    assert gaps[0] > gaps[1] > gaps[2]
    assert abs(levels[-1].lambda_star - 16.0) < 0.02 * 16.0
