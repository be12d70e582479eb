import math
import unittest

import numpy as np
import pytest
import sympy as sp

from semistable.error import DomainError
from semistable.geometry import ModelKind, make_custom_model, make_space_form
from semistable.nonlinearity import NonlinearityKind
from semistable.analysis import HypothesisError, closed_form_extremal

class TestClosedForm(unittest.TestCase):
    def test_hyperbolic_exp_model(self):
        pair = closed_form_extremal(make_space_form(ModelKind.HYPERBOLIC, 10, 1.0), NonlinearityKind.EXP_MODEL)
        self.assertEqual(pair.lambda_star, 16.0)
        self.assertAlmostEqual(float(pair.u(np.array([0.5]))[0]), 1.6265, places=4)
        self.assertAlmostEqual(float(pair.u(np.array([1.0]))[0]), 0.0, places=12)

    def test_elliptic_radius_conditions(self):
        """Test elliptic balls need R < min(R0, Re)"""
        for R in (1.0, 0.3):
            with self.assertRaises(HypothesisError) as ctx:
                closed_form_extremal(make_space_form(ModelKind.ELLIPTIC, 10, R), NonlinearityKind.EXP_MODEL)
            self.assertIn("R0", ctx.exception.condition)
        pair = closed_form_extremal(make_space_form(ModelKind.ELLIPTIC, 10, 0.2), NonlinearityKind.EXP_MODEL)
        self.assertEqual(pair.lambda_star, 16.0)

    def test_dimension_conditions(self):
        with self.assertRaises(HypothesisError):
            closed_form_extremal(make_space_form(ModelKind.HYPERBOLIC, 9, 1.0), NonlinearityKind.EXP_MODEL)
        with self.assertRaises(HypothesisError) as ctx:
            closed_form_extremal(make_space_form(ModelKind.HYPERBOLIC, 12, 1.0), NonlinearityKind.POWER_MODEL, 3)
        self.assertEqual(ctx.exception.condition, "n >= N(m)")

    def test_power_model(self):
        pair = closed_form_extremal(make_space_form(ModelKind.HYPERBOLIC, 13, 1.0), NonlinearityKind.POWER_MODEL, 3)
        self.assertAlmostEqual(pair.lambda_star, 10.0)
        r = np.array([0.5])
        self.assertAlmostEqual(float(pair.u(r)[0]), 1 / math.sinh(0.5) - 1 / math.sinh(1.0))

    def test_euclidean_classics(self):
        """Test the classical pairs and their 1/R^2 scaling"""
        pair = closed_form_extremal(make_space_form(ModelKind.EUCLIDEAN, 10, 2.0), NonlinearityKind.GELFAND)
        self.assertAlmostEqual(pair.lambda_star, 4.0)
        self.assertAlmostEqual(float(pair.u(np.array([1.0]))[0]), 2 * math.log(2.0))
        pair = closed_form_extremal(make_space_form(ModelKind.EUCLIDEAN, 13, 1.0), NonlinearityKind.POWER_CLASSIC, 3)
        self.assertAlmostEqual(pair.lambda_star, 10.0)
        with self.assertRaises(HypothesisError) as ctx:
            closed_form_extremal(make_space_form(ModelKind.HYPERBOLIC, 10, 1.0), NonlinearityKind.GELFAND)
        self.assertEqual(ctx.exception.condition, "euclidean ball")

    def test_unsupported(self):
        model = make_custom_model(10, 1.0, np.sinh, np.cosh, np.sinh)
        with self.assertRaises(DomainError):
            closed_form_extremal(model, NonlinearityKind.EXP_MODEL)
        with self.assertRaises(DomainError):
            closed_form_extremal(make_space_form(ModelKind.HYPERBOLIC, 13, 1.0), NonlinearityKind.POWER_MODEL)
        with self.assertRaises(DomainError):
            closed_form_extremal(make_space_form(ModelKind.HYPERBOLIC, 13, 1.0), NonlinearityKind.CUSTOM)

@pytest.mark.parametrize("kind, n, R, nl_kind, m", [
    (ModelKind.HYPERBOLIC, 10, 1.0, NonlinearityKind.EXP_MODEL, None),
    (ModelKind.HYPERBOLIC, 12, 2.0, NonlinearityKind.EXP_MODEL, None),
    (ModelKind.ELLIPTIC, 10, 0.2, NonlinearityKind.EXP_MODEL, None),
    (ModelKind.HYPERBOLIC, 13, 1.0, NonlinearityKind.POWER_MODEL, 3),
    (ModelKind.ELLIPTIC, 13, 0.15, NonlinearityKind.POWER_MODEL, 3),
    (ModelKind.EUCLIDEAN, 11, 1.5, NonlinearityKind.GELFAND, None),
    (ModelKind.EUCLIDEAN, 13, 1.0, NonlinearityKind.POWER_CLASSIC, 3),
])
def test_strong_residual_vanishes(kind, n, R, nl_kind, m):
    """-Delta u* = lambda* f(u*) pointwise away from the pole"""
    pair = closed_form_extremal(make_space_form(kind, n, R), nl_kind, m)
    r = np.random.default_rng(0).uniform(0.05 * R, R, 100)
    scale = 1.0 + np.abs(pair.lambda_star * pair.nl.f(pair.u(r)))
    assert np.all(np.abs(pair.strong_residual(r)) <= 1e-9 * scale)

def test_hyperbolic_exp_pair_symbolically():
    r = sp.symbols("r", positive=True)
    n, R = 10, sp.Integer(1)
    u = -2 * sp.log(sp.sinh(r) / sp.sinh(R))
    laplacian = sp.diff(u, r, 2) + (n - 1) * sp.cosh(r) / sp.sinh(r) * sp.diff(u, r)
    f = sp.exp(u) / sp.sinh(R) ** 2 + sp.Rational(n - 1, n - 2)
    residual = -laplacian - 2 * (n - 2) * f
    for value in ("0.1", "0.5", "0.9"):
        assert abs(residual.subs(r, sp.Float(value, 40)).evalf(40)) < 1e-30
