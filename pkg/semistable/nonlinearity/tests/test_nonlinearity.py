import math
import unittest

import numpy as np
import pytest

from semistable.error import DomainError
from semistable.geometry import ModelKind, make_space_form
from semistable.nonlinearity import (
    ExpModel, NonlinearityKind, PowerModel, ValidityError, make_custom, make_exp_model,
    make_gelfand, make_power_classic, make_power_model,
)
from semistable.nonlinearity.factory import (
    InvalidNonlinearityKindError, MissingExponentError, NonlinearityFactory,
)

class TestClassicFamilies(unittest.TestCase):
    def test_gelfand(self):
        """Test e^u and its overflow guard"""
        nl = make_gelfand()
        self.assertEqual(float(nl.f(0.0)), 1.0)
        self.assertAlmostEqual(float(nl.f_prime(1.0)), math.e)
        self.assertEqual(nl.overflow_guard, 500.0)
        with self.assertRaises(OverflowError):
            nl.f(np.array([1.0, 800.0]))

    def test_power_classic(self):
        """Test (1+u)^m"""
        nl = make_power_classic(3)
        np.testing.assert_allclose(nl.f(np.array([0.0, 1.0])), [1.0, 8.0])
        np.testing.assert_allclose(nl.f_prime(np.array([0.0, 1.0])), [3.0, 12.0])
        with self.assertRaises(DomainError):
            make_power_classic(1.0)

    def test_custom_validation(self):
        """Test f(0) > 0, f' >= 0 and superlinear growth"""
        nl = make_custom(lambda u: 1 + u ** 2, lambda u: 2 * u)
        self.assertEqual(float(nl.f(0.0)), 1.0)
        with self.assertRaises(ValidityError):
            make_custom(lambda u: u ** 2, lambda u: 2 * u)
        with self.assertRaises(ValidityError):
            make_custom(lambda u: 2 + np.cos(u), lambda u: -np.sin(u))
        with self.assertRaises(ValidityError):
            make_custom(lambda u: 1 + u, lambda u: np.ones_like(u))
        with self.assertRaises(DomainError):
            make_custom(1.0, lambda u: u)

class TestExpModel(unittest.TestCase):
    def test_hyperbolic_constants(self):
        """Test f_e(0) = 1/sinh(R)^2 + (n-1)/(n-2) on the hyperbolic ball"""
        nl = make_exp_model(make_space_form(ModelKind.HYPERBOLIC, 10, 1.0))
        self.assertAlmostEqual(float(nl.f(0.0)), 1 / math.sinh(1) ** 2 + 9 / 8, places=13)
        self.assertAlmostEqual(float(nl.f_prime(0.0)), 1 / math.sinh(1) ** 2, places=13)

    def test_euclidean_is_scaled_gelfand(self):
        """Test f_e = e^u / R^2 with zero curvature"""
        nl = make_exp_model(make_space_form(ModelKind.EUCLIDEAN, 10, 2.0))
        self.assertAlmostEqual(float(nl.f(1.0)), math.e / 4, places=14)

    def test_elliptic_radius(self):
        """Test positivity of f_e(0) requires R < Re"""
        model = make_space_form(ModelKind.ELLIPTIC, 10, 1.3)
        with self.assertRaises(ValidityError):
            make_exp_model(model)
        nl = make_exp_model(make_space_form(ModelKind.ELLIPTIC, 10, 0.2))
        self.assertGreater(float(nl.f(0.0)), 0)

    def test_dimension(self):
        """Test n >= 3"""
        with self.assertRaises(DomainError):
            ExpModel(make_space_form(ModelKind.HYPERBOLIC, 2, 1.0))

class TestPowerModel(unittest.TestCase):
    def setUp(self):
        self.model = make_space_form(ModelKind.HYPERBOLIC, 13, 1.0)

    def test_constants(self):
        """Test c, kappa and f_p(0) for n=13, m=3"""
        nl = make_power_model(self.model, 3)
        c = 1 / math.sinh(1.0)
        self.assertAlmostEqual(nl.c, c, places=14)
        self.assertAlmostEqual(nl.kappa, 1.1, places=14)
        self.assertAlmostEqual(float(nl.f(0.0)), c ** 3 + 1.1 * c, places=13)
        self.assertAlmostEqual(float(nl.f(0.0)), 1.55213, places=4)

    def test_exponent_threshold(self):
        """Test m > (n+2)/(n-2) unless permissive"""
        with self.assertRaises(ValidityError):
            make_power_model(self.model, 1.2)
        nl = make_power_model(self.model, 1.2, permissive=True)
        self.assertIsInstance(nl, PowerModel)
        with self.assertRaises(DomainError):
            make_power_model(self.model, 1.0, permissive=True)

    def test_elliptic_radius(self):
        """Test R < Rp on the sphere"""
        with self.assertRaises(ValidityError):
            make_power_model(make_space_form(ModelKind.ELLIPTIC, 13, 1.3), 3)

@pytest.mark.parametrize("kind,m,expected", [
    (NonlinearityKind.EXP_MODEL, None, ExpModel),
    (NonlinearityKind.POWER_MODEL, 3.0, PowerModel),
    (NonlinearityKind.GELFAND, None, type(make_gelfand())),
    (NonlinearityKind.POWER_CLASSIC, 2.0, type(make_power_classic(2.0))),
])
def test_factory_dispatch(kind, m, expected):
    """The factory builds the family named by its kind"""
    factory = NonlinearityFactory()
    nl = factory.create_instance(kind, make_space_form(ModelKind.HYPERBOLIC, 13, 1.0), m)
    assert isinstance(nl, expected)
    assert factory.get_instance() is nl

def test_factory_errors():
    model = make_space_form(ModelKind.HYPERBOLIC, 13, 1.0)
    factory = NonlinearityFactory()
    with pytest.raises(MissingExponentError):
        factory.create_instance(NonlinearityKind.POWER_MODEL, model)
    with pytest.raises(InvalidNonlinearityKindError):
        factory.create_instance(NonlinearityKind.CUSTOM, model)
    assert not factory.instance_exists()
