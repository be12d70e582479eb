import math
import unittest

import numpy as np

from semistable.geometry import ModelKind, make_space_form
from semistable.nonlinearity import make_gelfand
from semistable.discretization import assemble_laplacian, make_mesh
from semistable.solver import continue_branch
from semistable.stability import principal_eigenvalue, quadratic_form

class TestLaplacianEigenvalue(unittest.TestCase):
    def test_unit_ball_dimension_three(self):
        """Test lambda_1 of the unit ball in R^3 is pi^2"""
        model = make_space_form(ModelKind.EUCLIDEAN, 3, 1.0)
        mesh = make_mesh(model, 256)
        pair = principal_eigenvalue(model, mesh, make_gelfand(), 0.0, np.zeros(256))
        self.assertAlmostEqual(pair.lambda1, math.pi ** 2, delta=1e-2)
        self.assertTrue(np.all(pair.phi1 > 0))

    def test_normalization(self):
        model = make_space_form(ModelKind.HYPERBOLIC, 4, 1.0)
        mesh = make_mesh(model, 128)
        pair = principal_eigenvalue(model, mesh, make_gelfand(), 0.0, np.zeros(128))
        op = assemble_laplacian(model, mesh)
        self.assertAlmostEqual(op.inner(pair.phi1, pair.phi1), 1.0, places=10)

class TestBranchStability(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.model = make_space_form(ModelKind.EUCLIDEAN, 3, 1.0)
        cls.mesh = make_mesh(cls.model, 256)
        cls.nl = make_gelfand()
        cls.branch = continue_branch(cls.model, cls.mesh, cls.nl)
        cls.pairs = [principal_eigenvalue(cls.model, cls.mesh, cls.nl, p.lam, p.u)
                     for p in cls.branch.points]

    def test_positive_and_nonincreasing(self):
        """Test lambda_1 stays positive and decreases along the minimal branch"""
        values = np.array([pair.lambda1 for pair in self.pairs])
        self.assertTrue(np.all(values > 0))
        self.assertTrue(np.all(np.diff(values) <= 1e-8 * (1 + values[:-1])))

    def test_vanishes_at_the_fold(self):
        values = np.array([pair.lambda1 for pair in self.pairs])
        lambdas = self.branch.lambdas
        reference = values[np.argmin(np.abs(lambdas - 0.1 * self.branch.lambda_star_estimate))]
        self.assertLess(values[-1], 0.05 * reference)

    def test_quadratic_form_at_eigenfunction(self):
        """Test Q(phi_1) = lambda_1 for the normalized eigenfunction"""
        for point, pair in zip(self.branch.points[::5], self.pairs[::5]):
            q = quadratic_form(self.model, self.mesh, self.nl, point.lam, point.u, pair.phi1)
            self.assertAlmostEqual(q, pair.lambda1, delta=1e-8 * (1 + pair.lambda1))

    def test_rayleigh_minimum(self):
        """Test Q(xi) >= lambda_1 ||xi||^2 for random xi"""
        rng = np.random.default_rng(7)
        op = assemble_laplacian(self.model, self.mesh)
        for point, pair in ((self.branch.points[0], self.pairs[0]), (self.branch.last, self.pairs[-1])):
            for _ in range(20):
                xi = rng.standard_normal(self.mesh.N)
                q = quadratic_form(self.model, self.mesh, self.nl, point.lam, point.u, xi)
                norm = op.inner(xi, xi)
                self.assertGreaterEqual(q, pair.lambda1 * norm - 1e-8 * (1 + abs(pair.lambda1)) * norm)
                self.assertGreaterEqual(q, -1e-8 * norm)
