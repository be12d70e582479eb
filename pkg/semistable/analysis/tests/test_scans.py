import unittest

import numpy as np

from semistable.error import DomainError
from semistable.geometry import ModelKind, make_space_form
from semistable.nonlinearity import make_gelfand
from semistable.discretization import make_mesh
from semistable.solver import Branch, BranchPoint, continue_branch
from semistable.analysis import estimate_ratios, extremal_boundedness

class TestEstimateRatios(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.model = make_space_form(ModelKind.HYPERBOLIC, 5, 1.0)
        cls.mesh = make_mesh(cls.model, 128)
        cls.branch = continue_branch(cls.model, cls.mesh, make_gelfand())

    def test_ratios_along_branch(self):
        ratios = estimate_ratios(self.model, self.mesh, self.branch, 2.0)
        self.assertEqual(len(ratios), len(self.branch))
        for ratio in ratios:
            self.assertTrue(np.isfinite([ratio.linf, ratio.lp, ratio.w1p]).all())
            self.assertGreater(ratio.w1p, ratio.lp)

    def test_points_without_solutions_are_resolved(self):
        stripped = Branch(points=[BranchPoint(p.lam, None, p.sup_u, p.l1_norm) for p in self.branch.points[:5]])
        with self.assertRaises(DomainError):
            estimate_ratios(self.model, self.mesh, stripped, 2.0)
        resolved = estimate_ratios(self.model, self.mesh, stripped, 2.0, nl=make_gelfand())
        original = estimate_ratios(self.model, self.mesh, Branch(points=self.branch.points[:5]), 2.0)
        for a, b in zip(resolved, original):
            self.assertAlmostEqual(a.lp, b.lp, places=7)

class TestExtremalBoundedness(unittest.TestCase):
    def test_bounded_in_low_dimension(self):
        """Test sup u at the fold settles under refinement for n = 3"""
        model = make_space_form(ModelKind.EUCLIDEAN, 3, 1.0)
        sups, slope = extremal_boundedness(model, make_gelfand(), [64, 128, 256])
        self.assertEqual(len(sups), 3)
        self.assertLess(abs(slope), 0.1)
