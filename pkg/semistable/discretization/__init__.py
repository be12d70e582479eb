"""Staggered radial mesh, flux-form Laplacian, weighted norms and residuals."""
from .mesh import RadialMesh, make_mesh
from .operator import DiscreteOperator, assemble_laplacian
from .norms import (
    sphere_area, ball_volume, weighted_lp_norm, weighted_w1p_seminorm, weighted_w1p_norm,
)
from .residual import weak_residual

__all__ = [
    'RadialMesh',
    'make_mesh',
    'DiscreteOperator',
    'assemble_laplacian',
    'sphere_area',
    'ball_volume',
    'weighted_lp_norm',
    'weighted_w1p_seminorm',
    'weighted_w1p_norm',
    'weak_residual',
]
