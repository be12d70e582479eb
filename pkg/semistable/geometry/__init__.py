"""Riemannian models and the geometric scalars derived from their warping function."""
from .kinds import ModelKind
from .model import RiemannianModel, make_space_form, make_custom_model
from .quantities import (
    CriticalRadii, phi, sup_phi_over_psi, hardy_constant, hardy_constant_closed_form,
    critical_radii, delta_psi,
)
from .error import GeometryError

__all__ = [
    'ModelKind',
    'RiemannianModel',
    'make_space_form',
    'make_custom_model',
    'CriticalRadii',
    'phi',
    'sup_phi_over_psi',
    'hardy_constant',
    'hardy_constant_closed_form',
    'critical_radii',
    'delta_psi',
    'GeometryError',
]
