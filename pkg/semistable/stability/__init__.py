"""Principal eigenvalue, second variation and the stability inequalities."""
from .eigen import EigenPair, principal_eigenvalue
from .eta import Eta, polynomial_eta, truncated_psi_eta, zero_eta, default_eta_family
from .forms import quadratic_form, radial_derivative, etapsi_check, key_estimate_ratio, alpha_range

__all__ = [
    'EigenPair',
    'principal_eigenvalue',
    'Eta',
    'polynomial_eta',
    'truncated_psi_eta',
    'zero_eta',
    'default_eta_family',
    'quadratic_form',
    'radial_derivative',
    'etapsi_check',
    'key_estimate_ratio',
    'alpha_range',
]
