import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import trapezoid

from semistable.error import DomainError
from semistable.geometry import RiemannianModel, delta_psi
from semistable.discretization import RadialMesh, assemble_laplacian, weighted_lp_norm
from semistable.nonlinearity import Nonlinearity
from semistable.stability.eta import Eta, default_eta_family


def quadratic_form(model: RiemannianModel, mesh: RadialMesh, nl: Nonlinearity, lam: float,
                   u, xi) -> float:
    """Q_u(xi) = int psi^(n-1) (xi_r^2 - lam f'(u) xi^2) dr.

    The gradient term uses the flux stencil of the discrete Laplacian, so that
    Q_u(xi) = h xi^T W (A - lam f'(u)) xi and xi vanishes through the Dirichlet ghost.
    """
    op = assemble_laplacian(model, mesh)
    xi = np.asarray(xi, dtype=float)
    potential = lam * nl.f_prime(np.asarray(u, dtype=float))
    return op.energy(xi) - op.inner(potential * xi, xi)


def radial_derivative(mesh: RadialMesh, u) -> np.ndarray:
    """u_r at 0, h, ..., R from differences across half nodes (u_r(0) = 0, ghost at R)."""
    u = np.asarray(u, dtype=float)
    du = np.empty(mesh.N + 1)
    du[0] = 0.0
    du[1:-1] = np.diff(u) / mesh.h
    du[-1] = -2.0 * u[-1] / mesh.h
    return du


def etapsi_check(model: RiemannianModel, mesh: RadialMesh, u,
                 eta_family: Optional[Sequence[Eta]] = None) -> List[Tuple[float, float]]:
    """Both sides of the stability inequality for u_r against each cut-off eta.

    lhs = (n-1) int psi^(n-1) u_r^2 psi'^2 eta^2,
    rhs = int psi^(n-1) u_r^2 ((psi eta)_r^2 + (n-1) psi psi'' eta^2),
    by the trapezoid rule on the half nodes 0, h, ..., R.
    """
    family = default_eta_family(model) if eta_family is None else eta_family
    r = np.asarray(mesh.interfaces)
    psi, dpsi, ddpsi = model.psi(r), model.psi_prime(r), model.psi_second(r)
    base = model.weight(r) * radial_derivative(mesh, u) ** 2
    n = model.n

    pairs = []
    for eta in family:
        value, slope = eta.value(r), eta.derivative(r)
        lhs = (n - 1) * trapezoid(base * dpsi ** 2 * value ** 2, r)
        product = dpsi * value + psi * slope
        rhs = trapezoid(base * (product ** 2 + (n - 1) * psi * ddpsi * value ** 2), r)
        pairs.append((float(lhs), float(rhs)))
    return pairs


def alpha_range(n: int) -> Tuple[float, float]:
    return 1.0, 1.0 + math.sqrt(n - 1)


def key_estimate_ratio(model: RiemannianModel, mesh: RadialMesh, u, alpha: float,
                       delta: Optional[float] = None) -> float:
    """int_0^delta u_r^2 psi^(n-1-2 alpha) dr / ||u||_{L^1}^2.

    The integral is a midpoint sum over the interior half nodes in (0, delta].

    Raises:
        DomainError: Unless 1 <= alpha < 1 + sqrt(n-1)
    """
    low, high = alpha_range(model.n)
    if not low <= alpha < high:
        raise DomainError(f"alpha must lie in [1, {high:.9g}), got alpha={alpha}")
    delta = delta_psi(model) if delta is None else delta
    u = np.asarray(u, dtype=float)
    l1 = weighted_lp_norm(model, mesh, u, 1)
    if l1 == 0:
        raise DomainError("Key estimate ratio is undefined for u = 0")

    r = np.asarray(mesh.interfaces)[1:]
    du = radial_derivative(mesh, u)[1:]
    inside = r <= delta
    integral = np.sum(du[inside] ** 2 * model.psi(r[inside]) ** (model.n - 1 - 2 * alpha)) * mesh.h
    return float(integral / l1 ** 2)
