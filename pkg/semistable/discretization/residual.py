import numpy as np

from semistable.error import DomainError
from semistable.geometry import RiemannianModel
from semistable.discretization.mesh import RadialMesh
from semistable.discretization.operator import assemble_laplacian
from semistable.nonlinearity import Nonlinearity


def bump(mesh: RadialMesh, k: int):
    """xi_k = (1 - (r/R)^2)^k and its first two derivatives at the nodes."""
    r, R = np.asarray(mesh.nodes), mesh.R
    one_minus = 1.0 - (r / R) ** 2
    ds = 2.0 * r / R ** 2
    xi = one_minus ** k
    xi_r = -k * one_minus ** (k - 1) * ds
    xi_rr = k * (k - 1) * one_minus ** (k - 2) * ds ** 2 - 2.0 * k * one_minus ** (k - 1) / R ** 2
    return xi, xi_r, xi_rr


def weak_residual(model: RiemannianModel, mesh: RadialMesh, u, lam: float,
                  nl: Nonlinearity, test_family_size: int = 4) -> float:
    """Very weak residual of -Delta_g u = lam f(u) against polynomial bumps.

    For k = 2..test_family_size+1 computes |-int u Delta_g xi_k - lam int f(u) xi_k| / int xi_k
    with volume weight psi^(n-1) and midpoint quadrature, and returns the largest value.
    Delta_g xi_k is evaluated analytically from psi and psi'.
    """
    if test_family_size < 1:
        raise DomainError(f"Test family needs at least one member, got {test_family_size}")
    u = np.asarray(u, dtype=float)
    op = assemble_laplacian(model, mesh)
    r = np.asarray(mesh.nodes)
    log_derivative = model.psi_prime(r) / model.psi(r)
    fu = nl.f(u)

    worst = 0.0
    for k in range(2, test_family_size + 2):
        xi, xi_r, xi_rr = bump(mesh, k)
        laplacian = xi_rr + (model.n - 1) * log_derivative * xi_r
        lhs = -op.inner(u, laplacian)
        rhs = lam * op.inner(fu, xi)
        worst = max(worst, abs(lhs - rhs) / op.inner(np.ones_like(xi), xi))
    return worst
