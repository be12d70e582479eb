import math

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma

from semistable.error import DomainError
from semistable.geometry import RiemannianModel
from semistable.discretization.mesh import RadialMesh
from semistable.discretization.operator import assemble_laplacian


def sphere_area(n: int) -> float:
    """Area of the unit sphere S^(n-1), 2 pi^(n/2) / Gamma(n/2)."""
    if n < 2:
        raise DomainError(f"Sphere area needs n >= 2, got n={n}")
    return 2.0 * math.pi ** (n / 2) / float(gamma(n / 2))


def ball_volume(model: RiemannianModel) -> float:
    value, _ = quad(lambda r: float(model.weight(np.array([r]))[0]), 0.0, model.R,
                    epsabs=0.0, epsrel=1e-13, limit=200)
    return sphere_area(model.n) * value


def _check_exponent(p: float) -> None:
    if not p >= 1:
        raise DomainError(f"Norm exponent must be >= 1, got p={p}")


def _integrate(model: RiemannianModel, mesh: RadialMesh, values: np.ndarray, p: float) -> float:
    if math.isinf(p):
        return float(np.max(np.abs(values))) if values.size else 0.0
    op = assemble_laplacian(model, mesh)
    total = sphere_area(model.n) * np.sum(np.abs(values) ** p * op.weight) * mesh.h
    return float(total ** (1.0 / p))


def weighted_lp_norm(model: RiemannianModel, mesh: RadialMesh, u, p: float) -> float:
    """(omega_{n-1} sum |u_i|^p w_i h)^(1/p); p = inf gives max |u_i|."""
    _check_exponent(p)
    return _integrate(model, mesh, np.asarray(u, dtype=float), p)


def weighted_w1p_seminorm(model: RiemannianModel, mesh: RadialMesh, u, p: float) -> float:
    """L^p norm of the centered-difference gradient, same volume weight."""
    _check_exponent(p)
    u = np.asarray(u, dtype=float)
    grad = np.gradient(u, mesh.h, edge_order=2)
    return _integrate(model, mesh, grad, p)


def weighted_w1p_norm(model: RiemannianModel, mesh: RadialMesh, u, p: float) -> float:
    """Full norm (||u||_p^p + |u|_{1,p}^p)^(1/p); max of both for p = inf."""
    lp = weighted_lp_norm(model, mesh, u, p)
    semi = weighted_w1p_seminorm(model, mesh, u, p)
    if math.isinf(p):
        return max(lp, semi)
    return (lp ** p + semi ** p) ** (1.0 / p)
