from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from semistable.error import DomainError
from semistable.geometry import GeometryError, RiemannianModel
from semistable.discretization.mesh import RadialMesh


@dataclass(frozen=True, eq=False)
class DiscreteOperator:
    """Flux-form tridiagonal discretization of -Delta_g on radial functions.

    Row i reads (A u)_i = sub[i] u[i-1] + diag[i] u[i] + sup[i] u[i+1]; ``sub[0]``
    and ``sup[N-1]`` are zero. ``flux`` holds psi^(n-1) at the half nodes
    r_{i+1/2} and ``weight`` holds w_i = psi(r_i)^(n-1).
    """

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    weight: np.ndarray
    flux: np.ndarray
    h: float

    @property
    def size(self) -> int:
        return self.diag.size

    def apply(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        out = self.diag * u
        out[1:] += self.sub[1:] * u[:-1]
        out[:-1] += self.sup[:-1] * u[1:]
        return out

    def bands(self, potential=None):
        """(dl, d, du) of A - diag(potential) in LAPACK gtsv layout."""
        d = self.diag.copy() if potential is None else self.diag - potential
        return self.sub[1:].copy(), d, self.sup[:-1].copy()

    def symmetric_offdiag(self) -> np.ndarray:
        """Off-diagonal of D^(1/2) A D^(-1/2) with D = diag(weight)."""
        return -self.flux[:-1] / (self.h ** 2 * np.sqrt(self.weight[:-1] * self.weight[1:]))

    def inner(self, u: np.ndarray, v: np.ndarray) -> float:
        """Midpoint weighted inner product sum w u v h (without the sphere area)."""
        return float(np.sum(self.weight * u * v) * self.h)

    def energy(self, xi: np.ndarray) -> float:
        """h xi^T W A xi = sum a (xi_{i+1} - xi_i)^2 / h + 2 a_R xi_{N-1}^2 / h."""
        xi = np.asarray(xi, dtype=float)
        jumps = np.diff(xi)
        interior = np.sum(self.flux[:-1] * jumps ** 2)
        return float((interior + 2.0 * self.flux[-1] * xi[-1] ** 2) / self.h)


@lru_cache(maxsize=32)
def _assemble(model: RiemannianModel, mesh: RadialMesh) -> DiscreteOperator:
    n, h = model.n, mesh.h
    psi_half = model.psi(np.asarray(mesh.half_nodes))
    if np.any(psi_half <= 0):
        bad = int(np.argmin(psi_half))
        raise GeometryError(f"psi({mesh.half_nodes[bad]:.6g}) = {psi_half[bad]!r} must be positive")
    flux = psi_half ** (n - 1)
    weight = model.weight(np.asarray(mesh.nodes))

    left = np.concatenate(([0.0], flux[:-1]))
    scale = weight * h * h
    diag = (flux + left) / scale
    # reflected ghost u_N = -u_{N-1} puts u = 0 on r = R
    diag[-1] = (2.0 * flux[-1] + left[-1]) / scale[-1]
    sub = -left / scale
    sup = np.zeros_like(diag)
    sup[:-1] = -flux[:-1] / scale[:-1]

    for arr in (sub, diag, sup, weight, flux):
        arr.flags.writeable = False
    return DiscreteOperator(sub=sub, diag=diag, sup=sup, weight=weight, flux=flux, h=h)


def assemble_laplacian(model: RiemannianModel, mesh: RadialMesh) -> DiscreteOperator:
    """Assemble the weighted radial Laplacian on ``mesh``.

    Operators are cached per (model, mesh) pair; the returned arrays are read-only.

    Raises:
        DomainError: If the mesh does not cover the ball of ``model``
        GeometryError: If psi vanishes at a half node
    """
    if abs(mesh.R - model.R) > 1e-14 * model.R:
        raise DomainError(f"Mesh radius {mesh.R} does not match ball radius {model.R}")
    return _assemble(model, mesh)
