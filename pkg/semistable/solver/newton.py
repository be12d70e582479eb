import logging
from typing import NamedTuple, Optional

import numpy as np
from scipy.linalg.lapack import dgttrf, dgttrs

from semistable.error import DomainError
from semistable.geometry import RiemannianModel
from semistable.discretization import RadialMesh, assemble_laplacian
from semistable.nonlinearity import Nonlinearity
from semistable.solver.error import NoConvergence, SingularJacobian

logger = logging.getLogger(__name__)

MAX_HALVINGS = 30
# a damped step must shrink the simplified Newton correction by at least t / 4
MONOTONICITY = 0.25
PIVOT_TOL = 1e-14
# residual rows within ROUNDOFF_FACTOR * eps * (|A||u| + lam |f(u)|) are roundoff
ROUNDOFF_FACTOR = 64.0


class NewtonResult(NamedTuple):
    u: np.ndarray
    iterations: int
    residual: float


def _roundoff(op, lam: float, u: np.ndarray, fu: np.ndarray) -> np.ndarray:
    """Per-row size of the rounding error in evaluating A u - lam f(u)."""
    size = np.abs(op.diag * u) + lam * np.abs(fu)
    size[1:] += np.abs(op.sub[1:] * u[:-1])
    size[:-1] += np.abs(op.sup[:-1] * u[1:])
    return ROUNDOFF_FACTOR * np.finfo(float).eps * size


def _residual(op, nl: Nonlinearity, lam: float, u: np.ndarray):
    """Return (F, ||F||_inf, ||f(u)||_inf, excess) where excess is the largest |F_i|
    beyond its roundoff allowance; overflow shows up as infinite norms."""
    try:
        fu = nl.f(u)
    except OverflowError:
        return None, np.inf, np.inf, np.inf
    F = op.apply(u) - lam * fu
    norm = float(np.max(np.abs(F)))
    if not np.isfinite(norm):
        return F, np.inf, np.inf, np.inf
    excess = float(np.max(np.abs(F) - _roundoff(op, lam, u, fu)))
    return F, norm, float(np.max(np.abs(fu))), excess


def newton_iterate(model: RiemannianModel, mesh: RadialMesh, nl: Nonlinearity, lam: float,
                   u0: Optional[np.ndarray] = None, tol: float = 1e-10,
                   max_iter: int = 50) -> NewtonResult:
    """Damped Newton on A u - lam f(u) = 0 returning the iteration count as well.

    The Jacobian A - lam diag(f'(u)) is factored with LAPACK's tridiagonal LU
    (partial pivoting). A step u + t delta is accepted once the simplified
    correction J(u)^-1 F(u + t delta), computed with the same factors, is at most
    (1 - t/4) ||delta||_inf; t is halved up to 30 times. The test does not see the
    row scaling of the operator. A full step whose simplified correction is
    already below tolerance counts as converged. Iteration stops when every |F_i| <= tol (1 + lam ||f(u)||_inf) up to the
    rounding error of row i, or when the Newton correction drops below
    tol (1 + ||u||_inf).

    Raises:
        NoConvergence: After ``max_iter`` iterations, on failed damping, or when
            sup u passes the overflow guard of ``nl``
        SingularJacobian: If a pivot of the LU factorization vanishes
    """
    if not tol > 0:
        raise DomainError(f"Newton tolerance must be positive, got {tol}")
    op = assemble_laplacian(model, mesh)
    u = np.zeros(mesh.N) if u0 is None else np.array(u0, dtype=float)
    if u.shape != (mesh.N,) or not np.all(np.isfinite(u)):
        raise DomainError("Initial guess must be a finite vector on the mesh")

    def target(fmax: float) -> float:
        return tol * (1.0 + lam * fmax)

    F, norm, fmax, excess = _residual(op, nl, lam, u)
    if F is None:
        raise NoConvergence(f"f overflows at the initial guess (lambda={lam:.9g})", lam, 0)
    for iteration in range(max_iter):
        if excess <= target(fmax):
            return NewtonResult(u, iteration, norm)

        dl, d, du = op.bands(lam * nl.f_prime(u))
        scale = float(np.max(np.abs(d)))
        dl, d, du, du2, ipiv, info = dgttrf(dl, d, du)
        if info > 0:
            raise SingularJacobian(lam, 0.0, scale)
        pivot = float(np.min(np.abs(d)))
        if pivot < PIVOT_TOL * scale:
            raise SingularJacobian(lam, pivot, scale)
        delta, info = dgttrs(dl, d, du, du2, ipiv, -F)
        if info != 0:
            raise NoConvergence(f"tridiagonal solve failed with info={info}", lam, iteration)

        step_norm = float(np.max(np.abs(delta)))
        if step_norm <= tol * (1.0 + float(np.max(np.abs(u)))):
            u = u + delta
            F, norm, fmax, excess = _residual(op, nl, lam, u)
            if F is not None:
                return NewtonResult(u, iteration + 1, norm)

        t = 1.0
        stalled = False
        for _ in range(MAX_HALVINGS + 1):
            candidate = u + t * delta
            cF, cnorm, cfmax, cexcess = _residual(op, nl, lam, candidate)
            if cF is not None:
                if cexcess <= target(cfmax):
                    break
                simplified, info = dgttrs(dl, d, du, du2, ipiv, -cF)
                if info != 0:
                    raise NoConvergence(
                        f"tridiagonal solve failed with info={info}", lam, iteration)
                simplified_norm = float(np.max(np.abs(simplified)))
                if simplified_norm <= (1.0 - MONOTONICITY * t) * step_norm:
                    break
                if t == 1.0 and simplified_norm <= tol * (1.0 + float(np.max(np.abs(candidate)))):
                    stalled = True
                    break
            t *= 0.5
        else:
            raise NoConvergence(
                f"damping failed at lambda={lam:.9g} after {MAX_HALVINGS} halvings", lam, iteration)

        u, F, norm, fmax, excess = candidate, cF, cnorm, cfmax, cexcess
        if stalled:
            logger.debug("newton lambda=%.9g stalled at roundoff after %d iterations",
                         lam, iteration + 1)
            return NewtonResult(u, iteration + 1, norm)
        sup = float(np.max(u))
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug("newton lambda=%.9g iter=%d residual=%.3e damping=%g sup=%.6g",
                         lam, iteration, norm, t, sup)
        if sup > nl.overflow_guard:
            raise NoConvergence(
                f"sup u = {sup:.6g} passed the overflow guard {nl.overflow_guard:g}", lam, iteration)

    if excess <= target(fmax):
        return NewtonResult(u, max_iter, norm)
    raise NoConvergence(f"Newton did not converge at lambda={lam:.9g} in {max_iter} iterations",
                        lam, max_iter)


def newton_solve(model: RiemannianModel, mesh: RadialMesh, nl: Nonlinearity, lam: float,
                 u0: Optional[np.ndarray] = None, tol: float = 1e-10,
                 max_iter: int = 50) -> np.ndarray:
    """Solve the discrete problem -Delta_g u = lam f(u), u(R) = 0."""
    return newton_iterate(model, mesh, nl, lam, u0, tol, max_iter).u
