import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, cho_solve_banded, cholesky_banded

from semistable.geometry import RiemannianModel
from semistable.discretization import RadialMesh, assemble_laplacian
from semistable.nonlinearity import Nonlinearity
from semistable.solver.error import NoConvergence

logger = logging.getLogger(__name__)

SIGN_TOL = 1e-8


@dataclass
class EigenPair:
    lambda1: float
    phi1: np.ndarray
    iterations: int = 0


def _tridiag_matvec(d: np.ndarray, e: np.ndarray, y: np.ndarray) -> np.ndarray:
    out = d * y
    out[:-1] += e * y[1:]
    out[1:] += e * y[:-1]
    return out


def _factor(d: np.ndarray, e: np.ndarray, shift: float):
    """Banded Cholesky of S - shift I; LinAlgError if the shift is not below lambda_1."""
    ab = np.empty((2, d.size))
    ab[0, 0] = 0.0
    ab[0, 1:] = e
    ab[1] = d - shift
    return cholesky_banded(ab, lower=False, check_finite=False)


def _tighten(d, e, rho, shift, factor):
    """Move the shift up to rho - delta, keeping it certified below lambda_1."""
    delta = 1e-8 * (1.0 + abs(rho))
    while rho - delta > shift:
        try:
            return rho - delta, _factor(d, e, rho - delta)
        except LinAlgError:
            delta *= 10.0
    return shift, factor


def principal_eigenvalue(model: RiemannianModel, mesh: RadialMesh, nl: Nonlinearity,
                         lam: float, u, tol: float = 1e-10, max_iter: int = 10000) -> EigenPair:
    """Smallest eigenvalue of A - lam diag(f'(u)) in the w-weighted inner product.

    Works on the symmetrized tridiagonal S = D^(1/2) A D^(-1/2) - lam diag(f'(u)).
    Inverse iteration starts from a shift below the Gershgorin bound; each later
    shift is pulled up towards the Rayleigh quotient as long as a banded Cholesky
    factorization of S - shift succeeds, which certifies shift < lambda_1.
    Iteration stops when successive Rayleigh quotients differ by less than
    tol (1 + |lambda_1|). The eigenfunction is normalized to sum w phi^2 h = 1
    and made positive.

    Raises:
        NoConvergence: After ``max_iter`` iterations, or if the eigenfunction changes sign
    """
    op = assemble_laplacian(model, mesh)
    u = np.asarray(u, dtype=float)
    d = op.diag - lam * nl.f_prime(u)
    e = op.symmetric_offdiag()

    radius = np.abs(np.concatenate(([0.0], e))) + np.abs(np.concatenate((e, [0.0])))
    shift = float(np.min(d - radius)) - 1.0
    factor = _factor(d, e, shift)

    y = np.ones(mesh.N) / np.sqrt(mesh.N)
    rho_prev = np.inf
    for iteration in range(1, max_iter + 1):
        y = cho_solve_banded((factor, False), y, check_finite=False)
        y /= np.linalg.norm(y)
        rho = float(y @ _tridiag_matvec(d, e, y))
        if abs(rho - rho_prev) < tol * (1.0 + abs(rho)):
            break
        rho_prev = rho
        shift, factor = _tighten(d, e, rho, shift, factor)
    else:
        raise NoConvergence(f"inverse iteration did not converge in {max_iter} iterations",
                            lam, max_iter)

    phi = y / np.sqrt(op.weight)
    phi /= np.sqrt(op.inner(phi, phi))
    if phi.sum() < 0:
        phi = -phi
    if np.min(phi) < -SIGN_TOL * np.max(phi):
        raise NoConvergence(f"principal eigenfunction changes sign at lambda={lam:.9g}", lam, iteration)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug("lambda_1=%.9g at lambda=%.9g after %d iterations (shift %.6g)",
                     rho, lam, iteration, shift)
    return EigenPair(lambda1=rho, phi1=phi, iterations=iteration)
