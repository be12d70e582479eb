import logging

import numpy as np
from scipy.linalg.lapack import dgttrf, dgttrs

from semistable.error import DomainError
from semistable.geometry import RiemannianModel
from semistable.discretization import RadialMesh, assemble_laplacian
from semistable.nonlinearity import Nonlinearity
from semistable.solver.error import NoConvergence, SolverError

logger = logging.getLogger(__name__)


def monotone_iteration(model: RiemannianModel, mesh: RadialMesh, nl: Nonlinearity, lam: float,
                       tol: float = 1e-10, max_iter: int = 100000) -> np.ndarray:
    """Picard iteration u <- A^-1 (lam f(u)) started from 0.

    The iterates increase monotonically to the minimal solution when one exists.

    Raises:
        NoConvergence: If sup u passes the overflow guard or ``max_iter`` is reached
    """
    if not tol > 0:
        raise DomainError(f"Picard tolerance must be positive, got {tol}")
    op = assemble_laplacian(model, mesh)
    dl, d, du, du2, ipiv, info = dgttrf(*op.bands())
    if info != 0:
        raise SolverError(f"Laplacian factorization failed with info={info}")

    u = np.zeros(mesh.N)
    for iteration in range(max_iter):
        try:
            rhs = lam * nl.f(u)
        except OverflowError:
            raise NoConvergence(f"f overflows during Picard iteration at lambda={lam:.9g}",
                                lam, iteration)
        new, info = dgttrs(dl, d, du, du2, ipiv, rhs)
        if info != 0:
            raise SolverError(f"tridiagonal solve failed with info={info}")
        change = float(np.max(np.abs(new - u)))
        u = new
        sup = float(np.max(u))
        if not np.isfinite(sup) or sup > nl.overflow_guard:
            raise NoConvergence(
                f"Picard iterate passed the overflow guard at lambda={lam:.9g}", lam, iteration)
        if change <= tol * (1.0 + sup):
            logger.debug("picard lambda=%.9g converged in %d iterations", lam, iteration + 1)
            return u
    raise NoConvergence(f"Picard iteration did not converge at lambda={lam:.9g}", lam, max_iter)
