import logging
from typing import Optional

import numpy as np

from semistable.error import DomainError
from semistable.geometry import RiemannianModel
from semistable.discretization import RadialMesh, weighted_lp_norm
from semistable.nonlinearity import Nonlinearity
from semistable.solver.branch import Branch, BranchPoint
from semistable.solver.error import NoConvergence, SolverError
from semistable.solver.newton import newton_iterate

logger = logging.getLogger(__name__)

MAX_BISECTIONS = 40
BRACKET_RTOL = 1e-8
MAX_STEPS = 100000
DECREASE_RTOL = 1e-12
MONOTONE_ATOL = 1e-10


def default_step(model: RiemannianModel) -> float:
    return 0.05 * model.n


def _rejection(u: np.ndarray, previous: np.ndarray) -> Optional[str]:
    sup = float(np.max(u))
    if not np.all(u > 0):
        return "solution is not positive"
    if np.any(np.diff(u) > DECREASE_RTOL * sup):
        return "solution is not decreasing in r"
    if np.any(u < previous - MONOTONE_ATOL):
        return "solution dropped below the previous branch point"
    return None


def continue_branch(model: RiemannianModel, mesh: RadialMesh, nl: Nonlinearity,
                    lambda_step0: Optional[float] = None, tol: float = 1e-10,
                    max_iter: int = 50) -> Branch:
    """Follow the minimal branch from (0, 0) up to its fold.

    Natural continuation with the previous solution as predictor. The lambda
    step stays at ``lambda_step0`` (0.05 n by default) until the first failure;
    the fold is then bisected between the last success and the first failure
    for at most 40 rounds, or until the bracket is narrower than 1e-8 lambda_ok.
    Candidates that are not positive, not decreasing in r, or below the previous
    point are treated as failures. The seed (0, 0) is not recorded.

    Raises:
        NoConvergence: If no point beyond lambda = 0 is accepted
    """
    step = default_step(model) if lambda_step0 is None else float(lambda_step0)
    if not step > 0:
        raise DomainError(f"Initial lambda step must be positive, got {step}")

    points = []
    lam_ok, u_ok = 0.0, np.zeros(mesh.N)

    def attempt(lam: float) -> bool:
        nonlocal lam_ok, u_ok
        try:
            result = newton_iterate(model, mesh, nl, lam, u_ok, tol, max_iter)
        except SolverError as e:
            logger.debug("continuation step to lambda=%.9g failed: %s", lam, e)
            return False
        reason = _rejection(result.u, u_ok)
        if reason is not None:
            logger.warning("rejected branch point at lambda=%.9g: %s", lam, reason)
            return False
        points.append(BranchPoint(
            lam=lam, u=result.u, sup_u=float(np.max(result.u)),
            l1_norm=weighted_lp_norm(model, mesh, result.u, 1),
            newton_iters=result.iterations,
        ))
        lam_ok, u_ok = lam, result.u
        return True

    lam_fail = None
    for _ in range(MAX_STEPS):
        if not attempt(lam_ok + step):
            lam_fail = lam_ok + step
            break
    if lam_fail is None:
        raise NoConvergence(f"no fold found below lambda={lam_ok:.9g}", lam_ok, MAX_STEPS)

    for _ in range(MAX_BISECTIONS):
        if lam_fail - lam_ok < BRACKET_RTOL * lam_ok:
            break
        middle = 0.5 * (lam_ok + lam_fail)
        if not attempt(middle):
            lam_fail = middle

    if not points:
        raise NoConvergence(f"no branch point accepted below lambda={lam_fail:.9g}", lam_fail, 0)
    estimate = 0.5 * (lam_ok + lam_fail)
    logger.info("fold bracket N=%d: (%.9g, %.9g), lambda* ~ %.9g, %d points",
                mesh.N, lam_ok, lam_fail, estimate, len(points))
    return Branch(points=points, lambda_star_estimate=estimate, fold_bracket=(lam_ok, lam_fail))
