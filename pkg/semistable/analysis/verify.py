import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from semistable.error import DomainError
from semistable.geometry import RiemannianModel
from semistable.discretization import make_mesh, weak_residual
from semistable.nonlinearity import Nonlinearity
from semistable.solver import continue_branch
from semistable.analysis.error import ReportFailure
from semistable.analysis.exponents import regularity_exponents
from semistable.analysis.extremal import ExtremalPair, closed_form_extremal
from semistable.analysis.report import ExponentTable, ExtremalReport

logger = logging.getLogger(__name__)

RELATIVE_TOLERANCE = 0.02


class LadderLevel(NamedTuple):
    N: int
    lambda_star: float
    gap: float
    weak_residual: float


def check_ladder(ladder: Sequence[int]) -> List[int]:
    ladder = [int(N) for N in ladder]
    if not ladder:
        raise DomainError("Mesh ladder is empty")
    if any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise DomainError(f"Mesh ladder must be strictly increasing, got {ladder}")
    return ladder


def _level(model: RiemannianModel, nl: Nonlinearity, pair: ExtremalPair, N: int,
           lambda_step0: Optional[float], tol: float) -> LadderLevel:
    mesh = make_mesh(model, N)
    branch = continue_branch(model, mesh, nl, lambda_step0=lambda_step0, tol=tol)
    r = np.asarray(mesh.nodes)
    away = r >= model.R / 4.0
    u_star = pair.u(r)
    gap = float(np.max(np.abs(branch.last.u[away] - u_star[away])))
    residual = weak_residual(model, mesh, u_star, pair.lambda_star, pair.nl)
    logger.info("ladder N=%d: lambda*=%.9g gap=%.3e weak residual=%.3e",
                N, branch.lambda_star_estimate, gap, residual)
    return LadderLevel(N, branch.lambda_star_estimate, gap, residual)


def extremal_ladder(model: RiemannianModel, nl: Nonlinearity, mesh_ladder: Sequence[int],
                    lambda_step0: Optional[float] = None, tol: float = 1e-10,
                    jobs: int = 1) -> List[LadderLevel]:
    """Continuation on every mesh of the ladder compared against the closed form."""
    ladder = check_ladder(mesh_ladder)
    pair = closed_form_extremal(model, nl.kind, getattr(nl, "m", None))
    if jobs > 1 and len(ladder) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda N: _level(model, nl, pair, N, lambda_step0, tol), ladder))
    return [_level(model, nl, pair, N, lambda_step0, tol) for N in ladder]


def verify_extremal(model: RiemannianModel, nl: Nonlinearity, mesh_ladder: Sequence[int],
                    lambda_step0: Optional[float] = None, tol: float = 1e-10,
                    jobs: int = 1) -> ExtremalReport:
    """Compare the numerical fold with the closed-form extremal pair.

    The report carries lambda* on the finest mesh, the pointwise gap on [R/4, R]
    between the last accepted branch point and u*, and the weak residual of u*
    sampled on the finest mesh.

    Raises:
        HypothesisError: If no closed form covers (model, nl)
        ReportFailure: If lambda* misses the closed form by more than 2% on the
            finest mesh or the weak residual of u* does not decrease along the ladder;
            the report is attached
    """
    pair = closed_form_extremal(model, nl.kind, getattr(nl, "m", None))
    levels = extremal_ladder(model, nl, mesh_ladder, lambda_step0, tol, jobs)
    finest = levels[-1]
    exponents = regularity_exponents(model.n, getattr(nl, "m", None))
    report = ExtremalReport(
        lambda_star_numeric=finest.lambda_star,
        lambda_star_closed=pair.lambda_star,
        max_pointwise_gap=finest.gap,
        weak_residual_of_closed_form=finest.weak_residual,
        exponents=ExponentTable(p0=exponents.p0, p1=exponents.p1, N_m=exponents.N_m),
    )
    if report.relative_error > RELATIVE_TOLERANCE:
        raise ReportFailure(
            f"lambda* = {finest.lambda_star:.9g} misses {pair.lambda_star:.9g} by "
            f"{100 * report.relative_error:.3g}%", report)
    residuals = [level.weak_residual for level in levels]
    if any(b >= a for a, b in zip(residuals, residuals[1:])):
        raise ReportFailure(f"weak residual of u* does not decrease under refinement: {residuals}", report)
    return report
