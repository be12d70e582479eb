"""Scans along computed branches standing in for the non-explicit a priori constants."""
import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from semistable.error import DomainError
from semistable.geometry import RiemannianModel
from semistable.discretization import (
    RadialMesh, make_mesh, weighted_lp_norm, weighted_w1p_norm,
)
from semistable.nonlinearity import Nonlinearity
from semistable.solver import Branch, continue_branch, newton_solve
from semistable.analysis.verify import check_ladder

logger = logging.getLogger(__name__)


class EstimateRatio(NamedTuple):
    lam: float
    linf: float
    lp: float
    w1p: float


def estimate_ratios(model: RiemannianModel, mesh: RadialMesh, branch: Branch, p: float,
                    nl: Optional[Nonlinearity] = None, tol: float = 1e-10) -> List[EstimateRatio]:
    """||u||_inf, ||u||_p and ||u||_{W^{1,p}} over ||u||_{L^1} at every branch point.

    Points read back from a CSV carry no solution; they are re-solved with ``nl``.
    """
    ratios = []
    previous = None
    for point in branch.points:
        u = point.u
        if u is None:
            if nl is None:
                raise DomainError("branch points without solutions need a nonlinearity to re-solve")
            u = newton_solve(model, mesh, nl, point.lam, previous, tol)
        previous = u
        l1 = weighted_lp_norm(model, mesh, u, 1)
        ratios.append(EstimateRatio(
            lam=point.lam,
            linf=float(np.max(np.abs(u))) / l1,
            lp=weighted_lp_norm(model, mesh, u, p) / l1,
            w1p=weighted_w1p_norm(model, mesh, u, p) / l1,
        ))
    return ratios


def extremal_boundedness(model: RiemannianModel, nl: Nonlinearity, mesh_ladder: Sequence[int],
                         lambda_step0: Optional[float] = None,
                         tol: float = 1e-10) -> Tuple[List[float], float]:
    """sup u at the fold on every mesh, and its slope against log(1/h).

    A slope near zero points to a bounded extremal solution; a log-singular one
    gives a slope near 2.
    """
    ladder = check_ladder(mesh_ladder)
    sups, h = [], []
    for N in ladder:
        mesh = make_mesh(model, N)
        branch = continue_branch(model, mesh, nl, lambda_step0=lambda_step0, tol=tol)
        sups.append(branch.last.sup_u)
        h.append(mesh.h)
        logger.info("fold sup u at N=%d: %.9g", N, sups[-1])
    slope = float(np.polyfit(np.log(1.0 / np.asarray(h)), sups, 1)[0]) if len(ladder) > 1 else 0.0
    return sups, slope
