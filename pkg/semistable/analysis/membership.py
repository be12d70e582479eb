import math
from typing import Callable, List, NamedTuple, Sequence, Tuple

import numpy as np

from semistable.geometry import RiemannianModel
from semistable.discretization import make_mesh, weighted_lp_norm, weighted_w1p_seminorm
from semistable.analysis.verify import check_ladder

SLOPE_TOLERANCE = 0.02


class MembershipRow(NamedTuple):
    kind: str
    p: float
    norms: Tuple[float, ...]
    slope: float
    member: bool


def log_slope(h: Sequence[float], values: Sequence[float]) -> float:
    """Least-squares slope of log(values) against log(h)."""
    return float(np.polyfit(np.log(h), np.log(values), 1)[0])


def geometric_p_grid(boundary: float, points: int = 9) -> np.ndarray:
    """Geometric grid from half to twice the predicted boundary exponent."""
    return np.geomspace(0.5 * boundary, 2.0 * boundary, points)


def lp_membership_scan(model: RiemannianModel, u_star_fn: Callable[[np.ndarray], np.ndarray],
                       p_grid: Sequence[float], mesh_ladder: Sequence[int],
                       slope_tolerance: float = SLOPE_TOLERANCE) -> List[MembershipRow]:
    """Classify u* as a member of L^p and W^{1,p} from norms along a mesh ladder.

    A norm that settles under refinement has a log-log slope near zero against h;
    a divergent one grows like a negative power of h. For p = inf the sup norm is
    regressed linearly against log(1/h), which catches logarithmic growth.
    """
    ladder = check_ladder(mesh_ladder)
    meshes = [make_mesh(model, N) for N in ladder]
    samples = [u_star_fn(np.asarray(mesh.nodes)) for mesh in meshes]
    h = np.array([mesh.h for mesh in meshes])

    rows = []
    for kind, norm in (("Lp", weighted_lp_norm), ("W1p", weighted_w1p_seminorm)):
        for p in p_grid:
            values = tuple(norm(model, mesh, u, p) for mesh, u in zip(meshes, samples))
            if math.isinf(p):
                slope = float(np.polyfit(np.log(1.0 / h), values, 1)[0])
            else:
                slope = log_slope(h, values)
            rows.append(MembershipRow(kind, float(p), values, slope, abs(slope) < slope_tolerance))
    return rows


def power_boundaries(n: int, m: float) -> Tuple[float, float]:
    """Integrability thresholds n(m-1)/2 (L^p) and n(m-1)/(m+1) (W^{1,p}) of psi^(-2/(m-1))."""
    return n * (m - 1) / 2.0, n * (m - 1) / (m + 1)
