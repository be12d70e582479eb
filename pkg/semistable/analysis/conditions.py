from typing import NamedTuple

from semistable.error import DomainError
from semistable.geometry import RiemannianModel, hardy_constant
from semistable.analysis.exponents import lambda_sharp

EQUALITY_TOL = 1e-9


class SemistabilityConditions(NamedTuple):
    cond1: bool
    cond2: bool
    margin1: float
    margin2: float
    lambda_sharp: float


def power_semistability_conditions(model: RiemannianModel, m: float) -> SemistabilityConditions:
    """The two scalar conditions making u* semistable for the power family.

    cond1: (n-2)^2/4 >= lambda# m, equivalent to n >= N(m).
    cond2: H >= -(2/(m-1)^2) ((m-1)n - (m+1)) K_psi.

    Raises:
        DomainError: Unless m > (n+2)/(n-2)
    """
    n = model.n
    if n < 3:
        raise DomainError(f"Power conditions need n >= 3, got n={n}")
    threshold = (n + 2) / (n - 2)
    if not m > threshold:
        raise DomainError(f"Need m > (n+2)/(n-2) = {threshold:.9g}, got m={m}")
    sharp = lambda_sharp(n, m)
    margin1 = 0.25 * (n - 2) ** 2 - sharp * m
    bound = -2.0 / (m - 1) ** 2 * ((m - 1) * n - (m + 1)) * model.curvature()
    margin2 = hardy_constant(model) - bound
    return SemistabilityConditions(
        cond1=margin1 >= -EQUALITY_TOL, cond2=margin2 >= -EQUALITY_TOL,
        margin1=margin1, margin2=margin2, lambda_sharp=sharp,
    )
