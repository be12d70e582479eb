import logging
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from semistable.error import DomainError
from semistable.geometry import (
    ModelKind, RiemannianModel, critical_radii, hardy_constant, sup_phi_over_psi,
)
from semistable.analysis.error import HypothesisError

logger = logging.getLogger(__name__)

GAUSS_POINTS = 16
KNOTS = 16

Profile = Callable[[np.ndarray], np.ndarray]


class HardyMargins(NamedTuple):
    hardy: float
    poincare: float


def _relative(lhs: float, rhs: float) -> float:
    total = lhs + rhs
    return 0.0 if total == 0 else (lhs - rhs) / total


def _gauss_nodes(breakpoints: Sequence[float]):
    t, w = np.polynomial.legendre.leggauss(GAUSS_POINTS)
    a = np.asarray(breakpoints[:-1], dtype=float)
    b = np.asarray(breakpoints[1:], dtype=float)
    keep = b > a
    a, b = a[keep], b[keep]
    half = 0.5 * (b - a)
    r = (half[:, None] * t[None, :] + 0.5 * (a + b)[:, None]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return r, weights


def check_hardy_model(model: RiemannianModel) -> None:
    """Reject models outside the reach of the improved Hardy inequality.

    Raises:
        DomainError: For n < 3 or custom warping functions
        HypothesisError: For elliptic balls with R >= R0, where H may fail to be positive
    """
    if model.n < 3:
        raise DomainError(f"The Hardy inequality needs n >= 3, got n={model.n}")
    if model.kind == ModelKind.CUSTOM:
        raise DomainError("The Hardy inequality is checked on space forms only")
    if model.kind == ModelKind.ELLIPTIC:
        R0 = critical_radii(model).R0
        if model.R >= R0:
            raise HypothesisError("R < R0", f"Elliptic ball needs R < R0 = {R0:.9g}, got R={model.R}")


def hardy_margin(model: RiemannianModel, xi: Profile, xi_r: Profile, breakpoints: Sequence[float],
                 H: Optional[float] = None, sup_ratio: Optional[float] = None) -> HardyMargins:
    """Relative margins (LHS - RHS)/(LHS + RHS) of the improved Hardy inequality and of
    the Poincare step applied to phi = xi psi^(n/2-1).

    Integrals are computed by Gauss-Legendre on each piece between ``breakpoints``,
    so xi should be smooth on every piece.
    """
    n = model.n
    H = hardy_constant(model) if H is None else H
    sup_ratio = sup_phi_over_psi(model) if sup_ratio is None else sup_ratio
    r, w = _gauss_nodes(breakpoints)
    psi, dpsi = model.psi(r), model.psi_prime(r)
    value, slope = xi(r), xi_r(r)

    gradient = np.sum(w * psi ** (n - 1) * slope ** 2)
    singular = np.sum(w * psi ** (n - 3) * value ** 2)
    mass = np.sum(w * psi ** (n - 1) * value ** 2)
    hardy = _relative(gradient, 0.25 * (n - 2) ** 2 * singular + H * mass)

    half = 0.5 * n - 1.0
    phi = value * psi ** half
    phi_r = slope * psi ** half + half * value * psi ** (half - 1.0) * dpsi
    poincare = _relative(np.sum(w * phi_r ** 2 * psi), 0.25 * sup_ratio ** -2 * np.sum(w * phi ** 2 * psi))
    return HardyMargins(float(hardy), float(poincare))


def random_profile(R: float, rng: np.random.Generator):
    """Piecewise-linear xi on random knots, constant on [0, r1] and zero at R."""
    interior = np.sort(rng.uniform(0.0, R, KNOTS - 1))
    knots = np.concatenate(([0.0], interior, [R]))
    heights = rng.uniform(-1.0, 1.0, KNOTS - 1)
    values = np.concatenate(([heights[0]], heights, [0.0]))
    widths = np.diff(knots)
    slopes = np.divide(np.diff(values), widths, out=np.zeros_like(widths), where=widths > 0)

    def xi(r):
        return np.interp(r, knots, values)

    def xi_r(r):
        piece = np.clip(np.searchsorted(knots, r, side="right") - 1, 0, slopes.size - 1)
        return slopes[piece]

    return xi, xi_r, knots


def hardy_verify(model: RiemannianModel, trials: int = 200, seed: int = 0) -> float:
    """Worst relative margin of the improved Hardy inequality over random test functions.

    Each trial also checks the Poincare step; the minimum over both is returned.
    A nonnegative value (up to quadrature roundoff) confirms the inequality.
    """
    check_hardy_model(model)
    if trials < 1:
        raise DomainError(f"Need at least one trial, got {trials}")
    H = hardy_constant(model)
    sup_ratio = sup_phi_over_psi(model)
    rng = np.random.default_rng(seed)
    worst = np.inf
    for _ in range(trials):
        xi, xi_r, knots = random_profile(model.R, rng)
        margins = hardy_margin(model, xi, xi_r, knots, H, sup_ratio)
        worst = min(worst, margins.hardy, margins.poincare)
    logger.info("hardy n=%d R=%g: H=%.9g worst margin %.3e over %d trials",
                model.n, model.R, H, worst, trials)
    return float(worst)


def sharpness_probe(model: RiemannianModel, eps: float, pieces: int = 64) -> float:
    """Hardy margin of psi^(-(n-2)/2) - psi(R)^(-(n-2)/2), frozen below eps.

    The margin shrinks as eps -> 0 since (n-2)^2/4 is the optimal constant.
    """
    check_hardy_model(model)
    if not 0 < eps < model.R:
        raise DomainError(f"Need 0 < eps < R, got eps={eps}")
    gamma = 0.5 * (model.n - 2)
    floor = float(model.psi(np.array([model.R]))[0]) ** -gamma
    top = float(model.psi(np.array([eps]))[0]) ** -gamma - floor

    def xi(r):
        r = np.asarray(r, dtype=float)
        return np.where(r < eps, top, model.psi(np.maximum(r, eps)) ** -gamma - floor)

    def xi_r(r):
        r = np.asarray(r, dtype=float)
        s = np.maximum(r, eps)
        return np.where(r < eps, 0.0, -gamma * model.psi(s) ** (-gamma - 1.0) * model.psi_prime(s))

    breakpoints = np.concatenate(([0.0], np.geomspace(eps, model.R, pieces + 1)))
    return hardy_margin(model, xi, xi_r, breakpoints).hardy
