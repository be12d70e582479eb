"""Scalars derived from the warping function: phi, sup(phi/psi), H, R0, Re, Rp, delta."""
import math
from typing import NamedTuple, Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid, quad
from scipy.optimize import minimize_scalar

from semistable.error import DomainError
from semistable.geometry.error import GeometryError
from semistable.geometry.kinds import ModelKind
from semistable.geometry.model import RiemannianModel

SCAN_POINTS = 10 * 1024
DELTA_FRACTION = 0.49


class CriticalRadii(NamedTuple):
    R0: float
    Re: float
    Rp: float
    Rm: Optional[float] = None


def phi(model: RiemannianModel, r: float) -> float:
    """Primitive of psi vanishing at the pole."""
    if r < 0 or r > model.R * (1 + 1e-12):
        raise DomainError(f"r={r} outside [0, R={model.R}]")
    if model.kind == ModelKind.HYPERBOLIC:
        # cosh(r) - 1 without cancellation for small r
        return 2.0 * math.sinh(r / 2) ** 2
    if model.kind == ModelKind.EUCLIDEAN:
        return r * r / 2.0
    if model.kind == ModelKind.ELLIPTIC:
        return 2.0 * math.sin(r / 2) ** 2
    value, _ = quad(lambda s: float(model.psi(np.array([s]))[0]), 0.0, r,
                    epsabs=1e-14, epsrel=1e-13)
    return value


def _ratio(model: RiemannianModel, r: float) -> float:
    return phi(model, r) / float(model.psi(np.array([r]))[0])


def sup_phi_over_psi(model: RiemannianModel) -> float:
    """sup over (0, R) of phi/psi.

    For the space forms the ratio increases, so the supremum sits at r = R.
    Custom warping functions are scanned on a dense grid and the best cell is
    polished with a bounded golden-section/Brent search.
    """
    if model.is_space_form:
        return _ratio(model, model.R)

    r = np.linspace(0.0, model.R, SCAN_POINTS + 1)
    psi = model.psi(r)
    primitive = cumulative_trapezoid(psi, r, initial=0.0)
    ratio = primitive[1:] / psi[1:]
    k = int(np.argmax(ratio)) + 1
    lo, hi = r[max(k - 1, 1)], r[min(k + 1, SCAN_POINTS)]
    best_r = r[k]
    best = _ratio(model, best_r)
    result = minimize_scalar(lambda s: -_ratio(model, s), bounds=(lo, hi),
                             method="bounded", options={"xatol": 1e-12})
    if result.success and -result.fun > best:
        best = -result.fun
    # the bounded search never evaluates the endpoint itself
    return max(best, _ratio(model, hi))


def hardy_constant(model: RiemannianModel) -> float:
    """H = 1/4 ((sup phi/psi)^-2 - n(n-2) K_psi).

    Euclidean balls use the K_psi = 0 branch of the same formula.
    """
    if model.n < 3:
        raise DomainError(f"The Hardy constant needs n >= 3, got n={model.n}")
    curvature = model.curvature()
    sup_ratio = sup_phi_over_psi(model)
    return 0.25 * (sup_ratio ** -2 - model.n * (model.n - 2) * curvature)


def hardy_constant_closed_form(model: RiemannianModel) -> float:
    """Closed forms of H for sinh and sin (and Id)."""
    if model.n < 3:
        raise DomainError(f"The Hardy constant needs n >= 3, got n={model.n}")
    n, R = model.n, model.R
    if model.kind == ModelKind.HYPERBOLIC:
        return 0.25 * (math.sinh(R) ** 2 / (math.cosh(R) - 1) ** 2 + n * (n - 2))
    if model.kind == ModelKind.ELLIPTIC:
        return 0.25 * (math.sin(R) ** 2 / (math.cos(R) - 1) ** 2 - n * (n - 2))
    if model.kind == ModelKind.EUCLIDEAN:
        return 1.0 / R ** 2
    raise DomainError("No closed-form Hardy constant for custom warping functions")


def critical_radii(model: RiemannianModel, m: Optional[float] = None) -> CriticalRadii:
    """Radius thresholds R0, Re, Rp of the elliptic theory.

    R0 inverts (1 + cos s)/(1 - cos s) = n(n-2). When ``m`` is given, ``Rm``
    is the exact positivity radius of the power family for that exponent,
    sin^2 R < ((m-1)n - 2m)/((m-1)n - (m+1)), which is never below Rp.
    """
    n = model.n
    if n < 3:
        raise DomainError(f"Critical radii need n >= 3, got n={n}")
    if model.kind != ModelKind.ELLIPTIC:
        inf = math.inf
        return CriticalRadii(inf, inf, inf, inf if m is not None else None)

    q = n * (n - 2)
    R0 = min(math.acos((q - 1) / (q + 1)), math.pi / 2)
    Re = math.asin(math.sqrt((n - 2) / (n - 1)))
    Rp = math.asin(math.sqrt((n - 2) / n))
    Rm = None
    if m is not None:
        if m <= 1:
            raise DomainError(f"Power exponent must exceed 1, got m={m}")
        h = ((m - 1) * n - 2 * m) / ((m - 1) * n - (m + 1))
        Rm = math.asin(math.sqrt(h)) if 0 < h < 1 else 0.0
    return CriticalRadii(R0, Re, Rp, Rm)


def delta_psi(model: RiemannianModel, samples: int = 4096) -> float:
    """Largest delta <= 0.49 R such that psi' stays positive on [0, delta]."""
    cap = DELTA_FRACTION * model.R
    if model.kind in (ModelKind.HYPERBOLIC, ModelKind.EUCLIDEAN):
        return cap
    if model.kind == ModelKind.ELLIPTIC:
        return min(cap, math.nextafter(math.pi / 2, 0.0))

    r = np.linspace(0.0, cap, samples + 1)
    slope = model.psi_prime(r)
    if slope[1] <= 0 or slope[0] <= 0:
        raise GeometryError(f"psi' must be positive near the pole, psi'({r[1]:.3g}) = {slope[1]!r}")
    bad = np.flatnonzero(slope <= 0)
    if bad.size == 0:
        return cap
    return float(r[bad[0] - 1])
