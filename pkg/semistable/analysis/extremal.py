import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from semistable.error import DomainError
from semistable.geometry import ModelKind, RiemannianModel, critical_radii
from semistable.nonlinearity import (
    ExpModel, Nonlinearity, NonlinearityKind, PowerModel, make_gelfand, make_power_classic,
)
from semistable.analysis.error import HypothesisError
from semistable.analysis.exponents import dimension_threshold, lambda_sharp

RadialFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class ExtremalPair:
    """Closed-form extremal parameter and singular solution with its derivatives."""

    model: RiemannianModel
    nl: Nonlinearity
    lambda_star: float
    u: RadialFunction
    u_r: RadialFunction
    u_rr: RadialFunction

    def laplacian(self, r) -> np.ndarray:
        """Delta_g u* = u_rr + (n-1) (psi'/psi) u_r."""
        r = np.asarray(r, dtype=float)
        ratio = self.model.psi_prime(r) / self.model.psi(r)
        return self.u_rr(r) + (self.model.n - 1) * ratio * self.u_r(r)

    def strong_residual(self, r) -> np.ndarray:
        """-Delta_g u* - lambda* f(u*); zero for r in (0, R]."""
        r = np.asarray(r, dtype=float)
        return -self.laplacian(r) - self.lambda_star * self.nl.f(self.u(r))


def _require_dimension(n: int, minimum: float, label: str) -> None:
    if n < minimum:
        raise HypothesisError(
            f"n >= {label}",
            f"Closed-form extremal solution needs n >= {label} = {minimum:.9g}, got n={n}")


def _require_radius(model: RiemannianModel, m: Optional[float]) -> None:
    if model.kind != ModelKind.ELLIPTIC:
        return
    radii = critical_radii(model)
    other, label = (radii.Re, "Re") if m is None else (radii.Rp, "Rp")
    bound = min(radii.R0, other)
    if model.R >= bound:
        raise HypothesisError(
            f"R < min(R0, {label})",
            f"Elliptic ball needs R < min(R0, {label}) = {bound:.9g}, got R={model.R}")


def _logarithmic(model: RiemannianModel, nl: Nonlinearity, lam: float) -> ExtremalPair:
    psi, dpsi, ddpsi = model.psi, model.psi_prime, model.psi_second
    log_psi_R = math.log(float(psi(np.array([model.R]))[0]))

    def u(r):
        return -2.0 * (np.log(psi(r)) - log_psi_R)

    def u_r(r):
        return -2.0 * dpsi(r) / psi(r)

    def u_rr(r):
        p = psi(r)
        return -2.0 * (ddpsi(r) * p - dpsi(r) ** 2) / p ** 2

    return ExtremalPair(model, nl, lam, u, u_r, u_rr)


def _algebraic(model: RiemannianModel, nl: Nonlinearity, lam: float, m: float) -> ExtremalPair:
    psi, dpsi, ddpsi = model.psi, model.psi_prime, model.psi_second
    beta = 2.0 / (m - 1.0)
    shift = float(psi(np.array([model.R]))[0]) ** -beta

    def u(r):
        return psi(r) ** -beta - shift

    def u_r(r):
        return -beta * psi(r) ** (-beta - 1.0) * dpsi(r)

    def u_rr(r):
        p = psi(r)
        return beta * (beta + 1.0) * p ** (-beta - 2.0) * dpsi(r) ** 2 - beta * p ** (-beta - 1.0) * ddpsi(r)

    return ExtremalPair(model, nl, lam, u, u_r, u_rr)


def _euclidean_pair(model: RiemannianModel, nl: Nonlinearity, lam: float,
                    m: Optional[float]) -> ExtremalPair:
    """Classical pairs for e^u and (1+u)^m on a Euclidean ball of radius R."""
    R = model.R
    if m is None:
        return ExtremalPair(model, nl, lam,
                            u=lambda r: -2.0 * np.log(np.asarray(r) / R),
                            u_r=lambda r: -2.0 / np.asarray(r),
                            u_rr=lambda r: 2.0 / np.asarray(r) ** 2)
    beta = 2.0 / (m - 1.0)
    return ExtremalPair(model, nl, lam,
                        u=lambda r: (np.asarray(r) / R) ** -beta - 1.0,
                        u_r=lambda r: -beta / R * (np.asarray(r) / R) ** (-beta - 1.0),
                        u_rr=lambda r: beta * (beta + 1.0) / R ** 2 * (np.asarray(r) / R) ** (-beta - 2.0))


def closed_form_extremal(model: RiemannianModel, nl_kind: NonlinearityKind,
                         m: Optional[float] = None) -> ExtremalPair:
    """Extremal parameter and extremal solution in closed form.

    exp-model: lambda* = 2(n-2), u* = -2 log(psi/psi(R)), needs n >= 10.
    power-model: lambda* = (2/(m-1))(n - 2m/(m-1)), u* = psi^(-2/(m-1)) - psi(R)^(-2/(m-1)),
    needs n >= N(m). Elliptic balls additionally need R < min(R0, Re) resp. min(R0, Rp).
    The classical e^u and (1+u)^m families are covered on Euclidean balls, where
    lambda* scales with 1/R^2.

    Raises:
        HypothesisError: Naming the violated dimension or radius condition
        DomainError: For custom warping functions or a missing exponent
    """
    nl_kind = NonlinearityKind(nl_kind)
    if not model.is_space_form:
        raise DomainError("Closed-form extremal solutions need a space form")
    power = nl_kind in (NonlinearityKind.POWER_MODEL, NonlinearityKind.POWER_CLASSIC)
    if power and (m is None or not m > 1):
        raise DomainError(f"Power families need an exponent m > 1, got m={m}")
    if nl_kind == NonlinearityKind.CUSTOM:
        raise DomainError("Custom nonlinearities have no closed-form extremal solution")

    n = model.n
    if power:
        _require_dimension(n, dimension_threshold(m), "N(m)")
    else:
        _require_dimension(n, 10, "10")

    if nl_kind in (NonlinearityKind.GELFAND, NonlinearityKind.POWER_CLASSIC):
        if model.kind != ModelKind.EUCLIDEAN:
            raise HypothesisError(
                "euclidean ball",
                f"'{nl_kind.value}' has a closed-form extremal pair only on Euclidean balls")
        if power:
            return _euclidean_pair(model, make_power_classic(m), lambda_sharp(n, m) / model.R ** 2, m)
        return _euclidean_pair(model, make_gelfand(), 2.0 * (n - 2) / model.R ** 2, None)

    _require_radius(model, m if power else None)
    if power:
        return _algebraic(model, PowerModel(model, m), lambda_sharp(n, m), m)
    return _logarithmic(model, ExpModel(model), 2.0 * (n - 2))
