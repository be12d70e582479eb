"""Reaction terms whose constants are taken from the geometry of the ball."""
from typing import Dict

import numpy as np

from semistable.error import DomainError
from semistable.geometry import ModelKind, RiemannianModel, critical_radii
from semistable.nonlinearity.error import ValidityError
from semistable.nonlinearity.kinds import NonlinearityKind
from semistable.nonlinearity.nonlinearity import ExponentialFamily, Nonlinearity


class ExpModel(ExponentialFamily):
    """f(u) = e^u / psi(R)^2 - (n-1)/(n-2) K_psi."""

    kind = NonlinearityKind.EXP_MODEL

    def __init__(self, model: RiemannianModel):
        if model.n < 3:
            raise DomainError(f"The exponential model needs n >= 3, got n={model.n}")
        self.n = model.n
        self.K_psi = model.curvature()
        self.psi_R = float(model.psi(np.array([model.R]))[0])
        self.scale = 1.0 / self.psi_R ** 2
        self.shift = (model.n - 1) / (model.n - 2) * self.K_psi

    @property
    def params(self) -> Dict[str, float]:
        return {"psi_R": self.psi_R, "K_psi": self.K_psi}

    def _f(self, u):
        return np.exp(u) * self.scale - self.shift

    def _f_prime(self, u):
        return np.exp(u) * self.scale


class PowerModel(Nonlinearity):
    """f(u) = (u + c)((u + c)^(m-1) - kappa K_psi), c = psi(R)^(-2/(m-1)).

    kappa = ((m-1)n - (m+1)) / ((m-1)n - 2m).
    """

    kind = NonlinearityKind.POWER_MODEL

    def __init__(self, model: RiemannianModel, m: float):
        if model.n < 3:
            raise DomainError(f"The power model needs n >= 3, got n={model.n}")
        if not m > 1:
            raise DomainError(f"Power exponent must exceed 1, got m={m}")
        n = model.n
        denominator = (m - 1) * n - 2 * m
        if denominator == 0:
            raise ValidityError(f"m={m} makes the power model coefficient singular for n={n}")
        self.n = n
        self.m = float(m)
        self.K_psi = model.curvature()
        self.psi_R = float(model.psi(np.array([model.R]))[0])
        self.c = self.psi_R ** (-2.0 / (self.m - 1.0))
        self.kappa = ((m - 1) * n - (m + 1)) / denominator

    @property
    def params(self) -> Dict[str, float]:
        return {"m": self.m, "c": self.c, "kappa": self.kappa, "K_psi": self.K_psi}

    def _f(self, u):
        w = u + self.c
        return w ** self.m - self.kappa * self.K_psi * w

    def _f_prime(self, u):
        w = u + self.c
        return self.m * w ** (self.m - 1.0) - self.kappa * self.K_psi


def make_exp_model(model: RiemannianModel) -> ExpModel:
    """Exponential family coupled to the ball; elliptic balls need R < Re."""
    if model.kind == ModelKind.ELLIPTIC and model.n >= 3:
        radii = critical_radii(model)
        if model.R >= radii.Re:
            raise ValidityError(
                f"Exponential model on an elliptic ball needs R < Re = {radii.Re:.9g}, got R={model.R}")
    return ExpModel(model).validate()


def make_power_model(model: RiemannianModel, m: float, permissive: bool = False) -> PowerModel:
    """Power family coupled to the ball.

    Args:
        model: The ball the constants are taken from
        m: Exponent; must exceed (n+2)/(n-2) unless ``permissive``
        permissive: Only require m > 1, for branch-only studies

    Raises:
        ValidityError: On the exponent threshold or an elliptic radius R >= Rp
    """
    n = model.n
    if n < 3:
        raise DomainError(f"The power model needs n >= 3, got n={n}")
    threshold = (n + 2) / (n - 2)
    if not permissive and not m > threshold:
        raise ValidityError(f"Power model needs m > (n+2)/(n-2) = {threshold:.9g}, got m={m}")
    if model.kind == ModelKind.ELLIPTIC:
        radii = critical_radii(model)
        if model.R >= radii.Rp:
            raise ValidityError(
                f"Power model on an elliptic ball needs R < Rp = {radii.Rp:.9g}, got R={model.R}")
    return PowerModel(model, m).validate()
