from typing import Dict

import numpy as np

from semistable.error import DomainError
from semistable.nonlinearity.kinds import NonlinearityKind
from semistable.nonlinearity.nonlinearity import ExponentialFamily, Nonlinearity


class GelfandClassic(ExponentialFamily):
    """f(u) = e^u."""

    kind = NonlinearityKind.GELFAND

    def _f(self, u):
        return np.exp(u)

    def _f_prime(self, u):
        return np.exp(u)


class PowerClassic(Nonlinearity):
    """f(u) = (1 + u)^m."""

    kind = NonlinearityKind.POWER_CLASSIC

    def __init__(self, m: float):
        if not m > 1:
            raise DomainError(f"Power exponent must exceed 1, got m={m}")
        self.m = float(m)

    @property
    def params(self) -> Dict[str, float]:
        return {"m": self.m}

    def _f(self, u):
        return (1.0 + u) ** self.m

    def _f_prime(self, u):
        return self.m * (1.0 + u) ** (self.m - 1.0)


class CustomNonlinearity(Nonlinearity):
    """User supplied pair of vectorized evaluators (f, f')."""

    kind = NonlinearityKind.CUSTOM

    def __init__(self, f, f_prime, overflow_guard: float = 1e8):
        if not callable(f) or not callable(f_prime):
            raise DomainError("Custom nonlinearities need callable f and f'")
        self._fn = f
        self._fn_prime = f_prime
        self.overflow_guard = float(overflow_guard)

    def _f(self, u):
        return np.asarray(self._fn(u), dtype=float)

    def _f_prime(self, u):
        return np.asarray(self._fn_prime(u), dtype=float)


def make_gelfand() -> GelfandClassic:
    return GelfandClassic().validate()


def make_power_classic(m: float) -> PowerClassic:
    return PowerClassic(m).validate()


def make_custom(f, f_prime, overflow_guard: float = 1e8) -> CustomNonlinearity:
    return CustomNonlinearity(f, f_prime, overflow_guard).validate()
