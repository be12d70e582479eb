import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from semistable.error import DomainError
from semistable.geometry.error import GeometryError
from semistable.geometry.kinds import ModelKind

# Tolerance for the structural identities of the warping function, relative to
# the size of the terms once they exceed one.
STRUCTURE_TOL = 1e-10

Warping = Callable[[np.ndarray], np.ndarray]


def _identity(r):
    return np.asarray(r, dtype=float) * 1.0


def _one(r):
    return np.ones_like(np.asarray(r, dtype=float))


def _zero(r):
    return np.zeros_like(np.asarray(r, dtype=float))


def _minus_sin(r):
    return -np.sin(r)


_SPACE_FORMS = {
    ModelKind.EUCLIDEAN: (_identity, _one, _zero, 0),
    ModelKind.HYPERBOLIC: (np.sinh, np.cosh, np.sinh, -1),
    ModelKind.ELLIPTIC: (np.sin, np.cos, _minus_sin, 1),
}


@dataclass(frozen=True)
class RiemannianModel:
    """A ball of radius R in the model dr^2 + psi(r)^2 dTheta^2.

    The warping function and its first two derivatives are stored as vectorized
    callables. ``K_psi`` is the sectional curvature of the three space forms and
    stays ``None`` for custom warping functions.
    """

    n: int
    R: float
    kind: ModelKind
    psi: Warping
    psi_prime: Warping
    psi_second: Warping
    K_psi: Optional[int] = None

    @property
    def is_space_form(self) -> bool:
        return self.kind != ModelKind.CUSTOM

    def weight(self, r) -> np.ndarray:
        """Volume density psi(r)^(n-1)."""
        return self.psi(r) ** (self.n - 1)

    def curvature(self) -> int:
        """Return K_psi, refusing to guess it for custom warping functions."""
        if self.K_psi is None:
            raise DomainError("Curvature K_psi is only defined for the space forms")
        return self.K_psi

    def validate(self, samples: int = 257) -> "RiemannianModel":
        """Check the hypotheses on psi; returns self so factories can chain it.

        Raises:
            DomainError: If n < 2, R <= 0, or an elliptic ball reaches the antipode
            GeometryError: If psi(0), psi'(0), psi''(0), positivity or the
                space-form identities fail
        """
        if self.n < 2:
            raise DomainError(f"Dimension must be at least 2, got n={self.n}")
        if not self.R > 0:
            raise DomainError(f"Ball radius must be positive, got R={self.R}")
        if self.kind == ModelKind.ELLIPTIC and self.R >= math.pi:
            raise DomainError(f"Elliptic balls need R < pi, got R={self.R}")

        origin = np.array([0.0])
        checks = (
            ("psi(0)", float(self.psi(origin)[0]), 0.0),
            ("psi'(0)", float(self.psi_prime(origin)[0]), 1.0),
            ("psi''(0)", float(self.psi_second(origin)[0]), 0.0),
        )
        for label, value, expected in checks:
            if abs(value - expected) > STRUCTURE_TOL:
                raise GeometryError(f"{label} = {value!r}, expected {expected}")

        r = np.linspace(0.0, self.R, samples)[1:]
        psi = self.psi(r)
        if np.any(psi <= 0):
            raise GeometryError(f"psi must be positive on (0, R], min value {psi.min()!r}")

        if self.K_psi is not None:
            dpsi, ddpsi = self.psi_prime(r), self.psi_second(r)
            curvature = abs(self.K_psi)
            first = dpsi ** 2 - 1.0 + self.K_psi * psi ** 2
            second = ddpsi + self.K_psi * psi
            first_scale = np.maximum(1.0, dpsi ** 2 + curvature * psi ** 2)
            second_scale = np.maximum(1.0, np.abs(ddpsi) + curvature * psi)
            if (np.any(np.abs(first) > STRUCTURE_TOL * first_scale)
                    or np.any(np.abs(second) > STRUCTURE_TOL * second_scale)):
                raise GeometryError(f"psi does not match the space form with K_psi={self.K_psi}")
        return self


def make_space_form(kind: ModelKind, n: int, R: float) -> RiemannianModel:
    """Build the Euclidean, hyperbolic or elliptic ball of radius R in dimension n."""
    kind = ModelKind(kind)
    if kind not in _SPACE_FORMS:
        raise DomainError(f"'{kind.value}' is not a space form")
    psi, psi_prime, psi_second, curvature = _SPACE_FORMS[kind]
    model = RiemannianModel(
        n=int(n), R=float(R), kind=kind,
        psi=psi, psi_prime=psi_prime, psi_second=psi_second, K_psi=curvature,
    )
    return model.validate()


def make_custom_model(n: int, R: float, psi: Warping, psi_prime: Warping,
                      psi_second: Warping) -> RiemannianModel:
    """Build a model from a warping function given as three evaluators.

    Tabulated input is rejected: each of psi, psi', psi'' must be callable.
    """
    for label, fn in (("psi", psi), ("psi_prime", psi_prime), ("psi_second", psi_second)):
        if not callable(fn):
            raise DomainError(f"{label} must be a callable evaluator, got {type(fn).__name__}")
    model = RiemannianModel(
        n=int(n), R=float(R), kind=ModelKind.CUSTOM,
        psi=psi, psi_prime=psi_prime, psi_second=psi_second, K_psi=None,
    )
    return model.validate()
