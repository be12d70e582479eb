from abc import ABC, abstractmethod
from typing import Dict

import numpy as np

from semistable.nonlinearity.error import ValidityError
from semistable.nonlinearity.kinds import NonlinearityKind

# Largest argument accepted by the exponential families.
EXP_ARGUMENT_LIMIT = 700.0


class Nonlinearity(ABC):
    """Base class for reaction terms f with their derivative f'.

    Subclasses implement ``_f`` and ``_f_prime`` on arrays. ``overflow_guard``
    is the sup u above which the solver abandons a Newton attempt.
    """

    kind: NonlinearityKind
    overflow_guard: float = 1e8

    @property
    def params(self) -> Dict[str, float]:
        return {}

    @abstractmethod
    def _f(self, u: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def _f_prime(self, u: np.ndarray) -> np.ndarray:
        ...

    def _check_argument(self, u: np.ndarray) -> None:
        pass

    def f(self, u):
        """Evaluate f(u) elementwise.

        Raises:
            OverflowError: If an exponential family is evaluated above u = 700
        """
        u = np.asarray(u, dtype=float)
        self._check_argument(u)
        return self._f(u)

    def f_prime(self, u):
        """Evaluate f'(u) elementwise."""
        u = np.asarray(u, dtype=float)
        self._check_argument(u)
        return self._f_prime(u)

    def validate(self, probe_max: float = 50.0, probes: int = 501) -> "Nonlinearity":
        """Probe f(0) > 0, f' >= 0 on [0, probe_max] and growth of f(t)/t.

        Superlinearity is only probed at t = 1e3 and t = 1e6; a family that
        overflows there counts as superlinear.
        """
        f0 = float(self.f(0.0))
        if not f0 > 0:
            raise ValidityError(f"{self.kind.value}: f(0) = {f0!r} must be positive")

        grid = np.linspace(0.0, probe_max, probes)
        slope = self.f_prime(grid)
        if np.any(slope < 0) or not np.all(np.isfinite(slope)):
            worst = int(np.argmin(slope))
            raise ValidityError(
                f"{self.kind.value}: f'({grid[worst]:.4g}) = {slope[worst]!r} must be nonnegative")

        try:
            low = float(self.f(1e3)) / 1e3
            high = float(self.f(1e6)) / 1e6
        except OverflowError:
            return self
        if np.isfinite(high) and not high > low:
            raise ValidityError(f"{self.kind.value}: f(t)/t does not grow ({low!r} -> {high!r})")
        return self

    def __repr__(self) -> str:
        params = ", ".join(f"{k}={v:.6g}" for k, v in self.params.items())
        return f"{self.__class__.__name__}({params})"


class ExponentialFamily(Nonlinearity):
    """Shared overflow handling for e^u based reaction terms."""

    overflow_guard = 500.0

    def _check_argument(self, u: np.ndarray) -> None:
        if u.size and np.nanmax(u) > EXP_ARGUMENT_LIMIT:
            raise OverflowError(f"exponential argument {np.nanmax(u):.6g} exceeds {EXP_ARGUMENT_LIMIT}")
