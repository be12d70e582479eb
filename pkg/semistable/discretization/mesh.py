from dataclasses import dataclass
from functools import cached_property

import numpy as np

from semistable.error import DomainError
from semistable.geometry import RiemannianModel


@dataclass(frozen=True)
class RadialMesh:
    """Cell-centered uniform mesh of (0, R).

    Nodes sit at r_i = (i + 1/2) h with h = R/N, so no node lands on the pole
    and the last half node is R itself.
    """

    N: int
    R: float

    def __post_init__(self):
        if self.N < 2:
            raise DomainError(f"Mesh needs at least 2 cells, got N={self.N}")
        if not self.R > 0:
            raise DomainError(f"Mesh radius must be positive, got R={self.R}")

    @property
    def h(self) -> float:
        return self.R / self.N

    @cached_property
    def nodes(self) -> np.ndarray:
        r = (np.arange(self.N) + 0.5) * self.h
        r.flags.writeable = False
        return r

    @cached_property
    def half_nodes(self) -> np.ndarray:
        """r_{i+1/2} = (i+1) h for i = 0..N-1; the last one is R."""
        r = np.arange(1, self.N + 1) * self.h
        r[-1] = self.R
        r.flags.writeable = False
        return r

    @cached_property
    def interfaces(self) -> np.ndarray:
        """All half nodes including the pole: 0, h, ..., R."""
        r = np.concatenate(([0.0], self.half_nodes))
        r.flags.writeable = False
        return r


def make_mesh(model: RiemannianModel, N: int) -> RadialMesh:
    return RadialMesh(N=int(N), R=model.R)
