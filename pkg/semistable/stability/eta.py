"""Cut-off functions eta with eta(R) = 0 for the weighted stability inequality."""
from typing import Callable, List, NamedTuple

import numpy as np

from semistable.error import DomainError
from semistable.geometry import RiemannianModel, delta_psi


class Eta(NamedTuple):
    label: str
    value: Callable[[np.ndarray], np.ndarray]
    derivative: Callable[[np.ndarray], np.ndarray]


def polynomial_eta(R: float, k: int) -> Eta:
    """(1 - r/R)^k."""
    if k < 1:
        raise DomainError(f"Polynomial cut-off needs k >= 1, got k={k}")
    return Eta(
        label=f"(1-r/R)^{k}",
        value=lambda r: (1.0 - np.asarray(r) / R) ** k,
        derivative=lambda r: -k / R * (1.0 - np.asarray(r) / R) ** (k - 1),
    )


def truncated_psi_eta(model: RiemannianModel, alpha: float, eps: float, delta: float) -> Eta:
    """psi^-alpha - psi(delta)^-alpha on [eps, delta], constant below eps, zero above delta."""
    if not 0 < eps < delta <= model.R:
        raise DomainError(f"Need 0 < eps < delta <= R, got eps={eps}, delta={delta}")
    cap = float(model.psi(np.array([delta]))[0]) ** -alpha
    top = float(model.psi(np.array([eps]))[0]) ** -alpha - cap

    def value(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        middle = (r >= eps) & (r <= delta)
        out[r < eps] = top
        out[middle] = model.psi(r[middle]) ** -alpha - cap
        return out

    def derivative(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        middle = (r >= eps) & (r <= delta)
        psi = model.psi(r[middle])
        out[middle] = -alpha * psi ** (-alpha - 1.0) * model.psi_prime(r[middle])
        return out

    return Eta(label=f"psi^-{alpha:g} on [{eps:.3g},{delta:.3g}]", value=value, derivative=derivative)


def zero_eta() -> Eta:
    return Eta(label="0", value=lambda r: np.zeros_like(np.asarray(r, dtype=float)),
               derivative=lambda r: np.zeros_like(np.asarray(r, dtype=float)))


def default_eta_family(model: RiemannianModel, alphas=(1.0,)) -> List[Eta]:
    """Polynomial cut-offs k = 1..4 and truncated powers of psi with eps = delta/8."""
    family = [polynomial_eta(model.R, k) for k in range(1, 5)]
    delta = delta_psi(model)
    for alpha in alphas:
        family.append(truncated_psi_eta(model, alpha, delta / 8.0, delta))
    return family
