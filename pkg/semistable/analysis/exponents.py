import math
from typing import NamedTuple, Optional

from scipy.optimize import brentq

from semistable.error import DomainError


class Exponents(NamedTuple):
    p0: float
    p1: float
    N_m: Optional[float] = None


def _critical(n: int, offset: float) -> float:
    denominator = n - 2.0 * math.sqrt(n - 1) - offset
    return math.inf if denominator <= 0 else 2.0 * n / denominator


def dimension_threshold(m: float) -> float:
    """N(m) = 2 + 4m/(m-1) + 4 sqrt(m/(m-1))."""
    if not m > 1:
        raise DomainError(f"Power exponent must exceed 1, got m={m}")
    ratio = m / (m - 1.0)
    return 2.0 + 4.0 * ratio + 4.0 * math.sqrt(ratio)


def regularity_exponents(n: int, m: Optional[float] = None) -> Exponents:
    """Critical L^p and W^{1,p} exponents p0, p1, and N(m) when m is given.

    p0 = 2n/(n - 2 sqrt(n-1) - 4) and p1 = 2n/(n - 2 sqrt(n-1) - 2); both are
    infinite once their denominator is not positive.
    """
    if n < 2:
        raise DomainError(f"Dimension must be at least 2, got n={n}")
    N_m = dimension_threshold(m) if m is not None else None
    return Exponents(_critical(n, 4.0), _critical(n, 2.0), N_m)


def lambda_sharp(n: int, m: float) -> float:
    """(2/(m-1)) (n - 2m/(m-1))."""
    if not m > 1:
        raise DomainError(f"Power exponent must exceed 1, got m={m}")
    return 2.0 / (m - 1.0) * (n - 2.0 * m / (m - 1.0))


def critical_power(n: float) -> float:
    """The exponent m with N(m) = n; needs n > 10 since N decreases to 10."""
    if not n > 10:
        raise DomainError(f"N(m) = n has no solution for n <= 10, got n={n}")
    low = 1.0 + 1e-12
    high = 2.0
    while dimension_threshold(high) >= n:
        high *= 2.0
    return brentq(lambda m: dimension_threshold(m) - n, low, high, xtol=1e-15, rtol=4e-16)


def admissible_alpha(n: int, p: float, norm: str = "Lp") -> float:
    """An alpha in [1, 1 + sqrt(n-1)) whose key estimate reaches the exponent p.

    L^p needs p < 2n/(n - 2 alpha - 2); W^{1,p} needs p < 2n/(n - 2 alpha).
    Returns 1 when that already suffices, otherwise the midpoint between the
    threshold and the upper end of the range.

    Raises:
        DomainError: If p is not below p0 (resp. p1)
    """
    if not p >= 1:
        raise DomainError(f"Norm exponent must be >= 1, got p={p}")
    if norm not in ("Lp", "W1p"):
        raise DomainError(f"norm must be 'Lp' or 'W1p', got {norm!r}")
    upper = 1.0 + math.sqrt(n - 1)
    base = n / 2.0 - (1.0 if norm == "Lp" else 0.0)
    threshold = base - (0.0 if math.isinf(p) else n / p)
    if threshold >= upper:
        limit = regularity_exponents(n)[0 if norm == "Lp" else 1]
        raise DomainError(f"p={p} is not below the critical exponent {limit:.9g} for n={n}")
    if threshold < 1.0:
        return 1.0
    return 0.5 * (threshold + upper)
