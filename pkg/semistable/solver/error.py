from semistable.error import SemistableError

class SolverError(SemistableError):
    """Base exception class for solver-related errors."""
    pass

class NoConvergence(SolverError):
    """Raised when an iteration stops without meeting its tolerance."""
    def __init__(self, message: str, lam: float = None, iterations: int = None):
        self.lam = lam
        self.iterations = iterations
        super().__init__(message)

class SingularJacobian(SolverError):
    """Raised when the Newton Jacobian has a vanishing pivot."""
    def __init__(self, lam: float, pivot: float, scale: float):
        self.lam = lam
        self.pivot = pivot
        self.scale = scale
        super().__init__(f"Singular Jacobian at lambda={lam:.9g}: pivot {pivot:.3e} vs scale {scale:.3e}")
