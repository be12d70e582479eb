from semistable.error import DomainError

class ValidityError(DomainError):
    """Raised when a nonlinearity fails positivity, monotonicity or superlinearity."""
    def __init__(self, message: str):
        super().__init__(message)
