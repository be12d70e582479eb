class SemistableError(Exception):
    """Base exception class for all library errors."""
    pass

class DomainError(SemistableError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""
    def __init__(self, message: str):
        super().__init__(message)
