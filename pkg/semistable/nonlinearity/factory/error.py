class NonlinearityFactoryError(Exception):
    """Base exception class for nonlinearity factory-related errors."""
    pass

class InvalidNonlinearityKindError(NonlinearityFactoryError):
    """Raised when an unknown nonlinearity kind is requested."""
    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"Invalid nonlinearity kind: {kind}")

class MissingExponentError(NonlinearityFactoryError):
    """Raised when a power family is requested without its exponent."""
    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"Nonlinearity '{kind}' needs an exponent m")
