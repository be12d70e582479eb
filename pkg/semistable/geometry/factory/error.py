class GeometryFactoryError(Exception):
    """Base exception class for geometry factory-related errors."""
    pass

class InvalidModelKindError(GeometryFactoryError):
    """Raised when an unknown model kind is requested."""
    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"Invalid model kind: {kind}")
