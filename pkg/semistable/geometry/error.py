from semistable.error import SemistableError

class GeometryError(SemistableError):
    """Raised when a warping function violates the structural hypotheses."""
    def __init__(self, message: str):
        super().__init__(message)
