from semistable.error import DomainError, SemistableError

class HypothesisError(DomainError):
    """Raised when a closed-form result is requested outside its hypotheses."""
    def __init__(self, condition: str, message: str = None):
        self.condition = condition
        super().__init__(message or f"Hypothesis violated: {condition}")

class ReportFailure(SemistableError):
    """Raised when a numerical run disagrees with its closed-form oracle."""
    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)
