class ServiceError(Exception):
    """Base exception class for command-line errors."""
    exit_code = 1

class ClientError(ServiceError):
    """Raised when a command cannot complete; carries the process exit code."""
    def __init__(self, message: str, exit_code: int = None):
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(message)

class SolverFailureError(ClientError):
    """Raised when a numerical run fails or disagrees with its closed form."""
    exit_code = 2

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)

class ConfigError(ClientError):
    """Raised when the run configuration is invalid."""
    exit_code = 3

class HypothesisViolationError(ClientError):
    """Raised when a theorem-backed check is requested outside its hypotheses."""
    exit_code = 4

    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(message)
