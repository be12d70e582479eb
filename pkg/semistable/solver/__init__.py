"""Newton, Picard and natural continuation along the minimal branch."""
from .error import SolverError, NoConvergence, SingularJacobian
from .branch import (
    Branch, BranchPoint, format_branch_csv, write_branch_csv, read_branch_csv, format_float,
)
from .newton import NewtonResult, newton_iterate, newton_solve
from .picard import monotone_iteration
from .continuation import continue_branch, default_step

__all__ = [
    'SolverError',
    'NoConvergence',
    'SingularJacobian',
    'Branch',
    'BranchPoint',
    'format_branch_csv',
    'write_branch_csv',
    'read_branch_csv',
    'format_float',
    'NewtonResult',
    'newton_iterate',
    'newton_solve',
    'monotone_iteration',
    'continue_branch',
    'default_step',
]
