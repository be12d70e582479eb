import logging
from typing import List, NamedTuple, Optional

from cli.base import _geometry_factory, _nonlinearity_factory, with_instance
from cli.error import ConfigError, HypothesisViolationError, SolverFailureError
from models import RunConfig
from semistable.error import DomainError
from semistable.geometry import GeometryError, ModelKind, RiemannianModel, critical_radii, hardy_constant
from semistable.geometry.factory import InvalidModelKindError
from semistable.nonlinearity import Nonlinearity, NonlinearityKind
from semistable.nonlinearity.factory import InvalidNonlinearityKindError, MissingExponentError
from semistable.discretization import make_mesh
from semistable.solver import Branch, SolverError, continue_branch, newton_solve, read_branch_csv
from semistable.stability import principal_eigenvalue
from semistable.analysis import (
    Exponents, ExtremalReport, HypothesisError, ReportFailure, closed_form_extremal,
    hardy_verify, regularity_exponents, verify_extremal,
)

logger = logging.getLogger(__name__)

COUPLED = (NonlinearityKind.EXP_MODEL, NonlinearityKind.POWER_MODEL)


class HardyResult(NamedTuple):
    H: float
    worst_margin: float


def _require(config: RunConfig, *names: str) -> None:
    missing = [name for name in names if getattr(config, name) is None]
    if missing:
        raise ConfigError(f"Missing required option(s): {', '.join('--' + m for m in missing)}")


def configure_problem(config: RunConfig, with_nonlinearity: bool = True,
                      permissive: bool = False) -> None:
    """Build the model (and nonlinearity) singletons from a run config"""
    _require(config, "model", "n", "R")
    try:
        model = _geometry_factory.create_instance(config.model, config.n, config.R)
    except (InvalidModelKindError, DomainError, GeometryError) as e:
        raise ConfigError(str(e))
    if not with_nonlinearity:
        return
    _require(config, "f")
    try:
        _nonlinearity_factory.create_instance(config.f, model, config.m, permissive=permissive)
    except (InvalidNonlinearityKindError, MissingExponentError, DomainError) as e:
        raise ConfigError(str(e))


def ladder_of(config: RunConfig) -> List[int]:
    if config.ladder:
        return list(config.ladder)
    return [config.N // 8, config.N // 4, config.N // 2, config.N]


@with_instance(_geometry_factory)
@with_instance(_nonlinearity_factory)
def _run_branch(nl: Nonlinearity, model: RiemannianModel, config: RunConfig) -> Branch:
    if model.kind == ModelKind.ELLIPTIC and nl.kind in COUPLED and model.n >= 3:
        R0 = critical_radii(model).R0
        if model.R >= R0:
            raise ConfigError(f"'{nl.kind.value}' on an elliptic ball needs R < R0 = {R0:.9g}, got R={model.R}")
    try:
        return continue_branch(model, make_mesh(model, config.N), nl,
                               lambda_step0=config.lambda_step0, tol=config.newton_tol)
    except SolverError as e:
        raise SolverFailureError(str(e))


def cmd_branch(config: RunConfig) -> Branch:
    """Continue the minimal branch to its fold"""
    configure_problem(config, permissive=True)
    return _run_branch(config)


@with_instance(_geometry_factory)
@with_instance(_nonlinearity_factory)
def _run_stability(nl: Nonlinearity, model: RiemannianModel, config: RunConfig, branch: Branch) -> Branch:
    mesh = make_mesh(model, config.N)
    previous = None
    try:
        for point in branch.points:
            point.u = newton_solve(model, mesh, nl, point.lam, previous, config.newton_tol)
            point.lambda1 = principal_eigenvalue(model, mesh, nl, point.lam, point.u,
                                                 tol=config.eig_tol).lambda1
            previous = point.u
    except SolverError as e:
        raise SolverFailureError(str(e))
    return branch


def cmd_stability(config: RunConfig) -> Branch:
    """Re-solve every point of a branch CSV and fill in lambda_1"""
    _require(config, "input")
    try:
        branch = read_branch_csv(config.input)
    except (OSError, DomainError) as e:
        raise ConfigError(f"Cannot read branch table: {e}")
    configure_problem(config, permissive=True)
    return _run_stability(config, branch)


@with_instance(_geometry_factory)
def _closed_form_check(model: RiemannianModel, config: RunConfig) -> None:
    try:
        closed_form_extremal(model, config.f, config.m)
    except HypothesisError as e:
        raise HypothesisViolationError(e.condition, str(e))
    except DomainError as e:
        raise ConfigError(str(e))


@with_instance(_geometry_factory)
@with_instance(_nonlinearity_factory)
def _run_verify(nl: Nonlinearity, model: RiemannianModel, config: RunConfig) -> ExtremalReport:
    try:
        return verify_extremal(model, nl, ladder_of(config), lambda_step0=config.lambda_step0,
                               tol=config.newton_tol, jobs=config.jobs)
    except ReportFailure as e:
        raise SolverFailureError(str(e), report=e.report)
    except SolverError as e:
        raise SolverFailureError(str(e))
    except DomainError as e:
        raise ConfigError(str(e))


def cmd_verify_extremal(config: RunConfig) -> ExtremalReport:
    """Compare the numerical fold with the closed-form extremal pair"""
    configure_problem(config, with_nonlinearity=False)
    _require(config, "f")
    _closed_form_check(config)
    configure_problem(config)
    return _run_verify(config)


@with_instance(_geometry_factory)
def _run_hardy(model: RiemannianModel, config: RunConfig) -> HardyResult:
    try:
        worst = hardy_verify(model, trials=config.trials, seed=config.seed)
        return HardyResult(hardy_constant(model), worst)
    except HypothesisError as e:
        raise HypothesisViolationError(e.condition, str(e))
    except DomainError as e:
        raise ConfigError(str(e))


def cmd_hardy(config: RunConfig) -> HardyResult:
    """Random-trial check of the improved Hardy inequality"""
    configure_problem(config, with_nonlinearity=False)
    return _run_hardy(config)


def cmd_exponents(config: RunConfig) -> Exponents:
    """Critical exponents p0, p1 and N(m)"""
    _require(config, "n")
    try:
        return regularity_exponents(config.n, config.m)
    except DomainError as e:
        raise ConfigError(str(e))
