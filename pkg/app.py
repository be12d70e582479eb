import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from cli.base import reset_all
from cli.commands import cmd_branch, cmd_exponents, cmd_hardy, cmd_stability, cmd_verify_extremal
from cli.error import ClientError, ConfigError, SolverFailureError
from models import RunConfig
from semistable.solver import format_branch_csv, format_float

logger = logging.getLogger(__name__)

# option name -> argparse keyword arguments; every default is None so that only
# flags given on the command line override a --config file
OPTIONS = {
    "model": dict(help="euclidean, hyperbolic or elliptic"),
    "n": dict(type=int, help="dimension"),
    "R": dict(type=float, help="ball radius"),
    "f": dict(help="exp-model, power-model, gelfand or power"),
    "m": dict(type=float, help="power exponent"),
    "N": dict(type=int, help="mesh cells"),
    "ladder": dict(type=int, nargs="+", help="increasing mesh sizes"),
    "newton-tol": dict(type=float),
    "eig-tol": dict(type=float),
    "lambda-step0": dict(type=float, help="initial continuation step"),
    "trials": dict(type=int, help="random Hardy test functions"),
    "seed": dict(type=int),
    "jobs": dict(type=int),
    "output": dict(help="output file, stdout when omitted"),
    "input": dict(help="branch CSV for the stability command"),
}

COMMANDS = {
    "branch": "continue the minimal branch and write its CSV",
    "verify-extremal": "compare the fold with the closed-form extremal pair",
    "stability": "fill in the principal eigenvalue of a branch CSV",
    "hardy": "check the improved Hardy inequality on random test functions",
    "exponents": "print the critical exponents p0, p1 and N(m)",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semistable",
        description="Radial semistable solutions of -Delta_g u = lambda f(u) on geodesic balls")
    commands = parser.add_subparsers(dest="command", required=True)
    for name, help_text in COMMANDS.items():
        sub = commands.add_parser(name, help=help_text)
        for option, kwargs in OPTIONS.items():
            sub.add_argument(f"--{option}", dest=option.replace("-", "_"), default=None, **kwargs)
        sub.add_argument("--config", default=None, help="JSON file with run options")
        sub.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """Merge a --config JSON file with explicit flags, flags winning"""
    values = {}
    if args.config:
        try:
            values = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read config file {args.config}: {e}")
        if not isinstance(values, dict):
            raise ConfigError(f"Config file {args.config} must hold a JSON object")
        values = {key.replace("-", "_"): value for key, value in values.items()}
    for option in OPTIONS:
        key = option.replace("-", "_")
        value = getattr(args, key)
        if value is not None:
            values[key] = value
    try:
        return RunConfig(**values)
    except ValidationError as e:
        raise ConfigError(f"Invalid configuration: {e.errors()[0]['loc']}: {e.errors()[0]['msg']}")


def emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def run(command: str, config: RunConfig) -> None:
    if command == "branch":
        emit(format_branch_csv(cmd_branch(config)), config.output)
    elif command == "stability":
        emit(format_branch_csv(cmd_stability(config)), config.output)
    elif command == "verify-extremal":
        try:
            report = cmd_verify_extremal(config)
        except SolverFailureError as e:
            if e.report is not None:
                emit(e.report.to_json() + "\n", config.output)
            raise
        emit(report.to_json() + "\n", config.output)
    elif command == "hardy":
        result = cmd_hardy(config)
        print(f"H={format_float(result.H)} worst_margin={format_float(result.worst_margin)}")
        if config.output:
            emit(json.dumps({"H": float(format_float(result.H)),
                             "worst_margin": float(format_float(result.worst_margin))}, indent=2) + "\n",
                 config.output)
    elif command == "exponents":
        table = cmd_exponents(config)
        line = f"p0={format_float(table.p0)} p1={format_float(table.p1)}"
        if table.N_m is not None:
            line += f" N_m={format_float(table.N_m)}"
        print(line)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    reset_all()
    try:
        run(args.command, load_config(args))
    except ClientError as e:
        print(f"ERROR:{e.exit_code}:{e}", file=sys.stderr)
        return e.exit_code
    return 0
