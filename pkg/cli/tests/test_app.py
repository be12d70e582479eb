import json
import unittest

import pytest

from app import main
from cli.base import _geometry_factory, _nonlinearity_factory, reset_all
from cli.commands import cmd_exponents, configure_problem, ladder_of
from cli.error import ConfigError
from models import RunConfig
from semistable.solver import read_branch_csv

BRANCH = ["branch", "--model", "euclidean", "--n", "3", "--R", "1", "--f", "gelfand", "--N", "128"]

class TestConfigure(unittest.TestCase):
    def setUp(self):
        reset_all()

    def test_configure_problem(self):
        configure_problem(RunConfig(model="hyperbolic", n=10, R=1.0, f="exp-model"))
        self.assertEqual(_geometry_factory.get_instance().n, 10)
        self.assertEqual(_nonlinearity_factory.get_instance().kind.value, "exp-model")

    def test_missing_options(self):
        with self.assertRaises(ConfigError) as ctx:
            configure_problem(RunConfig(model="hyperbolic", n=10))
        self.assertIn("--R", str(ctx.exception))

    def test_default_ladder(self):
        self.assertEqual(ladder_of(RunConfig(N=2048)), [256, 512, 1024, 2048])
        self.assertEqual(ladder_of(RunConfig(ladder=[64, 128])), [64, 128])

    def test_run_config_validation(self):
        with self.assertRaises(ValueError):
            RunConfig(f="power-model")
        with self.assertRaises(ValueError):
            RunConfig(ladder=[128, 64])
        with self.assertRaises(ValueError):
            RunConfig(unknown=1)

    def test_exponents(self):
        self.assertAlmostEqual(cmd_exponents(RunConfig(n=13, m=3)).N_m, 12.898979, places=6)
        with self.assertRaises(ConfigError):
            cmd_exponents(RunConfig())

def test_branch_writes_csv(tmp_path):
    output = tmp_path / "branch.csv"
    assert main(BRANCH + ["--output", str(output)]) == 0
    lines = output.read_text().splitlines()
    assert lines[0] == "lambda,sup_u,l1_norm,lambda1,newton_iters"
    assert lines[-1].startswith("# lambda_star_estimate=")
    estimate = float(lines[-1].split("=")[1])
    assert estimate == pytest.approx(3.32, abs=0.02)

def test_branch_is_deterministic(capsys):
    assert main(BRANCH) == 0
    first = capsys.readouterr().out
    assert main(BRANCH) == 0
    assert capsys.readouterr().out == first

def test_stability_fills_eigenvalues(tmp_path):
    table = tmp_path / "branch.csv"
    assert main(BRANCH + ["--output", str(table)]) == 0
    filled = tmp_path / "stability.csv"
    args = ["stability", "--model", "euclidean", "--n", "3", "--R", "1", "--f", "gelfand",
            "--N", "128", "--input", str(table), "--output", str(filled)]
    assert main(args) == 0
    branch = read_branch_csv(filled)
    values = [point.lambda1 for point in branch.points]
    assert all(value > 0 for value in values)
    assert values[0] > values[-1]

def test_stability_beyond_fold_fails(tmp_path, capsys):
    table = tmp_path / "branch.csv"
    table.write_text("lambda,sup_u,l1_norm,lambda1,newton_iters\n100,1,1,nan,3\n# lambda_star_estimate=3.32\n")
    args = ["stability", "--model", "euclidean", "--n", "3", "--R", "1", "--f", "gelfand",
            "--N", "64", "--input", str(table)]
    assert main(args) == 2
    assert capsys.readouterr().err.startswith("ERROR:2:")

def test_verify_extremal_hypothesis_violation(capsys):
    args = ["verify-extremal", "--model", "elliptic", "--n", "10", "--R", "1", "--f", "exp-model"]
    assert main(args) == 4
    assert "R0" in capsys.readouterr().err

@pytest.mark.parametrize("args", [
    ["branch", "--model", "hyperbolic", "--n", "10", "--R", "1"],
    ["branch", "--model", "spherical", "--n", "10", "--R", "1", "--f", "exp-model"],
    ["branch", "--model", "hyperbolic", "--n", "10", "--R", "-1", "--f", "exp-model"],
    ["exponents"],
    ["stability", "--model", "euclidean", "--n", "3", "--R", "1", "--f", "gelfand", "--input", "/nonexistent.csv"],
])
def test_configuration_errors(args, capsys):
    assert main(args) == 3
    assert capsys.readouterr().err.startswith("ERROR:3:")

def test_config_file(tmp_path, capsys):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"n": 13, "m": 3}))
    assert main(["exponents", "--config", str(config)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("p0=12.549")
    assert "N_m=12.8989795" in out

def test_exponents_output(capsys):
    assert main(["exponents", "--n", "10"]) == 0
    assert capsys.readouterr().out == "p0=inf p1=10\n"

def test_hardy_output(capsys):
    assert main(["hardy", "--model", "hyperbolic", "--n", "3", "--R", "1", "--trials", "20"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("H=1.9206")
    margin = float(out.split("worst_margin=")[1])
    assert margin >= -1e-10
