import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from semistable.error import DomainError

CSV_HEADER = ("lambda", "sup_u", "l1_norm", "lambda1", "newton_iters")
ESTIMATE_PREFIX = "# lambda_star_estimate="


def format_float(value: float) -> str:
    """Nine significant digits; infinities and NaN as 'inf', '-inf', 'nan'."""
    return format(float(value), ".9g")


@dataclass
class BranchPoint:
    lam: float
    u: Optional[np.ndarray]
    sup_u: float
    l1_norm: float
    lambda1: float = math.nan
    newton_iters: int = 0


@dataclass
class Branch:
    """Accepted points of the minimal branch, ordered by increasing lambda."""

    points: List[BranchPoint] = field(default_factory=list)
    lambda_star_estimate: float = math.nan
    fold_bracket: Tuple[float, float] = (math.nan, math.nan)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([p.lam for p in self.points])

    @property
    def sup_values(self) -> np.ndarray:
        return np.array([p.sup_u for p in self.points])

    @property
    def last(self) -> BranchPoint:
        if not self.points:
            raise DomainError("Branch has no accepted points")
        return self.points[-1]

    def rows(self) -> List[List[str]]:
        return [[format_float(p.lam), format_float(p.sup_u), format_float(p.l1_norm),
                 format_float(p.lambda1), str(int(p.newton_iters))] for p in self.points]


def format_branch_csv(branch: Branch) -> str:
    """The branch table followed by the lambda* comment line."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(branch.rows())
    buffer.write(f"{ESTIMATE_PREFIX}{format_float(branch.lambda_star_estimate)}\n")
    return buffer.getvalue()


def write_branch_csv(branch: Branch, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(format_branch_csv(branch))
    return path


def read_branch_csv(path: Union[str, Path]) -> Branch:
    """Read a branch table back; solution vectors are not stored and come back as None.

    Raises:
        DomainError: If the header does not match or a row is malformed
    """
    path = Path(path)
    points: List[BranchPoint] = []
    estimate = math.nan
    with path.open(newline="") as handle:
        lines = handle.read().splitlines()
    data = [line for line in lines if line and not line.startswith("#")]
    for line in lines:
        if line.startswith(ESTIMATE_PREFIX):
            estimate = float(line[len(ESTIMATE_PREFIX):])
    reader = csv.reader(data)
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise DomainError(f"{path}: expected header {','.join(CSV_HEADER)}, got {header}")
    for number, row in enumerate(reader, start=2):
        if len(row) != len(CSV_HEADER):
            raise DomainError(f"{path}:{number}: expected {len(CSV_HEADER)} fields, got {len(row)}")
        try:
            lam, sup_u, l1_norm, lambda1 = (float(x) for x in row[:4])
            iters = int(row[4])
        except ValueError as e:
            raise DomainError(f"{path}:{number}: {e}")
        points.append(BranchPoint(lam, None, sup_u, l1_norm, lambda1, iters))
    return Branch(points=points, lambda_star_estimate=estimate)
