from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import List, Optional
from semistable.geometry import ModelKind
from semistable.nonlinearity import NonlinearityKind

POWER_KINDS = (NonlinearityKind.POWER_MODEL, NonlinearityKind.POWER_CLASSIC)

class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    model: Optional[ModelKind] = Field(
        default=None,
        description="Space form of the ball",
        examples=["hyperbolic"]
    )
    n: Optional[int] = Field(
        default=None,
        ge=2,
        description="Dimension of the manifold"
    )
    R: Optional[float] = Field(
        default=None,
        gt=0,
        description="Geodesic radius of the ball"
    )
    f: Optional[NonlinearityKind] = Field(
        default=None,
        description="Nonlinearity family",
        examples=["exp-model"]
    )
    m: Optional[float] = Field(
        default=None,
        gt=1,
        description="Exponent of the power families"
    )
    N: int = Field(
        default=1024,
        ge=2,
        description="Number of mesh cells"
    )
    ladder: Optional[List[int]] = Field(
        default=None,
        description="Strictly increasing list of mesh sizes for refinement studies"
    )
    newton_tol: float = Field(default=1e-10, gt=0)
    eig_tol: float = Field(default=1e-10, gt=0)
    lambda_step0: Optional[float] = Field(
        default=None,
        gt=0,
        description="Initial continuation step, 0.05 n when omitted"
    )
    trials: int = Field(default=200, ge=1, description="Random test functions for the Hardy check")
    seed: int = Field(default=0, ge=0)
    jobs: int = Field(default=1, ge=1, description="Worker threads across ladder meshes")
    output: Optional[str] = Field(default=None, description="Output file; stdout when omitted")
    input: Optional[str] = Field(default=None, description="Branch CSV read by the stability command")

    @model_validator(mode="after")
    def check_consistency(self) -> "RunConfig":
        if self.ladder is not None:
            if not self.ladder or any(N < 2 for N in self.ladder):
                raise ValueError("ladder entries must be at least 2")
            if any(b <= a for a, b in zip(self.ladder, self.ladder[1:])):
                raise ValueError("ladder must be strictly increasing")
        if self.f in POWER_KINDS and self.m is None:
            raise ValueError(f"nonlinearity '{self.f.value}' needs an exponent m")
        return self
