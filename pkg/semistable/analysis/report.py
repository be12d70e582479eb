import json
import math
from typing import Optional, Union

from pydantic import BaseModel, Field, field_serializer


def nine_digits(value: Optional[float]) -> Union[float, str, None]:
    """Round to 9 significant digits; infinities become the string 'inf'."""
    if value is None:
        return None
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(format(value, ".9g"))


class ExponentTable(BaseModel):
    p0: float = Field(..., description="Critical L^p exponent, may be infinite")
    p1: float = Field(..., description="Critical W^{1,p} exponent, may be infinite")
    N_m: Optional[float] = Field(None, description="Dimension threshold N(m) of the power family")

    @field_serializer("p0", "p1", "N_m")
    def serialize_floats(self, value):
        return nine_digits(value)


class ExtremalReport(BaseModel):
    lambda_star_numeric: float = Field(..., description="Fold estimate on the finest mesh")
    lambda_star_closed: float = Field(..., gt=0, description="Closed-form extremal parameter")
    max_pointwise_gap: float = Field(..., ge=0, description="max |u_lambda - u*| on [R/4, R]")
    weak_residual_of_closed_form: float = Field(..., ge=0, description="Weak residual of u* at lambda*")
    exponents: ExponentTable

    @field_serializer("lambda_star_numeric", "lambda_star_closed", "max_pointwise_gap",
                      "weak_residual_of_closed_form")
    def serialize_floats(self, value):
        return nine_digits(value)

    @property
    def relative_error(self) -> float:
        return abs(self.lambda_star_numeric - self.lambda_star_closed) / self.lambda_star_closed

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), indent=2)
