"""Reaction terms f and their derivatives."""
from .kinds import NonlinearityKind
from .nonlinearity import Nonlinearity
from .classic import (
    GelfandClassic, PowerClassic, CustomNonlinearity, make_gelfand, make_power_classic, make_custom,
)
from .coupled import ExpModel, PowerModel, make_exp_model, make_power_model
from .error import ValidityError

__all__ = [
    'NonlinearityKind',
    'Nonlinearity',
    'GelfandClassic',
    'PowerClassic',
    'CustomNonlinearity',
    'ExpModel',
    'PowerModel',
    'make_gelfand',
    'make_power_classic',
    'make_custom',
    'make_exp_model',
    'make_power_model',
    'ValidityError',
]
