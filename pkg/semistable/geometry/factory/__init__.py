from .geometry_factory import GeometryFactory
from .error import InvalidModelKindError

__all__ = ['GeometryFactory', 'InvalidModelKindError']
