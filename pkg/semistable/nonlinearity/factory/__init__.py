from .nonlinearity_factory import NonlinearityFactory
from .error import InvalidNonlinearityKindError, MissingExponentError

__all__ = ['NonlinearityFactory', 'InvalidNonlinearityKindError', 'MissingExponentError']
