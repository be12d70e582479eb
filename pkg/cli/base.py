from functools import wraps
from typing import Callable, TypeVar

from semistable.factory_base.factory_base import FactoryBase
from semistable.geometry.factory import GeometryFactory
from semistable.nonlinearity.factory import NonlinearityFactory
from cli.error import ConfigError

T = TypeVar('T')

# Configured problem singletons
_geometry_factory: GeometryFactory = GeometryFactory()
_nonlinearity_factory: NonlinearityFactory = NonlinearityFactory()

def with_instance(factory: FactoryBase):
    """Decorator factory that passes the factory's current instance as first argument"""
    def decorator(f: Callable[..., T]) -> Callable[..., T]:
        @wraps(f)
        def wrapper(*args, **kwargs) -> T:
            if not factory.instance_exists():
                raise ConfigError("Problem not configured. Call configure_problem first.")
            instance = factory.get_instance()
            return f(instance, *args, **kwargs)
        return wrapper
    return decorator

def reset_all():
    """Reset the model and nonlinearity singletons"""
    _geometry_factory.reset_instance()
    _nonlinearity_factory.reset_instance()
