import logging
from typing import Generic, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")


class FactoryBase(Generic[T]):
    """Holds the model or nonlinearity built by the last ``create_instance`` call.

    Subclasses dispatch on their kind enum, assign ``self.instance`` and return it
    through ``_store`` so that every configured object is logged once.
    """

    def __init__(self):
        self.instance: Optional[T] = None

    def create_instance(self, *args, **kwargs) -> T:
        raise NotImplementedError

    def _store(self, instance: T) -> T:
        logger.debug("%s configured %r", type(self).__name__, instance)
        self.instance = instance
        return instance

    def get_instance(self) -> Optional[T]:
        return self.instance

    def reset_instance(self) -> None:
        self.instance = None

    def instance_exists(self) -> bool:
        return self.instance is not None
