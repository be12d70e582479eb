from semistable.factory_base.factory_base import FactoryBase
from semistable.geometry.factory.error import InvalidModelKindError
from semistable.geometry.kinds import ModelKind
from semistable.geometry.model import RiemannianModel, make_space_form

class GeometryFactory(FactoryBase[RiemannianModel]):
    def create_instance(self, kind: ModelKind, n: int, R: float) -> RiemannianModel:
        if kind == ModelKind.EUCLIDEAN:
            return self._store(make_space_form(ModelKind.EUCLIDEAN, n, R))
        elif kind == ModelKind.HYPERBOLIC:
            return self._store(make_space_form(ModelKind.HYPERBOLIC, n, R))
        elif kind == ModelKind.ELLIPTIC:
            return self._store(make_space_form(ModelKind.ELLIPTIC, n, R))
        # custom warping functions are built in code, not from a config
        raise InvalidModelKindError(kind)
