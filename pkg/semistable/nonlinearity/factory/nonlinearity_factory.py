from typing import Optional

from semistable.factory_base.factory_base import FactoryBase
from semistable.geometry import RiemannianModel
from semistable.nonlinearity.classic import make_gelfand, make_power_classic
from semistable.nonlinearity.coupled import make_exp_model, make_power_model
from semistable.nonlinearity.factory.error import InvalidNonlinearityKindError, MissingExponentError
from semistable.nonlinearity.kinds import NonlinearityKind
from semistable.nonlinearity.nonlinearity import Nonlinearity

class NonlinearityFactory(FactoryBase[Nonlinearity]):
    def create_instance(self, kind: NonlinearityKind, model: RiemannianModel,
                        m: Optional[float] = None, permissive: bool = False) -> Nonlinearity:
        if kind in (NonlinearityKind.POWER_MODEL, NonlinearityKind.POWER_CLASSIC) and m is None:
            raise MissingExponentError(kind)
        if kind == NonlinearityKind.EXP_MODEL:
            return self._store(make_exp_model(model))
        elif kind == NonlinearityKind.POWER_MODEL:
            return self._store(make_power_model(model, m, permissive=permissive))
        elif kind == NonlinearityKind.GELFAND:
            return self._store(make_gelfand())
        elif kind == NonlinearityKind.POWER_CLASSIC:
            return self._store(make_power_classic(m))
        else:
            raise InvalidNonlinearityKindError(kind)
