from enum import Enum

class NonlinearityKind(str, Enum):
    EXP_MODEL = "exp-model"
    POWER_MODEL = "power-model"
    GELFAND = "gelfand"
    POWER_CLASSIC = "power"
    CUSTOM = "custom"
