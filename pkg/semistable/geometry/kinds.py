from enum import Enum

class ModelKind(str, Enum):
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"
    ELLIPTIC = "elliptic"
    CUSTOM = "custom"
