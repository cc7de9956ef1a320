from .factor import (
    FAIR,
    Factor,
    factor_affinity,
    factor_distance_term,
    factors_equivalent,
)
from .rule import (
    Block,
    BlockRule,
    EventuallyConstant,
    LevelParameterized,
    TwoAccumulationPoints,
)
from .product import ProductMeasure, constant_measure, factor_at, shift
from .distance import (
    Diverges,
    Finite,
    affinity_certificate,
    hellinger_affinity,
    kakutani_distance_exact,
    kakutani_distance_truncated,
    proportionality_check,
)
from .classify import Classification, Verdict, ZeroTypeReason, classify
from .classify import zero_type_lower_bound
from .attribute import dump_measure, load_measure
