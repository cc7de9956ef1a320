from .scaled import ScaledExponent
from .epsilon import EpsilonPolicy
from .levels import (
    DEFAULT_DEPTH,
    LevelParams,
    a_max,
    build_levels,
    choose_n,
    verify_dyadic,
    verify_growth,
    verify_lambda_constraint,
    verify_levels,
    verify_minimal_n,
)
from .measure import level_factor, measure_from_levels
from .export import dump_levels, load_levels
