__version__ = "0.1.0"

from .measure import (
    ProductMeasure,
    classify,
    hellinger_affinity,
    kakutani_distance_exact,
    kakutani_distance_truncated,
)
from .construction import build_levels, measure_from_levels
