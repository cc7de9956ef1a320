from .affinity import Affinity, DistanceTerm
from .log_ratio import LogRatio, PowerLogRatio
from .sampler import BernoulliSampler

__all__ = [
    "Affinity",
    "DistanceTerm",
    "LogRatio",
    "PowerLogRatio",
    "BernoulliSampler",
]
