import math
import os

import torch

from nsshift.bigindex import SparseInt

DEFAULT_MAX_PRECISION = 1 << 16
DEFAULT_SEGMENT_BUDGET = 1_000_000
DEFAULT_MAX_CELLS = 50_000_000


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(
            "Environment variable {}={!r} is not an integer.".format(name, value)
        )


def get_max_precision():
    """Maximum interval precision in bits, NSSHIFT_MAX_PRECISION."""
    return _env_int("NSSHIFT_MAX_PRECISION", DEFAULT_MAX_PRECISION)


def get_segment_budget():
    """Cap on block-intersection segments per sweep, NSSHIFT_SEGMENT_BUDGET."""
    return _env_int("NSSHIFT_SEGMENT_BUDGET", DEFAULT_SEGMENT_BUDGET)


def get_max_cells():
    """Sampling memory budget in symbols, NSSHIFT_MAX_CELLS."""
    return _env_int("NSSHIFT_MAX_CELLS", DEFAULT_MAX_CELLS)


def format_real(x):
    """17 significant digits, enough to round-trip a float64."""
    return "{:.17g}".format(x)


def index_to_float(x):
    """Float value of an int or SparseInt, +-inf when out of range."""
    if isinstance(x, SparseInt):
        return float(x)
    try:
        return float(x)
    except OverflowError:
        return math.inf if x > 0 else -math.inf


def format_index(x):
    """Decimal string of an int, or coefficient/exponent pairs of a SparseInt."""
    if isinstance(x, SparseInt):
        return {"sparse": x.to_pairs()}
    return str(x)


def parse_index(value):
    """Inverse of format_index."""
    if isinstance(value, dict):
        return SparseInt.from_pairs(value["sparse"])
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError("Cannot parse index from {!r}.".format(value))
    return int(value)


def nearest_rank(sorted_values, q):
    """
    Empirical quantile by the nearest-rank rule.

    Parameters
    ----------
    sorted_values: torch.Tensor
        One dimensional, ascending.
    q: float
        Quantile level in (0, 1].

    Returns
    -------
    value: float
    """
    assert 0 < q <= 1, "Quantile level must be in (0, 1]."
    n = sorted_values.shape[0]
    rank = max(1, math.ceil(q * n))
    return sorted_values[rank - 1].item()


def log_mean_exp(log_values):
    """log of the mean of exp(log_values), computed without overflow."""
    n = log_values.shape[0]
    return (torch.logsumexp(log_values, dim=0) - math.log(n)).item()


def binomial_tolerance(p, count, sigmas=4.0):
    """Half width of a sigmas-sigma band for a frequency estimated from count draws."""
    return sigmas * math.sqrt(max(p * (1.0 - p), 0.0) / count)
