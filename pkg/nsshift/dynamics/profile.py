import math
from dataclasses import dataclass

import torch

from nsshift.exceptions import Undecidable
from nsshift.dynamics.rn import rn_derivative_batch
from nsshift.dynamics.sampling import sample_symbols
from nsshift.measure.distance import (
    Diverges,
    kakutani_distance_exact,
    kakutani_distance_truncated,
)
from nsshift.utils import nearest_rank

DEFAULT_PROFILE_WINDOW = 10000
DEFAULT_QUANTILES = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


@dataclass(frozen=True)
class ProfileEntry:
    """
    d(P, P o T^n) for one n. ``kind`` is "finite" or "diverges" for certified
    values and "truncated" for the lower bound d_N on the profile window.
    """

    n: int
    distance: float
    kind: str
    tail_bound: float = 0.0
    rho_upper: float = 1.0


@dataclass(frozen=True)
class QuantileRow:
    n: int
    quantiles: dict

    @property
    def median(self):
        return self.quantiles[0.5]


def profile_entry(P, n, window=DEFAULT_PROFILE_WINDOW):
    Q = P.shift(n)
    try:
        result = kakutani_distance_exact(P, Q)
    except Undecidable:
        d = kakutani_distance_truncated(P, Q, window)
        return ProfileEntry(n, d, "truncated", math.inf, math.exp(-d / 2))
    if isinstance(result, Diverges):
        return ProfileEntry(n, math.inf, result.kind, 0.0, 0.0)
    # -log h >= 1 - h = d / 2 on every coordinate
    return ProfileEntry(
        n, result.value, result.kind, result.tail_bound, math.exp(-result.value / 2)
    )


def zero_type_profile(P, n_list, window=DEFAULT_PROFILE_WINDOW):
    """
    Series of d(P, P o T^n) for n in ``n_list`` with the affinity bound
    rho <= exp(-d / 2). Zero type shows as d growing without bound.
    """
    return [profile_entry(P, n, window) for n in n_list]


def rn_tends_zero_diagnostic(P, n_list, window, seed, count, levels=DEFAULT_QUANTILES):
    """
    Nearest-rank quantiles of the windowed (T^n)' for each n, all n evaluated
    on the same ``count`` paths.
    """
    symbols = sample_symbols(P, window, seed, count)
    rows = []
    for n in n_list:
        rn, _ = torch.sort(torch.exp(rn_derivative_batch(P, n, window, symbols)))
        rows.append(QuantileRow(n, {q: nearest_rank(rn, q) for q in levels}))
    return rows
