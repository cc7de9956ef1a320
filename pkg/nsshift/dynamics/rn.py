import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import torch

from nsshift.exceptions import Undecidable
from nsshift.dynamics.sampling import sample_symbols
from nsshift.measure.distance import (
    Diverges,
    kakutani_distance_exact,
    window_distance,
    window_log_affinity,
)
from nsshift.measure.product import factor_table, intersect_segments
from nsshift.operations import LogRatio
from nsshift.utils import binomial_tolerance, log_mean_exp


@dataclass(frozen=True)
class MeanRnReport:
    exact: Fraction
    exact_holds: bool
    mc_mean: Optional[float] = None
    mc_stderr: Optional[float] = None
    mc_holds: Optional[bool] = None
    tail_mass: Optional[float] = None


@dataclass(frozen=True)
class SqrtRnEstimate:
    estimate: float
    stderr: float
    target: float
    within: bool
    tail_mass: Optional[float] = None


def log_ratio_operator(P, n, window):
    """LogRatio of P o T^n against P on the window."""
    lo, hi = window
    numerator = factor_table(P.shift(n), lo, hi)
    denominator = factor_table(P, lo, hi)
    return LogRatio(numerator, denominator, lo)


def rn_derivative_windowed(P, n, w):
    """log of prod_{k in window} P_{k-n}(w_k) / P_k(w_k)."""
    op = log_ratio_operator(P, n, w.window)
    return float(op(w.symbols)[0])


def rn_derivative_batch(P, n, window, symbols):
    """Windowed log RN for a (batch, width) tensor of symbols."""
    return log_ratio_operator(P, n, window)(symbols)


def tail_distance_mass(P, n, window):
    """
    d(P, P o T^n) outside the window when the total is certified finite,
    inf when it diverges and None when it cannot be decided.
    """
    Q = P.shift(n)
    try:
        total = kakutani_distance_exact(P, Q)
    except Undecidable:
        return None
    if isinstance(total, Diverges):
        return math.inf
    inside = window_distance(P, Q, window[0], window[1])
    return max(total.value - inside, 0.0) + total.tail_bound


def exact_mean_rn(P, n, window):
    """
    E_P of the windowed derivative, prod_k sum_{b: P_k(b) > 0} P_{k-n}(b),
    evaluated in rationals.
    """
    lo, hi = window
    result = Fraction(1)
    for a, b, pushed, ref in intersect_segments(P.shift(n), P, lo, hi):
        if pushed == ref:
            continue
        p0 = Fraction(pushed.p0)
        mass = (p0 if ref.p0 > 0 else 0) + ((1 - p0) if ref.p1 > 0 else 0)
        result *= mass ** (b - a + 1)
    return result


def mean_rn_check(P, n, window, seed=None, count=0, sigmas=4.0):
    """
    E_P[(T^n)'] = 1 exactly by factorisation and, when ``count`` > 0, within
    ``sigmas`` standard errors by Monte Carlo.
    """
    exact = exact_mean_rn(P, n, window)
    report = dict(
        exact=exact, exact_holds=exact == 1, tail_mass=tail_distance_mass(P, n, window)
    )
    if count > 0:
        assert seed is not None, "Monte Carlo needs a seed."
        symbols = sample_symbols(P, window, seed, count)
        rn = torch.exp(rn_derivative_batch(P, n, window, symbols))
        mean = rn.mean().item()
        stderr = rn.std().item() / math.sqrt(count) if count > 1 else 0.0
        report.update(
            mc_mean=mean,
            mc_stderr=stderr,
            mc_holds=abs(mean - 1.0) <= max(sigmas * stderr, 1e-12),
        )
    return MeanRnReport(**report)


def sqrt_rn_estimator(P, n, window, seed, count, sigmas=4.0):
    """
    Monte Carlo mean of sqrt((T^n)') under P, an estimate of the affinity
    rho(P, P o T^n) restricted to the window.
    """
    symbols = sample_symbols(P, window, seed, count)
    half_log_rn = rn_derivative_batch(P, n, window, symbols) / 2
    estimate = math.exp(log_mean_exp(half_log_rn))
    values = torch.exp(half_log_rn)
    stderr = values.std().item() / math.sqrt(count) if count > 1 else 0.0
    target = math.exp(window_log_affinity(P, P.shift(n), window[0], window[1]))
    return SqrtRnEstimate(
        estimate=estimate,
        stderr=stderr,
        target=target,
        within=abs(estimate - target) <= max(sigmas * stderr, 1e-12),
        tail_mass=tail_distance_mass(P, n, window),
    )


def marginal_frequency_check(P, window, seed, count, sigmas=4.0):
    """Per-coordinate frequency of symbol 0 against p0 within binomial tolerance."""
    lo, hi = window
    symbols = sample_symbols(P, window, seed, count)
    frequency = (symbols == 0).to(torch.float64).mean(dim=0)
    p0 = factor_table(P, lo, hi)
    tolerance = torch.tensor(
        [binomial_tolerance(p, count, sigmas) for p in p0.tolist()], dtype=torch.float64
    )
    return bool(((frequency - p0).abs() <= tolerance + 1e-12).all()), frequency
