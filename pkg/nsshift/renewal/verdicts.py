from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Optional, Tuple

import numpy as np
import torch

from nsshift.renewal.functions import TailClass


class SeriesVerdict(Enum):
    DIVERGES = "Diverges"
    CONVERGES = "Converges"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Periodicity:
    """kind is "aperiodic", "period" or "unknown"."""

    kind: str
    period: Optional[int] = None
    witness: Tuple[int, ...] = ()


@dataclass(frozen=True)
class SeriesReport:
    verdict: SeriesVerdict
    partial_sums: torch.Tensor
    last_term: float
    tends_to_zero: Optional[bool] = None
    times: Tuple[float, ...] = ()

    @property
    def null_recurrent(self):
        return self.verdict is SeriesVerdict.DIVERGES and bool(self.tends_to_zero)


@dataclass(frozen=True)
class LogConvexity:
    holds: bool
    first_violation: Optional[int] = None


def _minimal_witness(support):
    """Inclusion-minimal subset of ``support`` with gcd 1."""
    chosen = []
    running = 0
    for n in support:
        if gcd(running, n) != running:
            chosen.append(n)
            running = gcd(running, n)
        if running == 1:
            break
    for n in list(chosen):
        rest = [x for x in chosen if x != n]
        if rest and np.gcd.reduce(rest) == 1:
            chosen = rest
    return tuple(int(n) for n in chosen)


def aperiodicity_check(u, horizon):
    """gcd of {1 <= n <= horizon : u_n > 0}."""
    assert horizon >= 1, "horizon must be positive."
    u = torch.as_tensor(u, dtype=torch.float64)[: horizon + 1]
    support = (torch.nonzero(u[1:] > 0).flatten() + 1).numpy()
    if support.size == 0:
        return Periodicity("unknown")
    d = int(np.gcd.reduce(support))
    if d == 1:
        return Periodicity("aperiodic", 1, _minimal_witness(support.tolist()))
    return Periodicity("period", d)


def _tail_verdict(tail_class):
    if tail_class is TailClass.LOG_POWER:
        return SeriesVerdict.DIVERGES
    elif tail_class is TailClass.SUMMABLE:
        return SeriesVerdict.CONVERGES
    return SeriesVerdict.INCONCLUSIVE


def null_recurrence_verdict(p, N):
    """
    Partial sums of p(n), n = 1..N, with the verdict on sum p(n) = inf read
    off the declared tail class. LogPower tails diverge by comparison with
    sum 1 / (log n)**k for every k.
    """
    assert N >= 1, "N must be positive."
    terms = p(torch.arange(1, N + 1, dtype=torch.float64))
    decreasing = bool((terms[1:] < terms[:-1]).all())
    return SeriesReport(
        verdict=_tail_verdict(p.tail_class),
        partial_sums=torch.cumsum(terms, 0),
        last_term=terms[-1].item(),
        tends_to_zero=decreasing if p.tail_class is not TailClass.CUSTOM else None,
    )


def pwm_criterion(p, times, N):
    """
    Partial sums of prod_j p(n |t_j|), n = 1..N. A LogPower tail makes each
    product comparable to (log n)**-(k exponent), so the series diverges for
    every finite k.
    """
    assert N >= 1, "N must be positive."
    times = tuple(abs(float(t)) for t in times)
    if not times:
        raise ValueError("pwm_criterion needs at least one time.")
    if any(t == 0 for t in times):
        raise ValueError("Times must be nonzero, got {}.".format(times))
    n = torch.arange(1, N + 1, dtype=torch.float64)
    terms = torch.ones(N, dtype=torch.float64)
    for t in times:
        terms = terms * p(n * t)
    return SeriesReport(
        verdict=_tail_verdict(p.tail_class),
        partial_sums=torch.cumsum(terms, 0),
        last_term=terms[-1].item(),
        times=times,
    )


def log_convexity_check(u, tolerance=0.0):
    """
    u_n**2 <= u_{n-1} u_{n+1} for all n. A log-convex u with u_0 = 1 has a
    nonnegative interarrival law.
    """
    u = torch.as_tensor(u, dtype=torch.float64)
    gap = u[1:-1] ** 2 - u[:-2] * u[2:]
    bad = torch.nonzero(gap > tolerance).flatten()
    if bad.numel():
        return LogConvexity(False, int(bad[0]) + 1)
    return LogConvexity(True)
