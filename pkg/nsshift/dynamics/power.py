import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import torch

from nsshift.bigindex import is_big, log2_approx, sparse
from nsshift.dynamics.rn import log_ratio_operator, rn_derivative_windowed
from nsshift.dynamics.sampling import check_cells
from nsshift.measure.product import factor_table
from nsshift.measure.rule import LevelParameterized
from nsshift.operations import LogRatio, PowerLogRatio


@dataclass(frozen=True)
class PowerSpec:
    """Exponents l_1..l_k of the product T^{l_1} x ... x T^{l_k}."""

    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(l) for l in self.exponents)
        if not exponents:
            raise ValueError("PowerSpec needs at least one exponent.")
        if any(l == 0 for l in exponents):
            raise ValueError("Exponents must be nonzero, got {}.".format(exponents))
        object.__setattr__(self, "exponents", exponents)

    @property
    def k(self):
        return len(self.exponents)

    @property
    def L(self):
        return max(abs(l) for l in self.exponents)

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(x) for x in text.split(",")))


@dataclass(frozen=True)
class LedgerEntry:
    """
    (m_t / L - N_t) 2**(-k N_t - 1) for one level; ``bound`` is exact when
    it fits a Fraction, ``log2_bound`` is always set.
    """

    t: int
    k: int
    L: int
    bound: Optional[Fraction]
    log2_bound: float
    holds: bool


@dataclass(frozen=True)
class ConservativityReport:
    log_terms: torch.Tensor
    log_partial_sums: torch.Tensor
    ledger: Tuple[LedgerEntry, ...]

    @property
    def partial_sums(self):
        return torch.exp(self.log_partial_sums)


@dataclass(frozen=True)
class RnBoundCheck:
    t: int
    k: int
    n: int
    log_rn: float
    log_bound: float
    holds: bool


def power_rn(P, spec, n, paths):
    """
    log S^{n'}(w_1..w_k) = sum_i log T^{(l_i n)'}(w_i), one path per
    component.
    """
    assert len(paths) == spec.k, "Expected {} paths, got {}.".format(spec.k, len(paths))
    op = PowerLogRatio(
        [log_ratio_operator(P, l * n, w.window) for l, w in zip(spec.exponents, paths)]
    )
    return float(op(*[w.symbols for w in paths])[0])


def _multi_shift_operator(P, l, N, w):
    """LogRatio with one numerator row per n = 1..N for the shift l * n."""
    reach = abs(l) * N
    check_cells(N * w.width + w.width + 2 * reach)
    table = factor_table(P, w.lo - reach, w.hi + reach)
    shifts = torch.arange(1, N + 1, dtype=torch.int64) * l
    # P_{k - s} for k in the window sits at table[k - s - (lo - reach)]
    index = reach - shifts.unsqueeze(1) + torch.arange(w.width).unsqueeze(0)
    numerator = table[index]
    denominator = table[reach : reach + w.width]
    return LogRatio(numerator, denominator, w.lo)


def level_ledger(levels, k, L):
    """
    Lower bound (m_t / L - N_t) 2**(-k N_t - 1) of the conservativity sums
    over N_t <= n <= m_t / L, with its >= 1/2 check done on integers:
    m_t - L N_t >= L 2**(k N_t).
    """
    entries = []
    for level in levels:
        m, N = level.m, level.N
        numerator = m - L * N
        holds = numerator >= sparse([(k * N, L)])
        if numerator <= 0:
            entries.append(LedgerEntry(level.t, k, L, None, -math.inf, False))
            continue
        bound = None
        if not is_big(numerator) and k * N < 4096:
            bound = Fraction(numerator, L * 2 ** (k * N + 1))
        log2_bound = log2_approx(numerator, k * N + 1) - math.log2(L)
        entries.append(LedgerEntry(level.t, k, L, bound, log2_bound, holds))
    return entries


def conservativity_sums(P, spec, paths, N, levels=None):
    """
    Partial sums sum_{n=1}^{j} S^{n'}(x) for j = 1..N, in log space, and
    the level ledger for the construction levels found in P or passed in.
    """
    assert N >= 1, "N must be positive."
    assert len(paths) == spec.k, "Expected {} paths, got {}.".format(spec.k, len(paths))
    op = PowerLogRatio(
        [_multi_shift_operator(P, l, N, w) for l, w in zip(spec.exponents, paths)]
    )
    log_terms = op(*[w.symbols for w in paths])
    log_partial_sums = torch.logcumsumexp(log_terms, dim=0)

    if levels is None and isinstance(P.rule.neg_tail, LevelParameterized):
        levels = P.rule.neg_tail.levels
    ledger = tuple(level_ledger(levels or (), spec.k, spec.L))
    for entry in ledger:
        if not entry.holds:
            warnings.warn(
                "Conservativity bound at level {} is 2^{:.4g} < 1/2 (k={}, L={}).".format(
                    entry.t, entry.log2_bound, entry.k, entry.L
                ),
                RuntimeWarning,
            )
    return ConservativityReport(log_terms, log_partial_sums, ledger)


def rn_lower_bound_check(P, levels, t, k, n, w):
    """
    T^{n'}(w) >= 2**(-N_t - 1/k) for N_t <= |n| < m_t, reported with a
    RuntimeWarning when violated.
    """
    level = levels[t - 1]
    if not level.N <= abs(n) < level.m:
        raise ValueError(
            "|n| = {} outside [N_t, m_t) = [{}, {}) at level {}.".format(
                abs(n), level.N, level.m, t
            )
        )
    log_rn = rn_derivative_windowed(P, n, w)
    log_bound = -(level.N + 1.0 / k) * math.log(2)
    holds = log_rn >= log_bound
    if not holds:
        warnings.warn(
            "RN bound fails at level {} for n={}: log T' = {:.6g} < {:.6g}.".format(
                t, n, log_rn, log_bound
            ),
            RuntimeWarning,
        )
    return RnBoundCheck(t, k, n, log_rn, log_bound, holds)
