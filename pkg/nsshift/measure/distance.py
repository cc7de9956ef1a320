import math
from dataclasses import dataclass

import torch

from nsshift.exceptions import DegenerateFactor, Undecidable
from nsshift.measure.factor import (
    Factor,
    distance_term_constant,
    factor_affinity,
    factor_distance_term,
    factors_equivalent,
)
from nsshift.measure.product import intersect_segments
from nsshift.measure.rule import TwoAccumulationPoints
from nsshift.operations import Affinity, DistanceTerm
from nsshift.utils import get_segment_budget, index_to_float

_affinity = Affinity()
_distance_term = DistanceTerm()

DEFAULT_TAIL_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Finite:
    """d(P, Q) lies in [value, value + tail_bound]."""

    value: float
    tail_bound: float = 0.0
    kind = "finite"


@dataclass(frozen=True)
class DivergenceWitness:
    """Infinitely many coordinates beyond ``start`` contribute ``term`` each."""

    side: str
    start: object
    term: float
    description: str


@dataclass(frozen=True)
class Diverges:
    witness: DivergenceWitness
    kind = "diverges"


@dataclass(frozen=True)
class ProportionalityReport:
    distance: float
    neg_log_affinity: float
    c: float
    lower_holds: bool
    upper_holds: bool


@dataclass(frozen=True)
class AffinityCertificate:
    """rho(P, Q) == 0 exactly when ``zero``; otherwise rho <= upper."""

    zero: bool
    upper: float


def _piece_tensors(pieces):
    p0 = torch.tensor([p.p0 for _, _, p, _ in pieces], dtype=torch.float64)
    q0 = torch.tensor([q.p0 for _, _, _, q in pieces], dtype=torch.float64)
    lengths = torch.tensor(
        [index_to_float(b - a + 1) for a, b, _, _ in pieces], dtype=torch.float64
    )
    return p0, q0, lengths


def _weighted_sum(values, lengths, neutral):
    # zero terms on astronomically long pieces must not turn into nan
    zeros = torch.zeros_like(values)
    weighted = torch.where(values == neutral, zeros, values * lengths)
    return float(weighted.sum())


def window_distance(P, Q, lo, hi, budget=None):
    """Sum of distance terms over [lo, hi] by block intersections."""
    if lo > hi:
        return 0.0
    pieces = intersect_segments(P, Q, lo, hi, budget)
    p0, q0, lengths = _piece_tensors(pieces)
    return _weighted_sum(_distance_term(p0, q0), lengths, 0.0)


def window_log_affinity(P, Q, lo, hi, budget=None):
    """Sum of log factor affinities over [lo, hi], -inf when one vanishes."""
    if lo > hi:
        return 0.0
    pieces = intersect_segments(P, Q, lo, hi, budget)
    p0, q0, lengths = _piece_tensors(pieces)
    log_h = torch.log(_affinity(p0, q0))
    return _weighted_sum(log_h, lengths, 0.0)


def kakutani_distance_truncated(P, Q, N, budget=None):
    """d_N(P, Q): distance terms summed over coordinates -N..N."""
    assert N >= 0, "N must be nonnegative."
    return window_distance(P, Q, -N, N, budget)


def hellinger_affinity(P, Q, N, budget=None):
    """rho_N(P, Q): product of factor affinities over -N..N, in log space."""
    assert N >= 0, "N must be nonnegative."
    return math.exp(window_log_affinity(P, Q, -N, N, budget))


def proportionality_check(P, Q, N, budget=None):
    """
    Two-sided comparison d_N / 2 <= -log rho_N <= d_N / (2 c) with
    c = min_k h(P_k, Q_k) over the window.
    """
    assert N >= 0, "N must be nonnegative."
    pieces = intersect_segments(P, Q, -N, N, budget)
    p0, q0, lengths = _piece_tensors(pieces)
    h = _affinity(p0, q0)
    if bool((h == 0).any()):
        idx = int(torch.nonzero(h == 0)[0])
        raise DegenerateFactor(pieces[idx][0])
    c = float(h.min())
    d = _weighted_sum(_distance_term(p0, q0), lengths, 0.0)
    neg_log_rho = -_weighted_sum(torch.log(h), lengths, 0.0)
    slack = 1e-12 * max(1.0, d)
    return ProportionalityReport(
        distance=d,
        neg_log_affinity=neg_log_rho,
        c=c,
        lower_holds=d / 2 <= neg_log_rho + slack,
        upper_holds=neg_log_rho <= d / (2 * c) + slack,
    )


def _constant_below(P):
    """
    (index, factor) with P_k = factor for every k < index, or None when the
    negative tail never becomes constant.
    """
    tail = P.rule.neg_tail
    if isinstance(tail, TwoAccumulationPoints):
        return None
    *_, (lo, hi, factor) = tail.segments(P.rule.origin - 1)
    return hi + 1 + P.shift_offset, factor


class _FactorMismatch(Exception):
    def __init__(self, index, p, q):
        super().__init__(index)
        self.index = index
        self.p = p
        self.q = q

    def witness(self):
        return DivergenceWitness(
            "0",
            self.index,
            factor_distance_term(self.p, self.q),
            "{!r} and {!r} are not equivalent".format(self.p, self.q),
        )


def _certified_window(P, Q, lo, hi, budget, check):
    """window_distance over [lo, hi] after requiring check(P_k, Q_k) per piece."""
    if lo > hi:
        return 0.0
    pieces = intersect_segments(P, Q, lo, hi, budget)
    if check is not None:
        for a, _, p, q in pieces:
            if not check(p, q):
                raise _FactorMismatch(a, p, q)
    p0, q0, lengths = _piece_tensors(pieces)
    return _weighted_sum(_distance_term(p0, q0), lengths, 0.0)


def _exact_two_point(P, Q, hi_cut, tolerance, budget, check):
    tail = P.rule.neg_tail
    n = Q.shift_offset - P.shift_offset
    a = P.shift_offset
    top = P.rule.origin - 1
    span = abs(n)

    def window(lo, hi):
        return _certified_window(P, Q, lo, hi, budget, check)

    if tail.ratio == 1:
        period = tail.period
        if n % period == 0:
            return Finite(window(a + top - span + 1, hi_cut))
        deep = a + top - span - period
        per_period = window(deep - period + 1, deep)
        if per_period > 0:
            return Diverges(
                DivergenceWitness(
                    "-",
                    deep,
                    per_period,
                    "every period of {} coordinates".format(period),
                )
            )
        return Finite(window(deep + 1, hi_cut))

    if not tail.ramped:
        return Diverges(
            DivergenceWitness(
                "-",
                P.origin - 1,
                factor_distance_term(tail.low, tail.high),
                "each stage boundary with plateau length >= {}".format(span),
            )
        )

    c = distance_term_constant(tail.low, tail.high)
    ramp = Factor((tail.low.p0 + tail.high.p0) / 2)
    if check is not None and c == math.inf and not (
        check(tail.low, ramp) and check(tail.high, ramp)
    ):
        # a plateau meets ramp values in every stage
        return Diverges(
            DivergenceWitness(
                "-",
                P.origin - 1,
                factor_distance_term(tail.low, tail.high),
                "plateau and ramp factors are not equivalent",
            )
        )
    r = tail.ratio
    explicit_cap = budget // 16
    j = 0
    while True:
        majorant = (
            c * n * n * tail.gap ** 2 * r / ((r - 1) * tail.plateau * r ** j)
        )
        if tail.stage_length(j) >= span and majorant <= tolerance:
            break
        if top - tail.stage_top(top, j + 1) > explicit_cap:
            if tail.stage_length(j) < span:
                raise Undecidable(
                    "segment budget exhausted before plateaus reach the shift {}".format(n)
                )
            break
        j += 1
    lo = a + tail.stage_top(top, j) - span + 1
    return Finite(window(lo, hi_cut), majorant)


def _distance_certificate(P, Q, tolerance, budget, check):
    budget = get_segment_budget() if budget is None else budget
    if P == Q:
        return Finite(0.0, 0.0)

    hi_cut = max(P.top, Q.top)
    if P.rule.pos_tail != Q.rule.pos_tail:
        return Diverges(
            DivergenceWitness(
                "+",
                hi_cut + 1,
                factor_distance_term(P.rule.pos_tail, Q.rule.pos_tail),
                "every coordinate above the explicit blocks",
            )
        )

    below_p = _constant_below(P)
    below_q = _constant_below(Q)
    if below_p is not None and below_q is not None:
        (cut_p, f_p), (cut_q, f_q) = below_p, below_q
        lo_cut = min(cut_p, cut_q)
        if f_p != f_q:
            return Diverges(
                DivergenceWitness(
                    "-",
                    lo_cut - 1,
                    factor_distance_term(f_p, f_q),
                    "every coordinate below the structured region",
                )
            )
        value = _certified_window(P, Q, lo_cut, hi_cut, budget, check)
        return Finite(value, 0.0)

    if below_p is None and below_q is None:
        if P.rule != Q.rule:
            raise Undecidable(
                "two-accumulation tails of different rules cannot be compared"
            )
        return _exact_two_point(P, Q, hi_cut, tolerance, budget, check)

    # one oscillating tail against an eventually constant one
    tail = (P if below_p is None else Q).rule.neg_tail
    cut, constant = below_q if below_p is None else below_p
    term = max(
        factor_distance_term(tail.low, constant),
        factor_distance_term(tail.high, constant),
    )
    return Diverges(
        DivergenceWitness(
            "-", cut - 1, term, "plateaus of the accumulation point away from the limit"
        )
    )


def kakutani_distance_exact(P, Q, tolerance=DEFAULT_TAIL_TOLERANCE, budget=None):
    """
    d(P, Q) over all of Z, certified from the tail descriptors.

    Returns
    -------
    result: Finite or Diverges
        Finite(v, eps) means P ~ Q and d(P, Q) is in [v, v + eps]. Diverges
        means P and Q are not equivalent: either d(P, Q) is infinite or the
        witness (side "0") names a coordinate where P_k and Q_k charge
        different symbols.

    Raises
    ------
    Undecidable
        When the tails certify neither outcome.
    """
    try:
        return _distance_certificate(P, Q, tolerance, budget, factors_equivalent)
    except _FactorMismatch as e:
        return Diverges(e.witness())


def _positive_affinity(p, q):
    return factor_affinity(p, q) > 0


def affinity_certificate(P, Q, tolerance=DEFAULT_TAIL_TOLERANCE, budget=None):
    """rho(P, Q) = 0 exactly when some h_k vanishes or d(P, Q) diverges."""
    try:
        result = _distance_certificate(P, Q, tolerance, budget, _positive_affinity)
    except _FactorMismatch:
        return AffinityCertificate(zero=True, upper=0.0)
    if isinstance(result, Diverges):
        return AffinityCertificate(zero=True, upper=0.0)
    return AffinityCertificate(zero=False, upper=math.exp(-result.value / 2))
