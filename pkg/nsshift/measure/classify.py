import warnings
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from nsshift.exceptions import Undecidable
from nsshift.measure.distance import (
    DEFAULT_TAIL_TOLERANCE,
    Diverges,
    kakutani_distance_exact,
    kakutani_distance_truncated,
)
from nsshift.measure.product import ProductMeasure, constant_measure
from nsshift.measure.rule import TwoAccumulationPoints

DIAGNOSTIC_WINDOW = 1000


class Verdict(Enum):
    NOT_NONSINGULAR = "NotNonsingular"
    EQUIVALENT_INVARIANT = "EquivalentInvariant"
    ZERO_TYPE = "ZeroType"
    DEGENERATE = "Degenerate"
    INCONCLUSIVE = "Inconclusive"


class ZeroTypeReason(Enum):
    SINGULAR_TO_LIMIT_PRODUCT = "SingularToLimitProduct"
    NO_LIMIT = "NoLimit"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    invariant: Optional[ProductMeasure] = None
    reason: Optional[ZeroTypeReason] = None
    certificate: object = None
    diagnostic: dict = field(default_factory=dict, compare=False, hash=False)

    def __str__(self):
        if self.reason is not None:
            return "{}({})".format(self.verdict.value, self.reason.value)
        return self.verdict.value


def _inconclusive(P, reason):
    partial = kakutani_distance_truncated(P, P.shift(1), DIAGNOSTIC_WINDOW)
    warnings.warn("Classification inconclusive: {}".format(reason), RuntimeWarning)
    return Classification(
        Verdict.INCONCLUSIVE,
        diagnostic=dict(
            reason=reason, window=DIAGNOSTIC_WINDOW, partial_shift_distance=partial
        ),
    )


def classify(P, tolerance=DEFAULT_TAIL_TOLERANCE):
    """
    Decide between an equivalent shift invariant product probability and
    the NS zero-type property.

    Parameters
    ----------
    P: ProductMeasure
    tolerance: float
        Target size of tail majorants in distance certificates.

    Returns
    -------
    classification: Classification
    """
    try:
        nonsingular = kakutani_distance_exact(P, P.shift(1), tolerance)
    except Undecidable as e:
        return _inconclusive(P, e.reason)
    if isinstance(nonsingular, Diverges):
        return Classification(Verdict.NOT_NONSINGULAR, certificate=nonsingular)

    tail = P.rule.neg_tail
    if not tail.validate():
        return _inconclusive(P, "tail descriptor {} fails validation".format(tail.kind))

    if isinstance(tail, TwoAccumulationPoints):
        q1, q2 = sorted((tail.low.p0, tail.high.p0))
        return Classification(
            Verdict.ZERO_TYPE,
            reason=ZeroTypeReason.NO_LIMIT,
            certificate=nonsingular,
            diagnostic=dict(liminf=q1, limsup=q2, alpha=(q2 - q1) / 4),
        )

    limit = tail.limit()
    if limit is None:
        return _inconclusive(P, "tail declares no limit")
    if limit.degenerate:
        return Classification(Verdict.DEGENERATE, diagnostic=dict(limit=limit.p0))

    Q = constant_measure(limit)
    try:
        distance = kakutani_distance_exact(P, Q, tolerance)
    except Undecidable as e:
        return _inconclusive(P, e.reason)
    if isinstance(distance, Diverges):
        return Classification(
            Verdict.ZERO_TYPE,
            reason=ZeroTypeReason.SINGULAR_TO_LIMIT_PRODUCT,
            certificate=distance,
            diagnostic=dict(limit=limit.p0),
        )
    return Classification(
        Verdict.EQUIVALENT_INVARIANT,
        invariant=Q,
        certificate=distance,
        diagnostic=dict(limit=limit.p0),
    )


def zero_type_lower_bound(P, N):
    """
    d_N(P, Q) for the limit product Q. For a measure singular to Q this
    bounds liminf_n d(P, P o T^n) from below.
    """
    limit = P.rule.neg_tail.limit()
    if limit is None:
        raise ValueError("Measure has no limit factor at -infinity.")
    return kakutani_distance_truncated(P, constant_measure(limit), N)
