from dataclasses import dataclass, field, replace

import torch

from nsshift.exceptions import IterationBudgetExceeded
from nsshift.measure.factor import FAIR, Factor
from nsshift.measure.rule import BlockRule, EventuallyConstant
from nsshift.utils import get_segment_budget


@dataclass(frozen=True)
class ProductMeasure:
    """
    Product measure on {0,1}^Z. ``shift_offset`` represents P o T^n without
    rewriting the rule: (P o T^n)_k = P_{k-n}.
    """

    rule: BlockRule = field(default_factory=BlockRule)
    shift_offset: int = 0

    def factor_at(self, k):
        return self.rule.factor_at(k - self.shift_offset)

    def shift(self, n):
        return replace(self, shift_offset=self.shift_offset + n)

    def swap_symbols(self):
        return replace(self, rule=self.rule.swap())

    @property
    def origin(self):
        return self.rule.origin + self.shift_offset

    @property
    def top(self):
        return self.rule.top + self.shift_offset

    def segments(self, lo, hi, budget=None):
        off = self.shift_offset
        return [
            (a + off, b + off, f)
            for a, b, f in self.rule.segments(lo - off, hi - off, budget)
        ]


def constant_measure(factor=FAIR):
    """Stationary product measure with every factor equal to ``factor``."""
    return ProductMeasure(BlockRule((), factor, EventuallyConstant(factor)))


def factor_at(P, k):
    return P.factor_at(k)


def shift(P, n):
    return P.shift(n)


def intersect_segments(P, Q, lo, hi, budget=None):
    """
    Common refinement of the constant pieces of P and Q over [lo, hi].

    Returns
    -------
    pieces: list[(a, b, Factor, Factor)]
        Ascending, a and b inclusive.
    """
    budget = get_segment_budget() if budget is None else budget
    left = P.segments(lo, hi, budget)
    right = Q.segments(lo, hi, budget)
    pieces = []
    i = j = 0
    start = lo
    while i < len(left) and j < len(right):
        end = min(left[i][1], right[j][1])
        if len(pieces) >= budget:
            raise IterationBudgetExceeded(budget)
        pieces.append((start, end, left[i][2], right[j][2]))
        start = end + 1
        if left[i][1] == end:
            i += 1
        if right[j][1] == end:
            j += 1
    return pieces


def factor_table(P, lo, hi):
    """
    p0 of every coordinate in [lo, hi] as a float64 tensor.

    Parameters
    ----------
    P: ProductMeasure
    lo, hi: int
        Window bounds, hi - lo + 1 values are materialised.
    """
    pieces = P.segments(lo, hi)
    values = torch.tensor([f.p0 for _, _, f in pieces], dtype=torch.float64)
    lengths = torch.tensor([b - a + 1 for a, b, _ in pieces], dtype=torch.int64)
    return torch.repeat_interleave(values, lengths)
