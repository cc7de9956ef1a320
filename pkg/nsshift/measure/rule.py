from abc import ABC, abstractmethod
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Tuple

from nsshift.exceptions import IterationBudgetExceeded
from nsshift.measure.factor import FAIR, Factor
from nsshift.utils import get_segment_budget


@dataclass(frozen=True)
class Block:
    lo: int
    hi: int
    factor: Factor

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("Block lo={} exceeds hi={}.".format(self.lo, self.hi))


class TailDescriptor(ABC):
    """
    Behaviour of a rule below its explicit blocks.

    Tails are laid out downwards from an index ``top``: ``segments(top)``
    yields maximal constant pieces (lo, hi, factor) in descending order,
    ``lo`` being None for a final infinite piece.
    """

    kind = None

    @abstractmethod
    def segments(self, top):
        pass

    @abstractmethod
    def factor_at(self, r, top):
        pass

    @abstractmethod
    def swap(self):
        pass

    def limit(self):
        """Limit factor at -infinity, None when there is none."""
        return None

    def validate(self):
        return True


@dataclass(frozen=True)
class EventuallyConstant(TailDescriptor):
    factor: Factor
    kind = "eventually-constant"

    def segments(self, top):
        yield None, top, self.factor

    def factor_at(self, r, top):
        return self.factor

    def swap(self):
        return EventuallyConstant(self.factor.swap())

    def limit(self):
        return self.factor


@dataclass(frozen=True)
class TwoAccumulationPoints(TailDescriptor):
    """
    Stage j (j = 0, 1, ...) is a plateau of plateau * ratio**j coordinates
    at ``low`` (even j) or ``high`` (odd j). When ``ramped`` each plateau is
    followed by a linear ramp of the same length towards the other value.
    """

    low: Factor
    high: Factor
    plateau: int = 1
    ratio: int = 2
    ramped: bool = True
    kind = "two-accumulation-points"

    def __post_init__(self):
        if self.low.p0 == self.high.p0:
            raise ValueError("Accumulation points must differ.")
        if self.plateau < 1 or self.ratio < 1:
            raise ValueError("plateau and ratio must be positive.")

    @property
    def gap(self):
        return abs(self.high.p0 - self.low.p0)

    def stage_length(self, j):
        return self.plateau * self.ratio ** j

    def stage_span(self, j):
        """Coordinates used by stage j, plateau plus ramp."""
        return self.stage_length(j) * (2 if self.ramped else 1)

    @property
    def period(self):
        """Length of one period when ratio == 1, else None."""
        if self.ratio != 1:
            return None
        return 2 * self.stage_span(0)

    def _values(self, j):
        return (self.low, self.high) if j % 2 == 0 else (self.high, self.low)

    def _ramp_factor(self, value, other, i, length):
        return Factor(value.p0 + (other.p0 - value.p0) * i / (length + 1))

    def stage_top(self, top, j):
        """Highest coordinate of stage j."""
        if self.ratio == 1:
            return top - j * self.stage_span(0)
        spent = self.plateau * (self.ratio ** j - 1) // (self.ratio - 1)
        return top - spent * (2 if self.ramped else 1)

    def segments(self, top):
        hi = top
        j = 0
        while True:
            length = self.stage_length(j)
            value, other = self._values(j)
            yield hi - length + 1, hi, value
            hi -= length
            if self.ramped:
                for i in range(1, length + 1):
                    yield hi, hi, self._ramp_factor(value, other, i, length)
                    hi -= 1
            j += 1

    def factor_at(self, r, top):
        depth = top - r
        if self.ratio == 1:
            depth %= self.period
        j = 0
        while True:
            length = self.stage_length(j)
            value, other = self._values(j)
            if depth < length:
                return value
            depth -= length
            if self.ramped:
                if depth < length:
                    return self._ramp_factor(value, other, depth + 1, length)
                depth -= length
            j += 1

    def swap(self):
        return TwoAccumulationPoints(
            self.low.swap(), self.high.swap(), self.plateau, self.ratio, self.ramped
        )


@dataclass(frozen=True)
class LevelParameterized(TailDescriptor):
    """
    Blocks of a level construction laid out below ``top``: for level u the
    lambda block [-N_u+1, -M_{u-1}] carries ``factors[u-1]`` and the block
    [-M_u+1, -N_u] carries ``fill``; below -M_T the declared limit applies.
    """

    levels: tuple
    factors: Tuple[Factor, ...]
    declared_limit: Factor = FAIR
    fill: Factor = FAIR
    m0: int = 1
    kind = "level-parameterized"

    def segments(self, top):
        offset = top + 1
        m_prev = self.m0
        for level, factor in zip(self.levels, self.factors):
            yield offset - level.N + 1, offset - m_prev, factor
            yield offset - level.M + 1, offset - level.N, self.fill
            m_prev = level.M
        yield None, offset - m_prev, self.declared_limit

    def factor_at(self, r, top):
        for lo, hi, factor in self.segments(top):
            if lo is None or r >= lo:
                return factor

    def swap(self):
        return LevelParameterized(
            self.levels,
            tuple(f.swap() for f in self.factors),
            self.declared_limit.swap(),
            self.fill.swap(),
            self.m0,
        )

    def limit(self):
        return self.declared_limit

    def validate(self):
        gaps = [abs(f.p0 - self.declared_limit.p0) for f in self.factors]
        return all(a > b for a, b in zip(gaps, gaps[1:]))


@dataclass(frozen=True)
class BlockRule:
    """
    Piecewise constant map from coordinates to factors: explicit contiguous
    blocks, ``pos_tail`` above them and ``neg_tail`` below them. Without
    blocks the positive tail starts at coordinate 0.
    """

    blocks: Tuple[Block, ...] = ()
    pos_tail: Factor = FAIR
    neg_tail: TailDescriptor = field(default_factory=lambda: EventuallyConstant(FAIR))

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        for a, b in zip(blocks, blocks[1:]):
            if a.hi + 1 != b.lo:
                raise ValueError(
                    "Blocks must be sorted and contiguous, got [{}, {}] then [{}, {}].".format(
                        a.lo, a.hi, b.lo, b.hi
                    )
                )

    @property
    def origin(self):
        """Lowest explicitly covered coordinate."""
        return self.blocks[0].lo if self.blocks else 0

    @property
    def top(self):
        """Highest explicitly covered coordinate."""
        return self.blocks[-1].hi if self.blocks else -1

    def factor_at(self, r):
        if r > self.top:
            return self.pos_tail
        if r < self.origin:
            return self.neg_tail.factor_at(r, self.origin - 1)
        i = bisect_right([b.lo for b in self.blocks], r) - 1
        return self.blocks[i].factor

    def swap(self):
        return BlockRule(
            tuple(Block(b.lo, b.hi, b.factor.swap()) for b in self.blocks),
            self.pos_tail.swap(),
            self.neg_tail.swap(),
        )

    def segments(self, lo, hi, budget=None):
        """
        Maximal constant pieces covering [lo, hi], ascending.

        Parameters
        ----------
        lo, hi: int or SparseInt
            Window bounds in rule coordinates, lo <= hi.
        budget: int
            Maximal number of pieces, defaults to get_segment_budget().

        Returns
        -------
        pieces: list[(int, int, Factor)]
        """
        budget = get_segment_budget() if budget is None else budget
        pieces = []

        def push(a, b, factor):
            a = lo if a is None or a < lo else a
            b = hi if b is None or b > hi else b
            if a > b:
                return
            if pieces and pieces[-1][2] == factor and pieces[-1][0] == b + 1:
                # descending tail output is reversed below, merge on the fly
                pieces[-1] = (a, pieces[-1][1], factor)
                return
            if len(pieces) >= budget:
                raise IterationBudgetExceeded(budget)
            pieces.append((a, b, factor))

        # tail pieces come out descending
        if lo < self.origin:
            for a, b, factor in self.neg_tail.segments(self.origin - 1):
                if b < lo:
                    break
                push(a, b, factor)
                if a is None or a <= lo:
                    break
        pieces.reverse()
        tail_pieces, pieces[:] = pieces[:], []
        for a, b, factor in tail_pieces:
            _append(pieces, a, b, factor, budget)
        for block in self.blocks:
            if block.hi < lo or block.lo > hi:
                continue
            _append(pieces, max(block.lo, lo), min(block.hi, hi), block.factor, budget)
        if hi > self.top:
            _append(pieces, max(self.top + 1, lo), hi, self.pos_tail, budget)
        return pieces


def _append(pieces, a, b, factor, budget):
    if pieces and pieces[-1][2] == factor and pieces[-1][1] + 1 == a:
        pieces[-1] = (pieces[-1][0], b, factor)
        return
    if len(pieces) >= budget:
        raise IterationBudgetExceeded(budget)
    pieces.append((a, b, factor))
