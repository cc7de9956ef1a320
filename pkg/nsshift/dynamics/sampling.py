from dataclasses import dataclass

import numpy as np
import torch

from nsshift.exceptions import WindowTooLarge
from nsshift.measure.product import factor_table
from nsshift.operations import BernoulliSampler
from nsshift.utils import get_max_cells


@dataclass(frozen=True, eq=False)
class SamplePath:
    """Symbols of w on the coordinates lo..hi, drawn with ``seed``."""

    lo: int
    hi: int
    symbols: torch.Tensor
    seed: int = None

    @property
    def window(self):
        return self.lo, self.hi

    @property
    def width(self):
        return self.hi - self.lo + 1

    def symbol_at(self, k):
        assert self.lo <= k <= self.hi, "Coordinate {} outside the window.".format(k)
        return int(self.symbols[k - self.lo])


def check_cells(cells):
    budget = get_max_cells()
    if cells > budget:
        raise WindowTooLarge(cells, budget)


def make_generator(seed):
    return torch.Generator().manual_seed(seed)


def _zigzag(x):
    return 2 * x if x >= 0 else -2 * x - 1


def coordinate_seed(seed, k):
    """64-bit seed of the stream for coordinate k, a function of (seed, k) only."""
    entropy = (_zigzag(seed), _zigzag(k))
    return int(np.random.SeedSequence(entropy).generate_state(1, np.uint64)[0])


def coordinate_generators(seed, lo, hi):
    return [make_generator(coordinate_seed(seed, k)) for k in range(lo, hi + 1)]


def sample_symbols(P, window, seed, count):
    """
    Symbols of ``count`` independent paths on the window.

    Returns
    -------
    symbols: torch.Tensor
        uint8 tensor of shape (count, width). Entry (i, k - lo) depends
        only on (seed, i, k), so a sub-window reproduces the same symbols.
    """
    lo, hi = window
    assert lo <= hi, "Window must be nonempty."
    assert count >= 1, "count must be positive."
    check_cells((hi - lo + 1) * count)
    sampler = BernoulliSampler(factor_table(P, lo, hi))
    return sampler(count, coordinate_generators(seed, lo, hi))


def sample_paths(P, window, seed, count):
    """Draw ``count`` paths of P restricted to the window."""
    lo, hi = window
    symbols = sample_symbols(P, window, seed, count)
    return [SamplePath(lo, hi, row, seed) for row in symbols]


def shift_path(w, m):
    """T^m w, known on the window moved by -m: (T^m w)_i = w_{i+m}."""
    return SamplePath(w.lo - m, w.hi - m, w.symbols, w.seed)
