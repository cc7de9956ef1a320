class NsShiftError(Exception):
    """Base class of every domain error raised by nsshift."""


class IterationBudgetExceeded(NsShiftError):
    def __init__(self, budget, what="block-intersection segments"):
        self.budget = budget
        super().__init__(
            "More than {} {} in the requested window.".format(budget, what)
        )


class Undecidable(NsShiftError):
    """Tail descriptors certify neither a finite nor an infinite distance."""

    def __init__(self, reason, partial_sum=None):
        self.reason = reason
        self.partial_sum = partial_sum
        super().__init__(reason)


class DegenerateFactor(NsShiftError):
    def __init__(self, index):
        self.index = index
        super().__init__(
            "Factor affinity vanishes at coordinate {}, -log rho is infinite.".format(
                index
            )
        )


class PrecisionExhausted(NsShiftError):
    def __init__(self, comparison, precision):
        self.comparison = comparison
        self.precision = precision
        super().__init__(
            "Comparison '{}' undecided at {} bits of precision.".format(
                comparison, precision
            )
        )


class ZeroDensity(NsShiftError):
    def __init__(self, index, symbol):
        self.index = index
        self.symbol = symbol
        super().__init__(
            "Symbol {} at coordinate {} has probability 0.".format(symbol, index)
        )


class WindowTooLarge(NsShiftError):
    def __init__(self, cells, budget):
        self.cells = cells
        self.budget = budget
        super().__init__(
            "Sampling {} symbols exceeds the budget of {}.".format(cells, budget)
        )


class InvalidRenewalSequence(NsShiftError):
    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(
            "Interarrival mass f_{} = {!r} is negative.".format(index, value)
        )
