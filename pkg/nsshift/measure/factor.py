import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Factor:
    """A probability (p0, p1) on {0, 1}. p1 is stored implicitly as 1 - p0."""

    p0: float

    def __post_init__(self):
        p0 = float(self.p0)
        if not 0.0 <= p0 <= 1.0 or math.isnan(p0):
            raise ValueError("Factor p0 must be in [0, 1], got {!r}.".format(self.p0))
        object.__setattr__(self, "p0", p0)

    @property
    def p1(self):
        return 1.0 - self.p0

    def prob(self, symbol):
        return self.p0 if symbol == 0 else self.p1

    def swap(self):
        return Factor(self.p1)

    @property
    def degenerate(self):
        return self.p0 in (0.0, 1.0)

    @property
    def support(self):
        """Symbols of positive probability."""
        return frozenset(s for s in (0, 1) if self.prob(s) > 0)

    def __repr__(self):
        return "Factor({!r}, {!r})".format(self.p0, self.p1)


FAIR = Factor(0.5)


def factors_equivalent(p, q):
    """p and q charge the same symbols."""
    return p.support == q.support


def factor_affinity(p, q):
    """Hellinger affinity of two factors: sqrt(p0 q0) + sqrt(p1 q1)."""
    if p == q:
        return 1.0
    h = math.sqrt(p.p0 * q.p0) + math.sqrt(p.p1 * q.p1)
    return min(max(h, 0.0), 1.0)


def factor_distance_term(p, q):
    """(sqrt p0 - sqrt q0)^2 + (sqrt p1 - sqrt q1)^2, equal to 2 (1 - h)."""
    if p == q:
        return 0.0
    return (math.sqrt(p.p0) - math.sqrt(q.p0)) ** 2 + (
        math.sqrt(p.p1) - math.sqrt(q.p1)
    ) ** 2


def distance_term_constant(low, high):
    """
    C with factor_distance_term(p, q) <= C (p0 - q0)^2 for p0, q0 between
    low.p0 and high.p0.
    """
    m0 = min(low.p0, high.p0)
    m1 = min(low.p1, high.p1)
    if m0 <= 0.0 or m1 <= 0.0:
        return math.inf
    return 1.0 / (4.0 * m0) + 1.0 / (4.0 * m1)
