import re
from dataclasses import dataclass
from fractions import Fraction

from nsshift.bigindex import floor_log2, sparse


@dataclass(frozen=True)
class EpsilonPolicy:
    """
    Positive summable sequence eps_t = ratio**t with 0 < ratio < 1.

    The default ratio 1/2 gives eps_t = 2**-t, for which every level
    exponent is computed from bit lengths alone.
    """

    ratio: Fraction = Fraction(1, 2)

    def __post_init__(self):
        ratio = Fraction(self.ratio)
        if not 0 < ratio < 1:
            raise ValueError("Epsilon ratio must lie in (0, 1), got {}.".format(ratio))
        object.__setattr__(self, "ratio", ratio)

    @property
    def dyadic(self):
        return self.ratio == Fraction(1, 2)

    @property
    def name(self):
        if self.dyadic:
            return "dyadic:2^-t"
        return "geometric:{}".format(self.ratio)

    def epsilon(self, t):
        return self.ratio ** t

    def total(self):
        """Sum over t >= 1, finite for every geometric policy."""
        return self.ratio / (1 - self.ratio)

    @classmethod
    def parse(cls, text):
        """Accepts ``dyadic:2^-t`` and ``geometric:p/q``."""
        if text in ("dyadic", "dyadic:2^-t"):
            return cls()
        match = re.fullmatch(r"geometric:(\d+)/(\d+)", text)
        if match is None:
            raise ValueError("Unknown epsilon policy {!r}.".format(text))
        return cls(Fraction(int(match.group(1)), int(match.group(2))))


def level_exponent(M_prev, eps):
    """
    k_t = floor(log2(M_{t-1} / eps_t)) + 1 in exact arithmetic.

    Parameters
    ----------
    M_prev: int or SparseInt
    eps: Fraction
        eps = p / q, the comparison is p * 2**e <= M_prev * q.
    """
    p, q = eps.numerator, eps.denominator
    if p == 1 and q & (q - 1) == 0:
        return floor_log2(M_prev) + q.bit_length()
    target = M_prev * q
    e = floor_log2(target) - floor_log2(p)
    while sparse([(e, p)]) > target:
        e -= 1
    while sparse([(e + 1, p)]) <= target:
        e += 1
    return e + 1


def lambda_constraint_holds(M_prev, k, eps):
    """M_{t-1} * 2**-k < eps, i.e. M_{t-1} * q < p * 2**k."""
    return M_prev * eps.denominator < sparse([(k, eps.numerator)])
