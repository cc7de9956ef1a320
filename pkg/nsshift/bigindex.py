"""
Exact integers too large to store positionally.

A ``SparseInt`` is a finite sum of terms ``c * 2**e`` with Python ``int``
coefficients and exponents. Exponents themselves may have hundreds of bits,
so values such as ``3 * N * 2**(3 * N)`` with ``N ~ 2**744`` are exact.
Every arithmetic result is returned as a plain ``int`` whenever it fits in
``COLLAPSE_BITS`` bits, so code written for ``int`` keeps working.
"""
import math
from functools import total_ordering

COLLAPSE_BITS = 4096
# After normalisation every lower term is smaller than 2**(e_lead - MERGE_GAP).
MERGE_GAP = 64


def _strip(e, c):
    tz = (c & -c).bit_length() - 1
    return e + tz, c >> tz


def _is_normal(terms):
    if any(c == 0 or c & 1 == 0 for _, c in terms):
        return False
    return all(
        terms[i][0] - terms[i + 1][0] > MERGE_GAP + abs(terms[i + 1][1]).bit_length()
        for i in range(len(terms) - 1)
    )


def _normalize(terms):
    """Merge, sort and strip terms. Returns a list of (e, c) descending in e."""
    terms = [_strip(e, c) for e, c in terms if c != 0]
    while True:
        acc = {}
        for e, c in terms:
            acc[e] = acc.get(e, 0) + c
        items = sorted(((e, c) for e, c in acc.items() if c != 0), reverse=True)

        merged = []
        for e, c in items:
            if merged:
                e_hi, c_hi = merged[-1]
                if e_hi - e <= MERGE_GAP + abs(c).bit_length():
                    merged[-1] = (e, (c_hi << (e_hi - e)) + c)
                    continue
            merged.append((e, c))
        terms = [_strip(e, c) for e, c in merged if c != 0]
        if _is_normal(terms):
            return terms


def sparse(terms):
    """Build an exact integer from (exponent, coefficient) pairs."""
    terms = _normalize(list(terms))
    if not terms:
        return 0
    e, c = terms[0]
    if e + abs(c).bit_length() <= COLLAPSE_BITS:
        return sum(c << e for e, c in terms)
    return SparseInt(terms)


def _terms(x):
    if isinstance(x, SparseInt):
        return list(x.terms)
    if isinstance(x, int):
        return [(0, x)]
    raise TypeError("Unsupported operand type: {}".format(type(x).__name__))


def floor_log2(x):
    """floor(log2(x)) for a positive int or SparseInt."""
    if isinstance(x, SparseInt):
        return x.floor_log2()
    assert x > 0, "floor_log2 needs a positive argument."
    return x.bit_length() - 1


def is_big(x):
    return isinstance(x, SparseInt)


def log2_approx(x, shift=0):
    """
    Float log2(x) - shift for a positive int or SparseInt. The shift is
    taken off the exponent before rounding, so huge exponents cancel exactly.
    """
    if isinstance(x, SparseInt):
        e, c = x.terms[0]
        return float(e - shift) + math.log2(c)
    assert x > 0, "log2_approx needs a positive argument."
    return math.log2(x) - shift


@total_ordering
class SparseInt:
    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple(terms)

    @classmethod
    def power_of_two(cls, exponent, coefficient=1):
        return sparse([(exponent, coefficient)])

    def sign(self):
        # lower terms cannot overturn the leading one after normalisation
        return 1 if self.terms[0][1] > 0 else -1

    def floor_log2(self):
        assert self.sign() > 0, "floor_log2 needs a positive argument."
        e, c = self.terms[0]
        value = e + c.bit_length() - 1
        if c == 1 and len(self.terms) > 1 and self.terms[1][1] < 0:
            value -= 1
        return value

    def __add__(self, other):
        if not isinstance(other, (int, SparseInt)):
            return NotImplemented
        return sparse(_terms(self) + _terms(other))

    __radd__ = __add__

    def __neg__(self):
        return sparse((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        if not isinstance(other, (int, SparseInt)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (int, SparseInt)):
            return NotImplemented
        return sparse(
            (e1 + e2, c1 * c2) for e1, c1 in _terms(self) for e2, c2 in _terms(other)
        )

    __rmul__ = __mul__

    def __abs__(self):
        return self if self.sign() > 0 else -self

    def _cmp(self, other):
        diff = self - other
        if isinstance(diff, int):
            return (diff > 0) - (diff < 0)
        return diff.sign()

    def __eq__(self, other):
        if not isinstance(other, (int, SparseInt)):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other):
        if not isinstance(other, (int, SparseInt)):
            return NotImplemented
        return self._cmp(other) < 0

    def __hash__(self):
        return hash(self.terms)

    def __float__(self):
        return float("inf") if self.sign() > 0 else float("-inf")

    def __int__(self):
        raise OverflowError("SparseInt does not fit in a positional integer.")

    def to_pairs(self):
        """[[coefficient, exponent], ...] as decimal strings."""
        return [[str(c), str(e)] for e, c in self.terms]

    @classmethod
    def from_pairs(cls, pairs):
        return sparse((int(e), int(c)) for c, e in pairs)

    def __repr__(self):
        return "SparseInt({})".format(
            " + ".join("{}*2^{}".format(c, e) for e, c in self.terms)
        )
