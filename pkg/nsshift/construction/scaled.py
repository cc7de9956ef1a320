"""
Exact positive reals of the form 2**a * exp(b * 2**-k).

Their logarithms are log forms ``alpha * ln 2 + beta`` with rational
coefficients. Because ln 2 is irrational such a form vanishes only when
both coefficients do, so the sign of a difference is decided by refining an
interval enclosure of ln 2 until it excludes zero.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

import mpmath
from mpmath import iv

from nsshift.exceptions import PrecisionExhausted
from nsshift.utils import get_max_precision

INITIAL_PRECISION = 64


@dataclass(frozen=True)
class LogForm:
    """alpha * ln 2 + beta."""

    alpha: Fraction
    beta: Fraction

    def __add__(self, other):
        return LogForm(self.alpha + other.alpha, self.beta + other.beta)

    def __sub__(self, other):
        return LogForm(self.alpha - other.alpha, self.beta - other.beta)

    def scale(self, factor):
        factor = Fraction(factor)
        return LogForm(self.alpha * factor, self.beta * factor)

    def proportional_to(self, other):
        return self.alpha * other.beta == other.alpha * self.beta

    def enclosure(self, precision):
        """Interval containing the value, computed at ``precision`` bits."""
        old = iv.prec
        iv.prec = precision
        try:
            alpha = iv.mpf(self.alpha.numerator) / iv.mpf(self.alpha.denominator)
            beta = iv.mpf(self.beta.numerator) / iv.mpf(self.beta.denominator)
            return alpha * iv.ln(iv.mpf(2)) + beta
        finally:
            iv.prec = old


def _sign(x):
    return (x > 0) - (x < 0)


def required_precision(form):
    """Bits at which an enclosure of ``form`` can be expected to exclude zero."""
    size = max(
        abs(form.alpha.numerator).bit_length(),
        form.alpha.denominator.bit_length(),
        abs(form.beta.numerator).bit_length(),
        form.beta.denominator.bit_length(),
    )
    return size + INITIAL_PRECISION


def sign_of(form, comparison="log form sign"):
    """
    Exact sign of a log form.

    Raises
    ------
    PrecisionExhausted
        When the enclosure still contains zero at NSSHIFT_MAX_PRECISION bits.
    """
    if form.alpha == 0:
        return _sign(form.beta)
    if form.beta == 0:
        return _sign(form.alpha)
    max_precision = get_max_precision()
    if required_precision(form) > 2 * max_precision:
        raise PrecisionExhausted(comparison, max_precision)
    precision = INITIAL_PRECISION
    while precision <= max_precision:
        value = form.enclosure(precision)
        if value > 0:
            return 1
        if value < 0:
            return -1
        precision *= 2
    raise PrecisionExhausted(comparison, max_precision)


def compare_log_forms(x, y, comparison="log form comparison"):
    """-1, 0 or 1 as x <, ==, > y."""
    return sign_of(x - y, comparison)


@total_ordering
@dataclass(frozen=True, eq=False)
class ScaledExponent:
    """2**a * exp(b * 2**-k), kept with b odd or k == 0."""

    a: int
    b: int
    k: int

    def __post_init__(self):
        assert self.k >= 0, "k must be nonnegative."
        a, b, k = self.a, self.b, self.k
        if b == 0:
            k = 0
        elif k > 0:
            tz = min((b & -b).bit_length() - 1, k)
            b, k = b >> tz, k - tz
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "k", k)

    @classmethod
    def one(cls):
        return cls(0, 0, 0)

    def as_tuple(self):
        return self.a, self.b, self.k

    def log_form(self):
        """ln of the value; materialises 2**k, check ``k`` first when it may be huge."""
        max_precision = get_max_precision()
        if self.k > 2 * max_precision:
            raise PrecisionExhausted("log form of {!r}".format(self), max_precision)
        return LogForm(Fraction(self.a), Fraction(self.b, 1 << self.k))

    def log_value(self):
        """Float approximation of ln of the value."""
        x = self.a * mpmath.ln2 + mpmath.ldexp(mpmath.mpf(self.b), -self.k)
        return float(x)

    def __mul__(self, other):
        if not isinstance(other, ScaledExponent):
            return NotImplemented
        k = max(self.k, other.k)
        b = (self.b << (k - self.k)) + (other.b << (k - other.k))
        return ScaledExponent(self.a + other.a, b, k)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return ScaledExponent(self.a * n, self.b * n, self.k)

    def __eq__(self, other):
        if not isinstance(other, ScaledExponent):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __lt__(self, other):
        if not isinstance(other, ScaledExponent):
            return NotImplemented
        if self == other:
            return False
        comparison = "{!r} < {!r}".format(self, other)
        return compare_log_forms(self.log_form(), other.log_form(), comparison) < 0

    def __repr__(self):
        return "ScaledExponent(a={}, b={}, k={})".format(self.a, self.b, self.k)
