from fractions import Fraction

import mpmath
import pytest

from nsshift.construction.scaled import (
    LogForm,
    ScaledExponent,
    compare_log_forms,
    sign_of,
)
from nsshift.exceptions import PrecisionExhausted


@pytest.fixture
def tight_b():
    # b / 2**200 just below ln 2
    with mpmath.workprec(400):
        return int(mpmath.floor(mpmath.ln2 * 2 ** 200))


def test_normalization():
    assert ScaledExponent(0, 4, 3) == ScaledExponent(0, 1, 1)
    assert ScaledExponent(0, 4, 3).as_tuple() == (0, 1, 1)
    assert ScaledExponent(3, 0, 9).as_tuple() == (3, 0, 0)
    assert ScaledExponent(0, 12, 1).as_tuple() == (0, 6, 0)
    assert hash(ScaledExponent(0, 4, 3)) == hash(ScaledExponent(0, 1, 1))
    with pytest.raises(AssertionError):
        ScaledExponent(0, 1, -1)


def test_mul_pow():
    x = ScaledExponent(1, 1, 2)
    y = ScaledExponent(2, 3, 4)
    assert x * y == ScaledExponent(3, 7, 4)
    assert x ** 4 == ScaledExponent(4, 1, 0)
    assert ScaledExponent(0, 1, 5) ** 355 == ScaledExponent(0, 355, 5)
    assert ScaledExponent.one() * x == x


@pytest.mark.parametrize(
    "smaller, larger",
    [
        (ScaledExponent(0, 22, 5), ScaledExponent(1, 0, 0)),
        (ScaledExponent(1, 0, 0), ScaledExponent(0, 23, 5)),
        (ScaledExponent.one(), ScaledExponent(0, 1, 737)),
        (ScaledExponent(0, 1, 737), ScaledExponent(0, 1, 5)),
        (ScaledExponent(-3, 0, 0), ScaledExponent(0, -1, 1)),
    ],
)
def test_ordering(smaller, larger):
    assert smaller < larger
    assert larger > smaller
    assert not larger < smaller
    assert smaller != larger


def test_sign_of():
    assert sign_of(LogForm(Fraction(1), Fraction(0))) == 1
    assert sign_of(LogForm(Fraction(0), Fraction(-1, 3))) == -1
    assert sign_of(LogForm(Fraction(0), Fraction(0))) == 0
    # 2 ln 2 - 1.386 > 0 and 2 ln 2 - 1.387 < 0
    assert sign_of(LogForm(Fraction(2), Fraction(-1386, 1000))) == 1
    assert sign_of(LogForm(Fraction(2), Fraction(-1387, 1000))) == -1
    x = LogForm(Fraction(1), Fraction(1, 7))
    assert compare_log_forms(x, x) == 0


def test_close_comparison(tight_b):
    close = ScaledExponent(0, tight_b, 200)
    assert close < ScaledExponent(1, 0, 0)
    assert ScaledExponent(0, tight_b + 1, 200) > ScaledExponent(1, 0, 0)


def test_precision_exhausted(monkeypatch, tight_b):
    monkeypatch.setenv("NSSHIFT_MAX_PRECISION", "64")
    with pytest.raises(PrecisionExhausted):
        ScaledExponent(0, tight_b, 200) < ScaledExponent(1, 0, 0)


def test_log_value():
    assert ScaledExponent(1, 0, 0).log_value() == pytest.approx(0.6931471805599453)
    assert ScaledExponent(0, 1, 5).log_value() == 1 / 32
    expected = 2 * 0.6931471805599453 + 355 / 32
    assert ScaledExponent(2, 355, 5).log_value() == pytest.approx(expected)
