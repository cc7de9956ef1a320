import math

import pytest

from nsshift.dynamics import rn_tends_zero_diagnostic, zero_type_profile
from nsshift.dynamics.profile import DEFAULT_QUANTILES
from nsshift.measure.debug import naive_distance

D_STEP = 0.211145618


def exact_rn_quantile(n, q):
    """
    Nearest-rank quantile of 1.8**Z * 0.2**(n - Z) with Z ~ Bin(n, 1/2), the
    law of the windowed derivative of the step measure under T^n.
    """
    cdf = 0.0
    for z in range(n + 1):
        cdf += math.comb(n, z) / 2 ** n
        if cdf >= q:
            return 1.8 ** z * 0.2 ** (n - z)
    return 1.8 ** n


def test_profile_fair(fair):
    for entry in zero_type_profile(fair, [1, 2, 3, 4]):
        assert entry.distance == 0.0
        assert entry.rho_upper == 1.0
        assert entry.kind == "finite"


def test_profile_step_linear(step):
    entries = zero_type_profile(step, [1, 2, 4, 8, 64])
    for entry in entries:
        assert entry.kind == "finite"
        assert entry.distance == pytest.approx(D_STEP * entry.n, abs=1e-8)
        assert entry.rho_upper == pytest.approx(math.exp(-entry.distance / 2))


def test_profile_construction(constructed2):
    entries = zero_type_profile(constructed2, range(1, 65))
    assert [entry.n for entry in entries] == list(range(1, 65))
    for entry in entries:
        assert entry.kind == "finite"
        expected = naive_distance(constructed2, constructed2.shift(entry.n), 500)
        assert entry.distance == pytest.approx(expected, abs=1e-10)


def test_profile_diverges(alternating):
    entry = zero_type_profile(alternating, [1])[0]
    assert entry.kind == "diverges"
    assert entry.distance == math.inf
    assert entry.rho_upper == 0.0


def test_profile_truncated(two_point):
    # plateaus within the segment budget are shorter than the shift
    entry = zero_type_profile(two_point, [100000], window=2000)[0]
    assert entry.kind == "truncated"
    assert entry.tail_bound == math.inf
    assert entry.distance > 0


def test_profile_two_point(two_point):
    entry = zero_type_profile(two_point, [1])[0]
    assert entry.kind == "finite"
    assert entry.tail_bound > 0


def test_quantiles_fair(fair, seed):
    rows = rn_tends_zero_diagnostic(fair, [1, 3], (-5, 5), seed, 1000)
    for row in rows:
        assert all(value == 1.0 for value in row.quantiles.values())


@pytest.mark.parametrize("n", [2, 4, 10])
def test_quantiles_step(step, seed, n):
    row = rn_tends_zero_diagnostic(step, [n], (-1, 10), seed, 100000)[0]
    assert row.median == pytest.approx(0.6 ** n, rel=1e-9)
    for q in DEFAULT_QUANTILES:
        assert row.quantiles[q] == pytest.approx(exact_rn_quantile(n, q), rel=1e-9)


def test_quantiles_deterministic(step, seed):
    a = rn_tends_zero_diagnostic(step, [1, 2], (-1, 3), seed, 500)
    b = rn_tends_zero_diagnostic(step, [1, 2], (-1, 3), seed, 500)
    assert a == b
