import math
import warnings
from fractions import Fraction

import pytest
import torch

from nsshift.dynamics import (
    PowerSpec,
    SamplePath,
    conservativity_sums,
    level_ledger,
    power_rn,
    rn_derivative_windowed,
    rn_lower_bound_check,
    sample_paths,
)


def _zeros(lo, hi):
    return SamplePath(lo, hi, torch.zeros(hi - lo + 1, dtype=torch.uint8))


def test_power_spec():
    spec = PowerSpec.parse("1,-3,2")
    assert spec.exponents == (1, -3, 2)
    assert spec.k == 3
    assert spec.L == 3
    with pytest.raises(ValueError):
        PowerSpec((1, 0))
    with pytest.raises(ValueError):
        PowerSpec(())


def test_power_rn_single_component(step, seed):
    w = sample_paths(step, (-5, 5), seed, 1)[0]
    assert power_rn(step, PowerSpec((1,)), 3, [w]) == pytest.approx(
        rn_derivative_windowed(step, 3, w)
    )


def test_power_rn_product(step):
    paths = [_zeros(-3, 3), _zeros(-3, 3)]
    value = power_rn(step, PowerSpec((1, 2)), 1, paths)
    assert math.exp(value) == pytest.approx(5.832)
    swapped = power_rn(step, PowerSpec((2, 1)), 1, paths)
    assert swapped == pytest.approx(value)
    assert power_rn(step, PowerSpec((1, -1)), 0, paths) == 0.0


def test_conservativity_fair(fair, seed):
    paths = sample_paths(fair, (-5, 5), seed, 1)
    report = conservativity_sums(fair, PowerSpec((1,)), paths, 50)
    expected = torch.arange(1, 51, dtype=torch.float64)
    assert torch.allclose(report.partial_sums, expected)
    assert report.ledger == ()


def test_conservativity_terms_match_power_rn(step, seed):
    spec = PowerSpec((1, -2))
    paths = sample_paths(step, (-30, 30), seed, 2)
    report = conservativity_sums(step, spec, paths, 10)
    for n in range(1, 11):
        assert report.log_terms[n - 1].item() == pytest.approx(
            power_rn(step, spec, n, paths), abs=1e-12
        )
    sums = report.partial_sums
    assert bool((sums[1:] >= sums[:-1]).all())


def test_ledger_level1(levels2):
    entry = level_ledger(levels2[:1], 1, 1)[0]
    assert entry.bound == Fraction(1, 16)
    assert entry.log2_bound == pytest.approx(-4.0)
    assert not entry.holds


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("L", [1, 2, 3, 4])
def test_ledger_level2(levels2, k, L):
    entry = level_ledger(levels2[1:], k, L)[0]
    assert entry.holds
    assert entry.bound >= Fraction(1, 2)


def test_ledger_level2_three_components(levels2):
    # m_2 covers 2**(2 N_2) only, so three components miss the bound
    entry = level_ledger(levels2[1:], 3, 1)[0]
    assert not entry.holds
    assert entry.log2_bound < -300


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ledger_level3(levels3, k):
    entry = level_ledger(levels3[2:], k, 4)[0]
    assert entry.holds
    assert entry.bound is None
    assert entry.log2_bound > 100


def test_conservativity_warns_on_level1(constructed2, seed):
    paths = sample_paths(constructed2, (-400, 10), seed, 1)
    with pytest.warns(RuntimeWarning):
        report = conservativity_sums(constructed2, PowerSpec((1,)), paths, 20)
    assert [entry.holds for entry in report.ledger] == [False, True]
    assert report.log_partial_sums.shape[0] == 20


def test_rn_lower_bound_check(constructed2, levels2, seed):
    w = sample_paths(constructed2, (-400, 10), seed, 1)[0]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        check = rn_lower_bound_check(constructed2, levels2, 1, 1, 3, w)
    assert check.log_bound == pytest.approx(-4 * math.log(2))
    assert check.holds == (check.log_rn >= check.log_bound)
    with pytest.raises(ValueError):
        rn_lower_bound_check(constructed2, levels2, 1, 1, 2, w)
