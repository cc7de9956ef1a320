import math
from fractions import Fraction

import pytest
import torch

from nsshift import helpers
from nsshift.dynamics import (
    SamplePath,
    mean_rn_check,
    rn_derivative_batch,
    rn_derivative_windowed,
    sample_paths,
    shift_path,
    sqrt_rn_estimator,
)
from nsshift.dynamics.rn import exact_mean_rn, tail_distance_mass
from nsshift.dynamics.sampling import sample_symbols
from nsshift.exceptions import ZeroDensity
from nsshift.measure.product import factor_table

H_STEP = 0.894427190999916


def _path(lo, symbols):
    symbols = torch.tensor(symbols, dtype=torch.uint8)
    return SamplePath(lo, lo + symbols.shape[0] - 1, symbols)


def test_rn_step(step):
    w = _path(-3, [0, 0, 0, 0, 0, 0, 0])
    assert rn_derivative_windowed(step, 1, w) == pytest.approx(math.log(1.8))
    w = _path(-3, [0, 0, 0, 1, 0, 0, 0])
    assert rn_derivative_windowed(step, 1, w) == pytest.approx(math.log(0.2))
    assert rn_derivative_windowed(step, 0, w) == 0.0


def test_rn_zero_density():
    P = helpers.step(1.0)
    w = _path(-3, [0, 0, 0, 1, 0, 0, 0])
    with pytest.raises(ZeroDensity) as excinfo:
        rn_derivative_windowed(P, 1, w)
    assert excinfo.value.index == 0


def test_mean_rn_by_enumeration(step):
    # all 2**10 configurations of the window [-4, 5]
    width = 10
    codes = torch.arange(2 ** width).unsqueeze(1)
    symbols = ((codes >> torch.arange(width)) & 1).to(torch.uint8)
    p0 = factor_table(step, -4, 5)
    prob = torch.where(symbols == 0, p0, 1 - p0).prod(dim=1)
    rn = torch.exp(rn_derivative_batch(step, 3, (-4, 5), symbols))
    assert (prob * rn).sum().item() == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n", [-3, 1, 5])
def test_mean_rn_exact(step, constructed2, n):
    assert mean_rn_check(step, n, (-10, 10)).exact == 1
    assert mean_rn_check(constructed2, n, (-400, 10)).exact_holds


def test_mean_rn_monte_carlo(step, seed):
    report = mean_rn_check(step, 3, (-5, 5), seed, 100000)
    assert report.exact_holds
    assert report.mc_holds
    assert report.tail_mass == pytest.approx(0.0, abs=1e-12)


def test_mean_rn_singular_part():
    P = helpers.step(1.0)
    assert exact_mean_rn(P, -1, (-3, 3)) == Fraction(1, 2)
    assert not mean_rn_check(P, -1, (-3, 3)).exact_holds


def test_tail_distance_mass(step, two_point, fair):
    expected = pytest.approx(2 * 0.211145618, abs=1e-9)
    assert tail_distance_mass(step, 5, (-2, 2)) == expected
    assert tail_distance_mass(helpers.alternating(), 1, (-5, 5)) == math.inf
    assert tail_distance_mass(two_point, 1, (-10, 10)) > 0


def test_sqrt_rn_estimator(step, perturbed, seed):
    estimate = sqrt_rn_estimator(step, 0, (-3, 3), seed, 10)
    assert estimate.estimate == pytest.approx(1.0, abs=1e-15)
    assert estimate.within

    estimate = sqrt_rn_estimator(step, 5, (-2, 10), seed, 100000)
    assert estimate.target == pytest.approx(H_STEP ** 5)
    assert estimate.within

    estimate = sqrt_rn_estimator(perturbed, 1, (-3, 3), seed, 100000)
    assert estimate.target == pytest.approx(0.8)
    assert estimate.within


def test_sqrt_rn_estimator_matches_sample_mean(step, seed):
    estimate = sqrt_rn_estimator(step, 5, (-2, 10), seed, 5000)
    symbols = sample_symbols(step, (-2, 10), seed, 5000)
    values = torch.exp(rn_derivative_batch(step, 5, (-2, 10), symbols) / 2)
    assert estimate.estimate == pytest.approx(values.mean().item(), rel=1e-12)


@pytest.mark.parametrize("name", ["step", "perturbed"])
def test_cocycle(name, seed):
    P = helpers.measure_by_name(name)
    paths = sample_paths(P, (-15, 15), seed, 5)
    for w in paths:
        for n in range(-5, 6):
            for m in range(-5, 6):
                total = rn_derivative_windowed(P, n + m, w)
                split = rn_derivative_windowed(P, m, w) + rn_derivative_windowed(
                    P, n, shift_path(w, m)
                )
                assert total == pytest.approx(split, abs=1e-12)
