import math

import pytest
import torch

from nsshift.exceptions import ZeroDensity
from nsshift.operations import LogRatio, PowerLogRatio


@pytest.fixture
def ratio():
    # window [-1, 1], pushed measure differs at coordinate 0 only
    return LogRatio([0.9, 0.9, 0.5], [0.9, 0.5, 0.5], lo=-1)


def test_log_ratio(ratio):
    symbols = torch.tensor([[0, 0, 0], [1, 1, 1], [1, 0, 1]], dtype=torch.uint8)
    out = ratio(symbols)
    expected = torch.tensor(
        [math.log(1.8), math.log(0.2), math.log(1.8)], dtype=torch.float64
    )
    assert torch.allclose(out, expected, rtol=0, atol=1e-15)


def test_single_path(ratio):
    out = ratio(torch.tensor([1, 1, 0], dtype=torch.uint8))
    assert list(out.shape) == [1]


def test_zero_density():
    op = LogRatio([1.0, 0.5], [0.5, 0.5], lo=4)
    with pytest.raises(ZeroDensity) as excinfo:
        op(torch.tensor([[0, 0], [1, 0]], dtype=torch.uint8))
    assert excinfo.value.index == 4
    assert excinfo.value.symbol == 1


def test_degenerate_agreement_is_neutral():
    op = LogRatio([1.0, 0.0], [1.0, 0.0])
    out = op(torch.tensor([[0, 1]], dtype=torch.uint8))
    assert out.item() == 0.0


def test_multi_shift_numerator():
    num = torch.tensor([[0.5, 0.5], [0.9, 0.5], [0.9, 0.9]], dtype=torch.float64)
    op = LogRatio(num, [0.5, 0.5])
    out = op(torch.tensor([0, 0], dtype=torch.uint8))
    expected = torch.tensor(
        [0.0, math.log(1.8), 2 * math.log(1.8)], dtype=torch.float64
    )
    assert torch.allclose(out, expected)


def test_power_log_ratio(ratio):
    symbols = torch.tensor([[0, 0, 0]], dtype=torch.uint8)
    op = PowerLogRatio([ratio, ratio, ratio])
    out = op(symbols, symbols, symbols)
    assert out.item() == pytest.approx(3 * math.log(1.8))
    with pytest.raises(AssertionError):
        op(symbols)
