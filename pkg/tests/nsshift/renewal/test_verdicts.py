import math

import pytest
import torch

from nsshift.renewal import (
    SeriesVerdict,
    aperiodicity_check,
    geometric_renewal,
    log_convexity_check,
    log_renewal,
    null_recurrence_verdict,
    pwm_criterion,
    renewal_sequence,
    table_renewal,
)


def test_aperiodic_log():
    result = aperiodicity_check(renewal_sequence(log_renewal(), 10), 10)
    assert result.kind == "aperiodic"
    assert result.period == 1
    assert result.witness == (1,)


def test_periodic():
    u = torch.tensor([1.0, 0.0, 0.5, 0.0, 0.25, 0.0, 0.1], dtype=torch.float64)
    result = aperiodicity_check(u, 6)
    assert result.kind == "period"
    assert result.period == 2


def test_minimal_witness():
    u = torch.zeros(11, dtype=torch.float64)
    u[0] = 1.0
    u[[4, 6, 9]] = 0.3
    result = aperiodicity_check(u, 10)
    assert result.kind == "aperiodic"
    assert result.witness == (4, 9)
    assert math.gcd(*result.witness) == 1


def test_unknown_period():
    result = aperiodicity_check(torch.tensor([1.0, 0.0, 0.0, 0.0]), 3)
    assert result.kind == "unknown"
    assert result.period is None


def test_null_recurrence_log():
    report = null_recurrence_verdict(log_renewal(), 100000)
    assert report.verdict is SeriesVerdict.DIVERGES
    assert report.tends_to_zero
    assert report.null_recurrent
    assert report.partial_sums[-1].item() > 8000


def test_null_recurrence_geometric():
    report = null_recurrence_verdict(geometric_renewal(0.5), 40)
    assert report.verdict is SeriesVerdict.CONVERGES
    assert not report.null_recurrent
    assert report.partial_sums[-1].item() == pytest.approx(1 - 2 ** -40)


def test_null_recurrence_table():
    p = table_renewal([(0, 1.0), (5, 0.2)])
    report = null_recurrence_verdict(p, 20)
    assert report.verdict is SeriesVerdict.INCONCLUSIVE
    assert report.tends_to_zero is None


def test_pwm_log():
    report = pwm_criterion(log_renewal(), (1, -2, 0.5), 100000)
    assert report.verdict is SeriesVerdict.DIVERGES
    assert report.times == (1.0, 2.0, 0.5)
    assert report.last_term > 0


def test_pwm_single_time_matches_null_recurrence():
    p = log_renewal()
    a = pwm_criterion(p, (1,), 1000).partial_sums
    b = null_recurrence_verdict(p, 1000).partial_sums
    assert torch.equal(a, b)


def test_pwm_geometric():
    report = pwm_criterion(geometric_renewal(0.5), (1, 1), 40)
    assert report.verdict is SeriesVerdict.CONVERGES
    assert report.partial_sums[-1].item() == pytest.approx(1 / 3)


@pytest.mark.parametrize("times", [(), (1, 0)])
def test_pwm_invalid_times(times):
    with pytest.raises(ValueError):
        pwm_criterion(log_renewal(), times, 10)


def test_log_convexity():
    assert log_convexity_check(renewal_sequence(log_renewal(), 1000)).holds
    u = torch.tensor([1.0, 0.5, 0.5, 0.1], dtype=torch.float64)
    result = log_convexity_check(u)
    assert not result.holds
    assert result.first_violation == 2
