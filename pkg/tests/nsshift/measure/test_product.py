import math

import pytest
import torch

from nsshift.bigindex import floor_log2
from nsshift.measure import FAIR, Factor, constant_measure, factor_at, shift
from nsshift.measure.product import factor_table, intersect_segments


def test_shift_convention(step):
    Q = shift(step, 3)
    # (P o T^n)_k = P_{k-n}
    for k in range(-5, 6):
        assert factor_at(Q, k) == factor_at(step, k - 3)
    assert factor_at(Q, 2) == Factor(0.9)
    assert factor_at(Q, 3) == FAIR
    assert shift(shift(step, 2), -2) == step


def test_factor_table(perturbed):
    table = factor_table(perturbed, -2, 2)
    expected = torch.tensor([0.5, 0.5, 0.9, 0.5, 0.5], dtype=torch.float64)
    assert torch.equal(table, expected)


def test_intersect_segments(step):
    pieces = intersect_segments(step, step.shift(3), -5, 5)
    assert [(a, b) for a, b, _, _ in pieces] == [(-5, -1), (0, 2), (3, 5)]
    assert pieces[1][2] == FAIR
    assert pieces[1][3] == Factor(0.9)


def test_constant_measure():
    P = constant_measure(Factor(0.25))
    assert factor_at(P, -(10 ** 9)) == Factor(0.25)
    assert factor_at(P, 10 ** 9) == Factor(0.25)


def test_construction_layout(constructed2, levels2):
    assert factor_at(constructed2, -1).p0 == pytest.approx(2 / 3, abs=1e-15)
    assert factor_at(constructed2, -2).p0 == pytest.approx(2 / 3, abs=1e-15)
    for k in (-3, -6, 0, 5):
        assert factor_at(constructed2, k) == FAIR
    level2 = factor_at(constructed2, -7).p0
    assert level2 == pytest.approx(1 / (1 + math.exp(-1 / 32)), rel=1e-15)
    assert level2 == pytest.approx(0.50781186, abs=1e-8)
    assert factor_at(constructed2, -361) == factor_at(constructed2, -7)
    assert factor_at(constructed2, -362) == FAIR
    M2 = levels2[1].M
    assert factor_at(constructed2, -M2) == FAIR


def test_construction_blocks_cover_negative_axis(constructed2):
    pieces = constructed2.segments(-(10 ** 6), -1)
    assert pieces[0][0] == -(10 ** 6)
    assert pieces[-1][1] == -1
    for (a0, b0, _), (a1, _, _) in zip(pieces, pieces[1:]):
        assert b0 + 1 == a1


def test_construction_level3_factor_is_fair(constructed3, levels3):
    lam3 = constructed3.rule.neg_tail.factors[2]
    assert lam3 == FAIR
    assert floor_log2(levels3[2].M) > 10 ** 200
