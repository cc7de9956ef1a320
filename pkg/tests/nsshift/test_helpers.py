import pytest

from nsshift import helpers
from nsshift.measure import FAIR, Factor


@pytest.mark.parametrize("name", sorted(helpers.BUILTIN_MEASURES))
def test_builtin_names(name):
    if name == "construction":
        name = "construction:1"
    P = helpers.measure_by_name(name)
    assert P.factor_at(0) in (FAIR, Factor(0.9))


def test_dashed_name(two_point):
    assert helpers.measure_by_name("two-point") == two_point


def test_construction_depth():
    P = helpers.measure_by_name("construction:2")
    assert len(P.rule.neg_tail.levels) == 2


@pytest.mark.parametrize("name", ["uniform", "step:3"])
def test_unknown_names(name):
    with pytest.raises(ValueError):
        helpers.measure_by_name(name)


def test_alternating_layout(alternating):
    assert alternating.factor_at(-1) == Factor(0.3).swap()
    assert alternating.factor_at(-2) == Factor(0.3)
    assert alternating.factor_at(-3) == Factor(0.3).swap()
