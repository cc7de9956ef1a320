from nsshift.construction import DEFAULT_DEPTH, build_levels, measure_from_levels
from nsshift.measure.factor import FAIR, Factor
from nsshift.measure.product import ProductMeasure, constant_measure
from nsshift.measure.rule import (
    Block,
    BlockRule,
    EventuallyConstant,
    TwoAccumulationPoints,
)


def fair():
    return constant_measure(FAIR)


def step(p0=0.9):
    """P_k = (p0, 1 - p0) for k < 0, fair for k >= 0."""
    return ProductMeasure(BlockRule((), FAIR, EventuallyConstant(Factor(p0))))


def perturbed(p0=0.9, index=0):
    """Fair everywhere except coordinate ``index``."""
    block = Block(index, index, Factor(p0))
    return ProductMeasure(BlockRule((block,), FAIR, EventuallyConstant(FAIR)))


def alternating(p0=0.3):
    """(p0, 1 - p0) on even k < 0 and the swapped factor on odd k < 0."""
    tail = TwoAccumulationPoints(
        Factor(1 - p0), Factor(p0), plateau=1, ratio=1, ramped=False
    )
    return ProductMeasure(BlockRule((), FAIR, tail))


def two_point(low=0.3, high=0.7):
    """Plateaus at ``low`` and ``high`` of doubling length joined by ramps."""
    tail = TwoAccumulationPoints(Factor(low), Factor(high), plateau=1, ratio=2)
    return ProductMeasure(BlockRule((), FAIR, tail))


def construction(depth=DEFAULT_DEPTH):
    return measure_from_levels(build_levels(depth))


BUILTIN_MEASURES = dict(
    fair=fair,
    step=step,
    perturbed=perturbed,
    alternating=alternating,
    two_point=two_point,
    construction=construction,
)


def measure_by_name(name):
    """Built-in measure, ``construction:T`` selects T construction levels."""
    base, _, arg = name.replace("-", "_").partition(":")
    if base not in BUILTIN_MEASURES:
        raise ValueError(
            "Unknown measure {!r}, choose from {}.".format(
                name, sorted(BUILTIN_MEASURES)
            )
        )
    if arg:
        if base != "construction":
            raise ValueError(
                "Only construction takes an argument, got {!r}.".format(name)
            )
        return construction(int(arg))
    return BUILTIN_MEASURES[base]()
