import math

from nsshift.measure.factor import FAIR, Factor
from nsshift.measure.product import ProductMeasure
from nsshift.measure.rule import BlockRule, LevelParameterized
from nsshift.construction.levels import M0


def level_factor(level):
    """
    (lambda / (1 + lambda), 1 / (1 + lambda)) on the level's lambda block.

    From level 3 on ln(lambda) is below 2**-700 and the float64 value is
    exactly 1/2.
    """
    log_lambda = level.lam.log_value()
    return Factor(1.0 / (1.0 + math.exp(-log_lambda)))


def measure_from_levels(levels, declared_limit=FAIR):
    """
    Product measure of the construction: fair on k >= 0, the lambda block
    [-N_u + 1, -M_{u-1}] and the fair block [-M_u + 1, -N_u] for each level,
    ``declared_limit`` below -M_T.
    """
    levels = tuple(levels)
    factors = tuple(factor for _, _, factor in lambda_blocks(levels))
    tail = LevelParameterized(levels, factors, declared_limit, FAIR, M0)
    return ProductMeasure(BlockRule((), FAIR, tail))


def lambda_blocks(levels):
    """(lo, hi, factor) of every lambda block, in level order."""
    blocks = []
    M_prev = M0
    for level in levels:
        blocks.append((-level.N + 1, -M_prev, level_factor(level)))
        M_prev = level.M
    return blocks
