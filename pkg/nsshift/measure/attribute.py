import json

from nsshift.measure.factor import Factor
from nsshift.measure.product import ProductMeasure
from nsshift.measure.rule import (
    Block,
    BlockRule,
    EventuallyConstant,
    LevelParameterized,
    TwoAccumulationPoints,
)
from nsshift.utils import format_index, format_real, parse_index

FORMAT_VERSION = 1


def factor_to_value(factor):
    return format_real(factor.p0)


def factor_from_value(value):
    return Factor(float(value))


def tail_to_dict(tail):
    """Serialise a negative tail descriptor."""
    if isinstance(tail, EventuallyConstant):
        return {"kind": tail.kind, "p0": factor_to_value(tail.factor)}
    elif isinstance(tail, TwoAccumulationPoints):
        return {
            "kind": tail.kind,
            "low": factor_to_value(tail.low),
            "high": factor_to_value(tail.high),
            "plateau": str(tail.plateau),
            "ratio": str(tail.ratio),
            "ramped": tail.ramped,
        }
    elif isinstance(tail, LevelParameterized):
        from nsshift.construction.export import level_to_dict

        return {
            "kind": tail.kind,
            "levels": [level_to_dict(level) for level in tail.levels],
            "factors": [factor_to_value(f) for f in tail.factors],
            "declared_limit": factor_to_value(tail.declared_limit),
            "fill": factor_to_value(tail.fill),
            "m0": str(tail.m0),
        }
    else:
        raise NotImplementedError(
            "Serialisation of tail {} not implemented.".format(type(tail).__name__)
        )


def tail_from_dict(doc):
    kind = doc["kind"]
    if kind == EventuallyConstant.kind:
        return EventuallyConstant(factor_from_value(doc["p0"]))
    elif kind == TwoAccumulationPoints.kind:
        return TwoAccumulationPoints(
            factor_from_value(doc["low"]),
            factor_from_value(doc["high"]),
            int(doc.get("plateau", 1)),
            int(doc.get("ratio", 2)),
            bool(doc.get("ramped", True)),
        )
    elif kind == LevelParameterized.kind:
        from nsshift.construction.export import level_from_dict

        return LevelParameterized(
            tuple(level_from_dict(item) for item in doc["levels"]),
            tuple(factor_from_value(f) for f in doc["factors"]),
            factor_from_value(doc["declared_limit"]),
            factor_from_value(doc.get("fill", "0.5")),
            int(doc.get("m0", 1)),
        )
    else:
        raise NotImplementedError("Tail kind {!r} not implemented.".format(kind))


def measure_to_dict(P):
    rule = P.rule
    return {
        "format": FORMAT_VERSION,
        "blocks": [
            {
                "lo": format_index(b.lo),
                "hi": format_index(b.hi),
                "p0": factor_to_value(b.factor),
            }
            for b in rule.blocks
        ],
        "pos_tail": factor_to_value(rule.pos_tail),
        "neg_tail": tail_to_dict(rule.neg_tail),
        "shift_offset": format_index(P.shift_offset),
    }


def measure_from_dict(doc):
    blocks = tuple(
        Block(parse_index(b["lo"]), parse_index(b["hi"]), factor_from_value(b["p0"]))
        for b in doc.get("blocks", [])
    )
    rule = BlockRule(
        blocks,
        factor_from_value(doc.get("pos_tail", "0.5")),
        tail_from_dict(
            doc.get("neg_tail", {"kind": EventuallyConstant.kind, "p0": "0.5"})
        ),
    )
    return ProductMeasure(rule, parse_index(doc.get("shift_offset", "0")))


def dump_measure(P, path=None):
    """JSON text of P, also written to ``path`` when given."""
    text = json.dumps(measure_to_dict(P), indent=2, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w") as f:
            f.write(text)
    return text


def load_measure(path=None, text=None):
    """Measure from a JSON file or a JSON string."""
    if (path is None) == (text is None):
        raise ValueError("Pass exactly one of path and text.")
    if path is not None:
        with open(path) as f:
            text = f.read()
    return measure_from_dict(json.loads(text))
