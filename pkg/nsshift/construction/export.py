from nsshift.construction.levels import LevelParams
from nsshift.construction.scaled import ScaledExponent
from nsshift.utils import format_index, parse_index

LEVEL_FIELDS = ("n", "N", "m", "M")


def level_to_dict(level):
    """Integers as decimal strings, SparseInt as [coefficient, exponent] pairs."""
    doc = {
        "t": level.t,
        "k": str(level.k),
        "lambda": {
            "a": str(level.lam.a),
            "b": str(level.lam.b),
            "k": str(level.lam.k),
        },
        "metadata": dict(level.metadata),
    }
    for name in LEVEL_FIELDS:
        doc[name] = format_index(getattr(level, name))
    return doc


def level_from_dict(doc):
    lam = doc["lambda"]
    return LevelParams(
        t=int(doc["t"]),
        k=int(doc["k"]),
        lam=ScaledExponent(int(lam["a"]), int(lam["b"]), int(lam["k"])),
        metadata=dict(doc.get("metadata", {})),
        **{name: parse_index(doc[name]) for name in LEVEL_FIELDS}
    )


def dump_levels(levels):
    return {"levels": [level_to_dict(level) for level in levels]}


def load_levels(doc):
    return [level_from_dict(item) for item in doc["levels"]]
