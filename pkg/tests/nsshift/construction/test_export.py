import json

from nsshift.construction import dump_levels, load_levels, measure_from_levels
from nsshift.construction.export import level_to_dict
from nsshift.measure.attribute import dump_measure, load_measure


def test_level2_document(levels2):
    doc = level_to_dict(levels2[1])
    assert doc["n"] == "355"
    assert doc["N"] == "362"
    assert doc["m"] == str(2 * 362 * (2 + 2 ** 724))
    assert doc["lambda"] == {"a": "0", "b": "1", "k": "5"}


def test_level3_sparse_fields(levels3):
    doc = level_to_dict(levels3[2])
    assert isinstance(doc["n"], str)
    assert "sparse" in doc["m"]
    assert "sparse" in doc["M"]


def test_levels_round_trip(levels3):
    text = json.dumps(dump_levels(levels3), sort_keys=True)
    assert load_levels(json.loads(text)) == levels3


def test_measure_round_trip(levels3, tmp_path):
    P = measure_from_levels(levels3)
    path = tmp_path / "construction.json"
    dump_measure(P, path)
    assert load_measure(path) == P
