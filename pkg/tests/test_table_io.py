import json

import pytest

from chernlab.errors import NotACharacterTable, SchemaError
from chernlab.repring import (
    RepRing,
    builtin_fusion,
    builtin_group,
    restriction_kernel,
    table_dihedral8,
    table_sigma4,
)
from chernlab.table_io import table_from_json, table_to_dict, table_to_json


@pytest.mark.parametrize("name", ["trivial", "c4", "sigma3", "sigma4", "d8",
                                  "extraspecial(3,1)"])
def test_round_trip(name):
    table = builtin_group(name) if name != "d8" else table_dihedral8()
    doc = table_to_json(table)
    back = table_from_json(doc)
    assert back.rows == table.rows
    assert back.class_sizes == table.class_sizes
    assert back.power_maps == {k: list(v) for k, v in table.power_maps.items()}
    # byte-identical re-export
    assert table_to_json(back) == doc


def test_unknown_field_rejected():
    doc = table_to_dict(builtin_group("c2"))
    doc["surprise"] = 1
    with pytest.raises(SchemaError):
        table_from_json(json.dumps(doc))


def test_schema_version_checked():
    doc = table_to_dict(builtin_group("c2"))
    doc["schema"] = "chernlab/2"
    with pytest.raises(SchemaError):
        table_from_json(json.dumps(doc))


def test_corrupted_value_fails_validation():
    doc = table_to_dict(builtin_group("sigma3"))
    doc["irreducibles"][2]["values"][1] = [6, 1, 0]  # sigma(transposition) = 1
    with pytest.raises(NotACharacterTable):
        table_from_json(json.dumps(doc))


def test_bad_conductor_rejected():
    doc = table_to_dict(builtin_group("c2"))
    doc["irreducibles"][0]["values"][0] = [3, 1, 0]  # 3 does not divide 2
    with pytest.raises(SchemaError):
        table_from_json(json.dumps(doc))


def test_ingested_d8_usable_for_restriction():
    # export the dihedral table, re-ingest it without its group model, and
    # run the Sylow restriction against the symmetric group
    doc = table_to_json(table_dihedral8())
    td8 = table_from_json(doc)
    assert td8.model is None
    r4 = RepRing(table_sigma4())
    rd8 = RepRing(td8)
    res = restriction_kernel(r4, rd8, builtin_fusion("sigma4", "d8"))
    assert len(res.kernel_basis) == 1
    gen = r4.by_name("sigma") - r4.one() - r4.by_name("eps")
    assert res.contains(gen)
