"""Character-table JSON: ingest user tables, export builtins.

Schema (version chernlab/1):
{
  "schema": "chernlab/1",
  "name": str, "order": int, "exponent": int,
  "classes": [{"size": int, "elt_order": int, "power": {"2": idx, ...}}, ...],
  "irreducibles": [{"dim": int, "values": [[conductor, c0, c1, ...], ...]}, ...]
}
Values are coordinates in the power basis of Z[zeta_conductor]; each
conductor must divide the exponent.  Unknown fields are rejected; the table
is fully validated (orthogonality, power maps) on ingest.
"""

from __future__ import annotations

import json

from .cyclotomic import Cyclo, cyclotomic_polynomial
from .errors import SchemaError, ValidationError
from .repring import CharacterTable

_TOP_KEYS = {"schema", "name", "order", "exponent", "classes", "irreducibles"}
_CLASS_KEYS = {"size", "elt_order", "power"}
_IRR_KEYS = {"dim", "values"}


def _require(cond: bool, path: str, msg: str):
    if not cond:
        raise SchemaError(f"{path}: {msg}")


def table_to_dict(table: CharacterTable) -> dict:
    e = table.exponent
    classes = []
    for c in range(table.nclasses):
        power = {
            str(k): table.power_map(k)[c]
            for k in range(2, e)
        }
        classes.append(
            {"size": table.class_sizes[c], "elt_order": table.class_orders[c],
             "power": power}
        )
    irreducibles = []
    for i, row in enumerate(table.rows):
        values = [[e] + list(v) for v in row]
        irreducibles.append({"dim": table.dims[i], "values": values})
    return {
        "schema": "chernlab/1",
        "name": table.name,
        "order": table.order,
        "exponent": e,
        "classes": classes,
        "irreducibles": irreducibles,
    }


def table_to_json(table: CharacterTable) -> str:
    return json.dumps(table_to_dict(table), sort_keys=True, indent=2) + "\n"


def table_from_dict(doc: dict) -> CharacterTable:
    _require(isinstance(doc, dict), "$", "document must be an object")
    extra = set(doc) - _TOP_KEYS
    _require(not extra, "$", f"unknown fields {sorted(extra)}")
    missing = _TOP_KEYS - set(doc)
    _require(not missing, "$", f"missing fields {sorted(missing)}")
    _require(doc["schema"] == "chernlab/1", "$.schema", "unsupported schema")
    name = doc["name"]
    order = doc["order"]
    e = doc["exponent"]
    _require(isinstance(order, int) and order >= 1, "$.order", "positive integer required")
    _require(isinstance(e, int) and e >= 1, "$.exponent", "positive integer required")

    classes = doc["classes"]
    _require(isinstance(classes, list) and classes, "$.classes", "nonempty list required")
    sizes, orders = [], []
    nclasses = len(classes)
    power_maps: dict[int, list[int]] = {k: [] for k in range(2, e)}
    for ci, cls in enumerate(classes):
        path = f"$.classes[{ci}]"
        _require(isinstance(cls, dict), path, "object required")
        extra = set(cls) - _CLASS_KEYS
        _require(not extra, path, f"unknown fields {sorted(extra)}")
        _require(_CLASS_KEYS <= set(cls), path, "size, elt_order, power required")
        sizes.append(cls["size"])
        orders.append(cls["elt_order"])
        for k in range(2, e):
            key = str(k)
            _require(key in cls["power"], f"{path}.power", f"missing exponent {k}")
            idx = cls["power"][key]
            _require(isinstance(idx, int) and 0 <= idx < nclasses,
                     f"{path}.power.{key}", "class index out of range")
            power_maps[k].append(idx)
        extra_pows = set(cls["power"]) - {str(k) for k in range(2, e)}
        _require(not extra_pows, f"{path}.power", f"unknown exponents {sorted(extra_pows)}")

    irr = doc["irreducibles"]
    _require(isinstance(irr, list) and len(irr) == nclasses,
             "$.irreducibles", "need one irreducible per class")
    cy = Cyclo(e)
    rows = []
    for ii, item in enumerate(irr):
        path = f"$.irreducibles[{ii}]"
        _require(isinstance(item, dict), path, "object required")
        extra = set(item) - _IRR_KEYS
        _require(not extra, path, f"unknown fields {sorted(extra)}")
        _require(_IRR_KEYS <= set(item), path, "dim and values required")
        values = item["values"]
        _require(isinstance(values, list) and len(values) == nclasses,
                 f"{path}.values", "need one value per class")
        row = []
        for vi, val in enumerate(values):
            vpath = f"{path}.values[{vi}]"
            _require(isinstance(val, list) and len(val) >= 2, vpath,
                     "[conductor, coeffs...] required")
            conductor = val[0]
            _require(isinstance(conductor, int) and conductor >= 1 and e % conductor == 0,
                     vpath, "conductor must divide the exponent")
            coeffs = val[1:]
            degree = len(cyclotomic_polynomial(conductor)) - 1
            _require(len(coeffs) == degree, vpath,
                     f"need {degree} coordinates for conductor {conductor}")
            _require(all(isinstance(c, int) for c in coeffs), vpath, "integer coordinates")
            small = Cyclo(conductor)
            row.append(cy.embed_from(small, tuple(coeffs)))
        dim = cy.rational_value(row[orders.index(1)]) if 1 in orders else None
        _require(dim == item["dim"], f"{path}.dim", "dim disagrees with the identity value")
        rows.append(row)
    try:
        return CharacterTable(name, order, e, sizes, orders, power_maps, rows)
    except ValidationError:
        raise
    # NotACharacterTable propagates as the validation verdict


def table_from_json(text: str) -> CharacterTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return table_from_dict(doc)


def ingest_table(path: str) -> CharacterTable:
    with open(path, "r", encoding="utf-8") as fh:
        return table_from_json(fh.read())
