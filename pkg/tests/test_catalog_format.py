import json

import pytest

from pinstructures.catalog import klein, mk, product, product_of, rp, sphere, torus
from pinstructures.catalog_format import dumps, from_document, loads, to_document
from pinstructures.deciders import full_report
from pinstructures.errors import CorruptRingData

ENTRIES = [rp(2), rp(5), sphere(3), torus(3), klein(), mk(5), product(rp(2), rp(2)),
           product_of(rp(2), rp(2), sphere(1)), product(mk(5), rp(3))]


@pytest.mark.parametrize("m", ENTRIES, ids=lambda m: m.name)
def test_roundtrip(m):
    doc = to_document(m)
    back = loads(dumps(m))
    assert to_document(back) == doc
    a, b = full_report(m).to_json(), full_report(back).to_json()
    for key in ("orientable", "spin", "pin_plus", "pin_minus", "pin_c", "lipschitz", "obstructions"):
        assert a[key] == b[key]


def test_document_contents():
    doc = to_document(klein())
    assert doc["format_version"] == 1
    assert doc["ring"]["kind"] == "table"
    assert "u . u = u^2" in doc["ring"]["products"]
    assert doc["sw_total"] == ["1", "u + v", "0"]
    assert doc["homology"] == ["Z", "Z + Z/2", "0"]
    assert doc["lift_l1"] == ["u + v"]
    assert doc["provenance"]
    assert to_document(rp(3))["ring"]["relations"] == ["a^4 = 0"]


def test_corrupt_document_rejected():
    doc = json.loads(dumps(rp(2)))
    doc["lift_l1"] = ["a"]
    with pytest.raises(CorruptRingData):
        from_document(doc)
    doc = json.loads(dumps(rp(2)))
    doc["format_version"] = 99
    with pytest.raises(ValueError):
        from_document(doc)
