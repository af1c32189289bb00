import json
import os

import pytest
from hypothesis import given, strategies as st

from frobex.catalog import (
    c3_listed_structures,
    c4_listed_structures,
    families,
    klein_four_extensions,
    standard_groups,
)
from frobex.cli import GOLDEN_CLASSIFY, _classify, catalog_doc, classify_doc
from frobex.errors import FieldMismatchError, FrobexParseError, ShapeError
from frobex.extended import ExtFrobAlgebra
from frobex.hopf import group_hopf_algebra
from frobex.io import detect_kind, dumps, loads
from frobex.scalars import embed, field_make, sqrt_conductor

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")
STRUCTS = c3_listed_structures() + c4_listed_structures() + [e for _, e in klein_four_extensions()][:8]


@given(st.sampled_from(STRUCTS))
def test_extended_round_trip_is_exact(e):
    text = dumps(e)
    back = loads(text)
    assert isinstance(back, ExtFrobAlgebra)
    assert back.frob == e.frob and back.phi == e.phi and back.theta == e.theta and back.name == e.name
    assert dumps(back) == text


@pytest.mark.parametrize("gname", list(standard_groups()))
def test_hopf_round_trip(gname):
    G = standard_groups()[gname]
    h = group_hopf_algebra(G, field_make(sqrt_conductor(G.order)))
    text = dumps(h)
    assert loads(text) == h
    assert detect_kind(json.loads(text)) == "hopf"


def test_field_override_embeds_values():
    e = c3_listed_structures()[0]
    big = field_make(24)
    back = loads(dumps(e), big)
    assert back.field is big
    assert back.theta == type(back.theta)(big, [embed(x, big) for x in e.theta])
    with pytest.raises(FieldMismatchError):
        loads(dumps(e), field_make(8))


def test_parse_error_positions():
    text = dumps(c3_listed_structures()[0])
    doc = json.loads(text)
    first = json.dumps(doc["theta"][0])
    bad = text.replace(f'"theta": [{first}', '"theta": ["z^^2"', 1)
    with pytest.raises(FrobexParseError) as info:
        loads(bad)
    pos = info.value.position
    assert "theta[0]" in str(info.value)
    assert bad[pos - 2:pos + 1] == "z^^"
    with pytest.raises(FrobexParseError) as info:
        loads('{"conductor": 8, "dim": 1,, }')
    assert info.value.position == 26


def test_structural_errors():
    with pytest.raises(FrobexParseError):
        loads("[1, 2]")
    with pytest.raises(FrobexParseError):
        loads('{"dim": 1}')
    with pytest.raises(FrobexParseError):
        loads('{"conductor": 1, "dim": 1, "kind": "mystery"}')
    with pytest.raises(ShapeError):
        loads('{"conductor": 1, "dim": 2, "m": [["1"]], "u": [], "delta": [], "eps": []}')


def _golden(name):
    with open(os.path.join(GOLDEN, name), encoding="utf-8") as fh:
        return fh.read()


@pytest.mark.parametrize("name", list(families()))
def test_catalog_goldens(name):
    assert dumps(catalog_doc(name, with_checks=False)) == _golden(f"catalog_{name}.json")


@pytest.mark.parametrize("name", GOLDEN_CLASSIFY)
def test_classification_goldens(name):
    header, cl = _classify(name, None, None, None, None)
    assert dumps(classify_doc(header, cl, 0)) == _golden(f"classify_{name}.json")


@pytest.mark.parametrize("gname", list(standard_groups()))
def test_hopf_goldens_reload(gname):
    G = standard_groups()[gname]
    h = loads(_golden(f"hopf_{gname}.json"))
    assert h == group_hopf_algebra(G, field_make(sqrt_conductor(G.order)))


def test_golden_classification_counts():
    counts = {n: json.loads(_golden(f"classify_{n}.json")) for n in ("k", "CoverR", "kC2", "klein")}
    assert [len(counts[n]["classes"]) for n in ("k", "CoverR", "kC2")] == [2, 3, 4]
    assert all(not d["unresolved"] for d in counts.values())
