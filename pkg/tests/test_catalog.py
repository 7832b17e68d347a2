import json

import pytest

from multirel.laws import REFUTED, VALID, Law, UnknownLawError, catalog, get_law
from multirel.laws.catalog import axiom_group

CATALOG = catalog()
NAMES = [law.name for law in CATALOG]


def test_catalog_size_and_unique_names():
    assert len(CATALOG) >= 90
    assert len(set(NAMES)) == len(NAMES)


@pytest.mark.parametrize("name", [f"c{i}" for i in range(1, 7)]
                         + [f"cl{i}" for i in range(1, 12)])
def test_axioms_present_and_valid(name):
    assert get_law(name).expected == VALID


@pytest.mark.parametrize("name", [
    "par-self-below", "below-par", "par-meet-distrib", "seq-superassoc",
    "par-seq-superdistrib", "seq-par-superdistrib",
    "interchange-1a", "interchange-2a", "interchange-3a", "interchange-4a",
    "tau-seq-hom", "nu-seq-hom", "nu-par-hom",
    "tau-pre-seq-right", "nu-pre-par", "nu-pre-seq-left",
    "peleg-up-fails", "nu-star-above", "omega-fusion-strict",
])
def test_refutations_present(name):
    assert get_law(name).expected == REFUTED


def test_below_par_statement():
    law = get_law("below-par")
    assert law.statement() == "x <= x || y"


def test_cl4_has_hypothesis():
    law = get_law("cl4")
    assert len(law.hypotheses) == 1
    assert str(law.hypotheses[0]) == "z || z <= z"


def test_sorted_variables():
    assert get_law("dia-par").sorts["p"] == "SeqSubid"
    assert get_law("term-par-meet").sorts == {"s": "Terminal", "t": "Terminal"}


@pytest.mark.parametrize("law", CATALOG, ids=NAMES)
def test_json_round_trip(law):
    obj = json.loads(json.dumps(law.to_json()))
    assert set(obj) == {"name", "hypotheses", "lhs", "rhs", "rel", "expected", "anchor"}
    back = Law.from_json(obj)
    assert back.hypotheses == law.hypotheses
    assert back.conclusion == law.conclusion
    assert back.expected == law.expected


def test_axiom_groups():
    cm = {l.name for l in axiom_group("c-monoid")}
    ct = {l.name for l in axiom_group("c-trioid")}
    assert {"c1", "c2", "c3", "c4", "c5"} <= cm
    assert "c6" not in cm and "c6" in ct
    assert cm <= ct


def test_anchors_are_filled():
    assert all(law.anchor for law in CATALOG)


def test_unknown_law():
    with pytest.raises(UnknownLawError):
        get_law("no-such-law")
