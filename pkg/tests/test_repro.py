import pytest

from multirel.laws import catalog, get_law, repro
from multirel.laws.repro import Hunted, Stored, UnknownReproError

ITEMS = repro.items()


@pytest.mark.parametrize("item", ITEMS, ids=[i.name for i in ITEMS])
def test_item_passes(item):
    result = item.run()
    assert result.ok, result.line()


def test_every_item_names_a_refuted_catalog_law():
    for it in ITEMS:
        law = get_law(it.law)
        if it.kind in ("algebra", "hunted-algebra"):
            assert law.algebra == "Refuted"
        else:
            assert law.expected == "Refuted"


def test_stored_value_mismatch_fails():
    bad = Stored("bad", "below-par", "a,b",
                 {"x": "{(a,{a})}", "y": "{(a,{a,b})}"}, {"x || y": "{}"})
    assert not bad.run().ok


def test_stored_non_witness_fails():
    bad = Stored("bad", "below-par", "a", {"x": "{(a,{a})}", "y": "{(a,{a})}"})
    assert not bad.run().ok


def test_hunted_valid_law_fails():
    assert not Hunted("bad", "par-comm").run().ok


def test_unknown_item():
    with pytest.raises(UnknownReproError):
        repro.run(["nope"])


def test_names_unique():
    names = [i.name for i in ITEMS]
    assert len(names) == len(set(names))
