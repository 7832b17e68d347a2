import pytest

from multirel.laws import (AlgebraError, AlgebraModel, FiniteAlgebra, HOLDS,
                           REFUTED, builtin_algebra, catalog, check_algebra,
                           check_law, get_law)
from multirel.laws.checker import ALGEBRA_COUNTEREXAMPLES, check_at_labels

ALG = builtin_algebra()


def test_builtin_d_column():
    assert [ALG.carrier[i] for i in ALG.d_table()] == ["0", "1s", "1s", "1s"]
    assert ALG.check_expected_d()


def test_tables_total_and_ordered():
    order = ALG.order_matrix()
    chain = [ALG.index(x) for x in ["0", "1p", "1s", "a"]]
    for i, a in enumerate(chain):
        for b in chain[i:]:
            assert order[a][b]


@pytest.mark.parametrize("axioms", ["c-monoid", "c-trioid"])
def test_axioms_hold(axioms):
    v = check_algebra(ALG, axioms)
    assert v.status == HOLDS
    counter = [p for p in v.parts if p.law in dict(ALGEBRA_COUNTEREXAMPLES)]
    assert len(counter) == 4 and all(p.refuted for p in counter)


@pytest.mark.parametrize("name,labels", ALGEBRA_COUNTEREXAMPLES)
def test_stored_witnesses(name, labels):
    assert check_at_labels(get_law(name), ALG, labels).refuted


def test_dom_par_right_distrib_value():
    # (a || 1p) . d(0) = a . 0 = 1p, but (a . d(0)) || (1p . d(0)) = 1p || 0 = 0
    t = ALG.tables
    a, p, z = (ALG.index(x) for x in ("a", "1p", "0"))
    d0 = ALG.d_table()[z]
    assert t["seq"][t["par"][a][p]][d0] == p
    assert t["par"][t["seq"][a][d0]][t["seq"][p][d0]] == z


ALGEBRA_LAWS = [l for l in catalog() if l.algebra]


@pytest.mark.parametrize("law", ALGEBRA_LAWS, ids=[l.name for l in ALGEBRA_LAWS])
def test_algebra_expectations(law):
    v = check_law(law, model=AlgebraModel(ALG))
    assert v.refuted == (law.algebra == REFUTED)


def test_json_round_trip():
    back = FiniteAlgebra.from_json(ALG.to_json())
    assert back.tables == ALG.tables and back.constants == ALG.constants


@pytest.mark.parametrize("mutate", [
    lambda j: j["tables"]["seq"].pop(),
    lambda j: j["tables"]["par"][0].__setitem__(0, "zz"),
    lambda j: j["constants"].pop("1p"),
    lambda j: j["tables"].pop("union"),
])
def test_malformed_tables_rejected(mutate):
    j = ALG.to_json()
    mutate(j)
    with pytest.raises(AlgebraError):
        FiniteAlgebra.from_json(j)


def test_mismatched_d_column_reported():
    j = ALG.to_json()
    j["expected_d"] = ["0", "1s", "1s", "a"]
    alg = FiniteAlgebra.from_json(j)
    assert not alg.check_expected_d()
    assert check_algebra(alg).status == REFUTED
