import json

import pytest

import oracles as o
from multirel import MultirelError, UniverseMismatchError, from_pairs, make_universe
from multirel.laws import (HOLDS, INCONCLUSIVE, REFUTED, Law, Sampled,
                           SearchSpaceError, SortError, UnboundVariableError,
                           catalog, check_law, eval_term, get_law, hunt,
                           run_suite)
from multirel.laws.terms import App, Const, Var

U1, U2 = make_universe("a"), make_universe("ab")


# an evaluator over the oracle's explicit sets, for re-checking witnesses
_ORACLE_OPS = {
    "union": lambda a, b, L: a | b,
    "meet": lambda a, b, L: a & b,
    "seq": lambda a, b, L: o.seq(a, b),
    "par": lambda a, b, L: o.par(a, b),
    "parikh": lambda a, b, L: o.parikh(a, b, L),
    "d": lambda a, L: o.domain(a),
    "tau": lambda a, L: frozenset(p for p in a if not p[1]),
    "nu": lambda a, L: frozenset(p for p in a if p[1]),
    "up": lambda a, L: o.up(a, L),
}
_ORACLE_CONSTS = {
    "0": lambda L: frozenset(), "1s": o.one_sigma, "1p": o.one_pi, "U": o.univ,
    "n1p": lambda L: o.univ(L) - o.one_pi(L),
}


def oracle_eval(t, env, labels):
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Const):
        return _ORACLE_CONSTS[t.name](labels)
    args = [oracle_eval(a, env, labels) for a in t.args]
    return _ORACLE_OPS[t.op](*args, labels)


def oracle_holds(rel, env, labels):
    a, b = oracle_eval(rel.lhs, env, labels), oracle_eval(rel.rhs, env, labels)
    return {"=": a == b, "!=": a != b, "<=": a <= b}[rel.rel]


def _ops(t):
    if isinstance(t, App):
        yield t.op
        for a in t.args:
            yield from _ops(a)


def oracle_checkable(law):
    rels = list(law.hypotheses) + [law.conclusion]
    return all(op in _ORACLE_OPS for r in rels for s in (r.lhs, r.rhs)
               for op in _ops(s))


REFUTED_LAWS = [l for l in catalog() if l.expected == REFUTED and oracle_checkable(l)]


@pytest.mark.parametrize("law", REFUTED_LAWS, ids=[l.name for l in REFUTED_LAWS])
def test_hunter_witness_violates_law_in_oracle(law):
    v = hunt(law)
    assert v.refuted
    labels = "abc"[:v.n]
    env = {k: frozenset((a, frozenset(t)) for a, t in w) for k, w in v.witness.items()}
    assert all(oracle_holds(h, env, labels) for h in law.hypotheses)
    assert not oracle_holds(law.conclusion, env, labels)


def test_commutativity_holds_exhaustively():
    law = Law.parse("comm", "x || y = y || x")
    v = check_law(law, 2)
    assert v.status == HOLDS
    assert v.checked == 256 ** 2


def test_associativity_refuted_with_witness():
    law = Law.parse("assoc", "x . (y . z) <= (x . y) . z")
    v = hunt(law)
    assert v.refuted
    u = make_universe("abc"[:v.n])
    env = {k: from_pairs(u, w) for k, w in v.witness.items()}
    assert eval_term("x . (y . z)", env) != eval_term("(x . y) . z", env)


def test_symmetric_interchange_assignment_does_not_refute():
    # this assignment gives equal sides; the hunter supplies a real witness
    law = get_law("interchange-1a")
    r = from_pairs(U2, [("a", ["a"]), ("b", ["a", "b"])])
    s = from_pairs(U2, [("a", ["a"]), ("b", ["a"])])
    env = {"w": r, "y": r, "x": s, "z": s}
    assert eval_term(law.lhs, env) == eval_term(law.rhs, env)
    assert hunt(law).refuted


@pytest.mark.parametrize("name,binding", [
    ("nu-seq-hom", {"x": [("a", ["a", "b"])], "y": [("a", []), ("b", ["a", "b"])]}),
    ("tau-seq-hom", {"x": [("a", []), ("b", ["a"])], "y": [("a", [])]}),
])
def test_homomorphism_witnesses(name, binding):
    law = get_law(name)
    env = {k: from_pairs(U2, v) for k, v in binding.items()}
    assert eval_term(law.lhs, env) != eval_term(law.rhs, env)


def test_hypotheses_filter_assignments():
    law = Law.parse("cl4-pairs", "z || z <= z => (x || y) . z = (x . z) || (y . z)")
    v = check_law(law, 2, Sampled(4000))
    assert v.status == INCONCLUSIVE
    assert v.satisfying < v.checked


def test_first_witness_in_canonical_order():
    law = Law.parse("idem", "x || x <= x")
    v1, v2 = check_law(law, 2), check_law(law, 2)
    assert v1.witness == v2.witness
    assert v1.checked == min(b for b in range(256)
                             if not _par_idem_ok(b)) + 1


def _par_idem_ok(b):
    from multirel import MultiRelation, par
    r = MultiRelation(U2, b)
    return par(r, r) <= r


def test_sampled_mode_reproducible_and_inconclusive():
    law = Law.parse("assoc-union", "x + (y + z) = (x + y) + z")
    a = check_law(law, 2, Sampled(500, 7))
    b = check_law(law, 2, ("sampled", 500, 7))
    assert a.status == b.status == INCONCLUSIVE
    assert "seed 7" in a.space


def test_exhaustive_overflow():
    law = Law.parse("four", "(w || x) . (y || z) <= (w . y) || (x . z)")
    with pytest.raises(SearchSpaceError):
        check_law(law, 2)


def test_verdict_line_format():
    v = check_law(get_law("below-par"), 2)
    assert v.line().startswith("LAW below-par REFUTED {")
    json.loads(v.line().split(" ", 3)[3])


def test_eval_term_examples():
    x = from_pairs(U2, [("a", [])])
    assert eval_term("d(x)", {"x": x}) == from_pairs(U2, [("a", ["a"])])
    assert eval_term("1p || x", {"x": x}) == x


def test_eval_term_errors():
    x = from_pairs(U2, [("a", ["b"])])
    with pytest.raises(UnboundVariableError):
        eval_term("x . y", {"x": x})
    with pytest.raises(SortError):
        eval_term("p:sub . x", {"p": x, "x": x})
    with pytest.raises(UniverseMismatchError):
        eval_term("x . y", {"x": x, "y": from_pairs(U1, [])})
    with pytest.raises(MultirelError):
        eval_term("1s", {})


def test_full_suite_has_no_mismatches():
    report = run_suite(2, samples=3000, hunt_samples=5000)
    assert report.ok, [e.line() for e in report.mismatches]
    statuses = {e.verdict.status for e in report.entries}
    assert statuses <= {HOLDS, INCONCLUSIVE, REFUTED}
