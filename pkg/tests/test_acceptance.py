"""Acceptance gate.  Each test carries a ``criterion`` marker; conftest.py
prints one PASS/FAIL line per criterion at the end of the run."""

import random
import time

import pytest

import oracles as o
from multirel import (MultiRelation, const, infinity,
                      inter, is_deflationary, is_in_class, is_omega_trivial,
                      is_wellfounded, iter_star_bracket, iter_star_paren,
                      iter_star_powers, make_universe, nabla, nu, omega,
                      omega_binary, par, parikh_seq, seq, star, star_binary,
                      tau, union, up_closure)
from multirel.laws import (HOLDS, REFUTED, AlgebraModel, builtin_algebra, catalog,
                           check_algebra, check_law, check_valid, get_law, hunt,
                           repro)
from multirel.laws.checker import ALGEBRA_COUNTEREXAMPLES, check_at_labels
from multirel.laws.terms import Const

U1, U2, U3 = (make_universe("abc"[:n]) for n in (1, 2, 3))
ALL2 = [MultiRelation(U2, b) for b in range(256)]
SEED = 20251019


def criterion(num, title):
    return pytest.mark.criterion(num, title)


def _valid_everywhere(names):
    bad = []
    for name in names:
        v = check_valid(get_law(name), 2, samples=200000)
        if v.refuted:
            bad.append(v.line())
    return bad


# 1 -------------------------------------------------------------------------

@criterion(1, "seq agrees with the choice-function oracle")
def test_seq_oracle_equivalence():
    t0 = time.perf_counter()
    pairs = [(MultiRelation(U1, a), MultiRelation(U1, b))
             for a in range(4) for b in range(4)]
    assert len(pairs) == 16
    rng = random.Random(SEED)
    for u in (U2, U3):
        width = u.n << u.n
        pairs += [(MultiRelation(u, rng.getrandbits(width)),
                   MultiRelation(u, rng.getrandbits(width)))
                  for _ in range(10_000)]
    for r, s in pairs:
        assert o.to_oracle(seq(r, s)) == o.seq(o.to_oracle(r), o.to_oracle(s))
    assert time.perf_counter() - t0 < 60


# 2 -------------------------------------------------------------------------

AXIOMS = [f"c{i}" for i in range(1, 7)] + [f"cl{i}" for i in range(1, 12)]


@criterion(2, "c1-c6 and cl1-cl11 hold at n=1 and n=2")
def test_axiom_soundness():
    t0 = time.perf_counter()
    assert _valid_everywhere(AXIOMS) == []
    assert time.perf_counter() - t0 < 300


# 3 -------------------------------------------------------------------------

def _anchored(*anchors):
    return [l.name for l in catalog() if l.anchor in anchors]


DERIVED = (
    ["dom-par", "dom-par-seq", "dom-left-unit", "dom-locality", "dom-import",
     "dom-comm", "dom-unit"]
    + [f"mraxiom-{i}" for i in range(1, 8)]
    + _anchored("explicit domain definitions",
                "round trips between subidentities, terminals and vectors",
                "round trips for nonterminal multirelations",
                "tau and nu are complementary interior operators",
                "tau and nu of constants",
                "tau and nu as homomorphisms",
                "splitting compositions into terminal and nonterminal parts")
)


@criterion(3, "derived domain, round-trip and tau/nu laws hold")
def test_derived_laws():
    assert len(DERIVED) == len(set(DERIVED)) >= 60
    assert get_law("tau-const-U").rhs == Const("1p")
    assert _valid_everywhere(DERIVED) == []


# 4 -------------------------------------------------------------------------

REFUTED_MR = [l for l in catalog() if l.expected == REFUTED]
REFUTED_ALG = [l for l in catalog() if l.algebra == REFUTED]


@criterion(4, "every refuted law has a witness and repro passes")
def test_refutation_suite():
    t0 = time.perf_counter()
    missing = [l.name for l in REFUTED_MR if not hunt(l, max_n=3).refuted]
    alg = AlgebraModel(builtin_algebra())
    missing += [l.name for l in REFUTED_ALG if not check_law(l, model=alg).refuted]
    assert missing == []
    results = repro.run()
    assert results and all(r.ok for r in results), [r.line() for r in results if not r.ok]
    assert time.perf_counter() - t0 < 300


# 5 -------------------------------------------------------------------------

def lit(u, text):
    return o.from_oracle(u, o.parse(text))


# values derived by Kleene iteration in tests/oracles.py
R_NU, S_NU = "a:b,c; b:a", "c:a"
STAR_RS = "c:a"
OMEGA_RS = "a:a; a:a,b; a:a,c; a:a,b,c; b:a; b:a,b; b:a,c; b:a,b,c; c:a"
INF_R_S = "a:a; b:a; c:a"


@criterion(5, "star characterisations and binary omega counterexamples")
def test_fixpoints():
    t0 = time.perf_counter()
    for r in ALL2:
        s = star(r)
        assert s == iter_star_paren(r) == iter_star_bracket(r) == iter_star_powers(r)

    r, s = lit(U3, R_NU), lit(U3, S_NU)
    R, S = o.to_oracle(r), o.to_oracle(s)
    labels = "abc"
    assert o.kleene(lambda X: o.seq(R, X), o.univ(labels), False) == frozenset()
    assert o.star_binary(R, S, labels) == o.parse(STAR_RS)
    assert o.omega_binary(R, S, labels) == o.parse(OMEGA_RS)

    assert omega(r) == const(U3, "empty")
    assert star_binary(r, s) == lit(U3, STAR_RS)
    assert omega_binary(r, s) == lit(U3, OMEGA_RS)
    assert union(omega(r), star_binary(r, s)) < omega_binary(r, s)
    assert seq(infinity(r), s) == lit(U3, INF_R_S)
    assert seq(infinity(r), s) != omega_binary(r, s)
    assert time.perf_counter() - t0 < 120


# 6 -------------------------------------------------------------------------

@criterion(6, "omega-trivial, deflationary and wellfounded coincide")
def test_trichotomy():
    t0 = time.perf_counter()
    for r in ALL2:
        assert is_omega_trivial(r) == is_deflationary(r) == is_wellfounded(r), r
    assert time.perf_counter() - t0 < 120


# 7 -------------------------------------------------------------------------

@criterion(7, "nabla describes the omega of the nonterminal part")
def test_nabla_laws():
    U, one_pi = const(U2, "univ"), const(U2, "one_pi")
    co_pi = const(U2, "co_one_pi")
    for x in ALL2:
        w = omega(nu(x))
        n = nabla(nu(x))
        assert w == seq(n, U)
        assert nu(w) == seq(n, co_pi)
        assert tau(w) == seq(n, one_pi)


# 8 -------------------------------------------------------------------------

@criterion(8, "builtin four-element algebra")
def test_finite_algebra():
    t0 = time.perf_counter()
    alg = builtin_algebra()
    v = check_algebra(alg, "c-trioid")
    assert v.status == HOLDS
    assert alg.check_expected_d()
    for name, labels in ALGEBRA_COUNTEREXAMPLES:
        assert check_at_labels(get_law(name), alg, labels).refuted
    assert time.perf_counter() - t0 < 1


# 9 -------------------------------------------------------------------------

@criterion(9, "Parikh composition against up-closure, par = meet on up-closed")
def test_up_closed_bridge():
    U = const(U2, "univ")
    ups = [up_closure(x) for x in ALL2]
    assert ups == [par(x, U) for x in ALL2]
    for r in ALL2:
        for s, su in zip(ALL2, ups):
            assert parikh_seq(r, su) == par(seq(r, s), U)
    closed = sorted({u.bits for u in ups})
    assert all(is_in_class(MultiRelation(U2, b), "UpClosed") for b in closed)
    for a in closed:
        for b in closed:
            x, y = MultiRelation(U2, a), MultiRelation(U2, b)
            assert par(x, y) == inter(x, y)
