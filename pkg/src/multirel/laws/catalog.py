"""The law catalog.

Every entry records whether the law is expected to hold on all
multirelations (``Valid``) or to have a finite counterexample
(``Refuted``).  Entries that also make sense in an abstract c-monoid or
c-trioid carry an expectation for the builtin four-element algebra and
the axiom groups they belong to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..core import MultirelError
from .terms import Relation, law_variables, parse_law, to_text, variable_sorts

VALID = "Valid"
REFUTED = "Refuted"


class UnknownLawError(MultirelError):
    pass


@dataclass(frozen=True)
class Law:
    name: str
    hypotheses: tuple
    conclusion: Relation
    expected: str
    anchor: str
    groups: tuple = ()
    algebra: str | None = None  # expectation on the builtin algebra
    text: str = field(default="", compare=False)

    @classmethod
    def parse(cls, name, text, expected=VALID, anchor="", groups=(),
              algebra=None):
        hyps, concl = parse_law(text)
        if expected not in (VALID, REFUTED):
            raise MultirelError(f"bad expectation {expected!r}")
        return cls(name, hyps, concl, expected, anchor, tuple(groups),
                   algebra, text)

    @property
    def lhs(self):
        return self.conclusion.lhs

    @property
    def rhs(self):
        return self.conclusion.rhs

    @property
    def rel(self):
        return self.conclusion.rel

    @property
    def variables(self) -> list:
        return law_variables(self.hypotheses, self.conclusion)

    @property
    def sorts(self) -> dict:
        return variable_sorts(self.hypotheses, self.conclusion)

    def statement(self) -> str:
        body = str(self.conclusion)
        if self.hypotheses:
            return ", ".join(str(h) for h in self.hypotheses) + " => " + body
        return body

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "hypotheses": [str(h) for h in self.hypotheses],
            "lhs": to_text(self.lhs),
            "rhs": to_text(self.rhs),
            "rel": self.rel,
            "expected": self.expected,
            "anchor": self.anchor,
        }

    @classmethod
    def from_json(cls, obj) -> "Law":
        hyps = ", ".join(obj.get("hypotheses", []))
        concl = f"{obj['lhs']} {obj['rel']} {obj['rhs']}"
        text = f"{hyps} => {concl}" if hyps else concl
        return cls.parse(obj["name"], text, obj.get("expected", VALID),
                         obj.get("anchor", ""))


PT = ("proto-trioid", "c-trioid")
PBM = ("proto-bi-monoid", "c-monoid", "c-trioid")
CM = ("c-monoid", "c-trioid")


def _entries():
    V, R = VALID, REFUTED
    out = []

    def add(name, text, expected=V, anchor="", groups=(), algebra=None):
        out.append(Law.parse(name, text, expected, anchor, groups, algebra))

    # set-theoretic and proto-trioid laws
    a = "proto-trioid laws of multirelations"
    add("union-assoc", "x + (y + z) = (x + y) + z", anchor=a, groups=PT, algebra=V)
    add("union-comm", "x + y = y + x", anchor=a, groups=PT, algebra=V)
    add("union-zero", "x + 0 = x", anchor=a, groups=PT, algebra=V)
    add("union-idem", "x + x = x", anchor=a, groups=PT, algebra=V)
    add("seq-subassoc", "(x . y) . z <= x . (y . z)", anchor=a)
    add("seq-unit-left", "1s . x = x", anchor=a, groups=PT + PBM, algebra=V)
    add("seq-unit-right", "x . 1s = x", anchor=a, groups=PT + PBM, algebra=V)
    add("seq-left-subdistrib", "x . y + x . z <= x . (y + z)", anchor=a,
        groups=PT, algebra=V)
    add("seq-right-distrib", "(x + y) . z = x . z + y . z", anchor=a,
        groups=PT, algebra=V)
    add("seq-zero-left", "0 . x = 0", anchor=a, groups=PT, algebra=V)
    add("par-assoc", "x || (y || z) = (x || y) || z", anchor=a,
        groups=PT + PBM, algebra=V)
    add("par-comm", "x || y = y || x", anchor=a, groups=PT + PBM, algebra=V)
    add("par-unit", "1p || x = x", anchor=a, groups=PT + PBM, algebra=V)
    add("par-distrib", "x || (y + z) = x || y + x || z", anchor=a,
        groups=PT, algebra=V)
    add("par-zero", "0 || x = 0", anchor=a, groups=PT, algebra=V)
    add("par-seq-subdistrib", "(x || y) . z <= (x . z) || (y . z)", anchor=a)
    add("seq-zero-right-fails", "x . 0 = 0", R, anchor="terminal pairs persist")
    add("seq-assoc-fails", "x . (y . z) <= (x . y) . z", R,
        anchor="sequential composition is not associative")

    a = "stronger laws for subidentities"
    add("seq-assoc-sub-left", "(p:sub . y) . z = p . (y . z)", anchor=a)
    add("seq-assoc-sub-mid", "(x . p:sub) . z = x . (p . z)", anchor=a)
    add("seq-assoc-sub-right", "(x . y) . p:sub = x . (y . p)", anchor=a)
    add("seq-left-distrib-sub", "p:sub . (y + z) = p . y + p . z", anchor=a)

    a = "idempotence of constants and subidentities"
    add("par-idem-sub", "p:sub || p = p", anchor=a)
    add("par-idem-term", "t:term || t = t", anchor=a)
    add("par-idem-univ", "U || U = U", anchor=a)
    add("par-idem-co1p", "n1p || n1p = n1p", anchor=a)

    a = "interaction of sequential and parallel composition"
    add("interaction-1", "(x . 1p) || x = x", anchor=a)
    add("interaction-2", "z || z <= z => (x || y) . z = (x . z) || (y . z)", anchor=a)
    add("interaction-3-sub", "(x || y) . p:sub = (x . p) || (y . p)", anchor=a)
    add("interaction-3-term", "(x || y) . t:term = (x . t) || (y . t)", anchor=a)
    add("interaction-3-univ", "(x || y) . U = (x . U) || (y . U)", anchor=a)
    add("interaction-3-co1p", "(x || y) . n1p = (x . n1p) || (y . n1p)", anchor=a)
    add("interaction-4", "x . (y || z) <= (x . y) || (x . z)", anchor=a)
    add("interaction-5", "p:sub . (y || z) = (p . y) || (p . z)", anchor=a)
    add("seq-assoc-term-left", "(t:term . y) . z = t . (y . z)", anchor=a)
    add("seq-assoc-term-mid", "(x . t:term) . z = x . (t . z)", anchor=a)
    add("seq-assoc-term-right", "(x . y) . t:term = x . (y . t)", anchor=a)
    add("interaction-7", "(p:sub & q:sub) . z = p . z & q . z", anchor=a)

    a = "constants acting on a multirelation, against set-builder forms"
    add("seq-1p-setbuilder", "x . 1p = sb_term(x)", anchor=a)
    add("meet-1p-setbuilder", "x & 1p = sb_zero(x)", anchor=a)
    add("seq-0-setbuilder", "x . 0 = sb_zero(x)", anchor=a)
    add("meet-1s-setbuilder", "x & 1s = sb_sub(x)", anchor=a)
    add("seq-univ-setbuilder", "x . U = sb_univ(x)", anchor=a)
    add("par-univ-upclosure", "x || U = up(x)", anchor=a)

    a = "domain and constants, set-level facts"
    add("mraxiom-1", "((x . 1p) || 1s) . y = (x . 1p) || y", anchor=a)
    add("mraxiom-2", "x . 1p <= 1p", anchor=a)
    add("mraxiom-3", "x . 1p + x . n1p = x . U", anchor=a)
    add("mraxiom-4", "1p & (x + n1p) = x . 0", anchor=a)
    add("mraxiom-5", "((x & 1s) . 1p) || 1s = x & 1s", anchor=a)
    add("mraxiom-6", "((x & n1p) . 1p) || 1s = 1s & (x & n1p) . n1p", anchor=a)
    add("mraxiom-7", "((x & n1p) . 1p) || n1p = (x & n1p) . n1p", anchor=a)
    add("rel-domain-fails", "d(x) <= 1s & x . U", R,
        anchor="relational domain formula misses terminal pairs")
    add("rel-domain-below", "1s & x . U <= d(x)", anchor=a)

    # c-monoids
    a = "c-monoid axioms"
    add("c1", "(x . 1p) || x = x", anchor=a, groups=CM, algebra=V)
    add("c2", "((x . 1p) || 1s) . y = (x . 1p) || y", anchor=a, groups=CM, algebra=V)
    add("c3", "(x || y) . 1p = (x . 1p) || (y . 1p)", anchor=a, groups=CM, algebra=V)
    add("c4", "(x . y) . 1p = x . (y . 1p)", anchor=a, groups=CM, algebra=V)
    add("c5", "1s || 1s = 1s", anchor=a, groups=CM, algebra=V)
    add("c6", "x . 1p <= 1p", anchor="c-trioid axiom", groups=("c-trioid",),
        algebra=V)

    a = "derived c-monoid laws"
    add("dom-retract", "d(d(x)) = d(x)", anchor=a, algebra=V)
    add("term-retract", "(x . 1p) . 1p = x . 1p", anchor=a, algebra=V)
    add("aux-dom-1", "d(x) . y = (x . 1p) || y", anchor=a, algebra=V)
    add("aux-dom-2", "d(x . 1p) . y = (x . 1p) || y", anchor=a, algebra=V)
    add("aux-dom-3", "d(x) . 1p = x . 1p", anchor=a, algebra=V)
    add("aux-dom-4", "d(x . 1p) = d(x)", anchor=a, algebra=V)
    add("aux-dom-5", "1p . 1p = 1p", anchor=a, algebra=V)
    add("aux-dom-6", "d(1p) = 1s", anchor=a, algebra=V)
    add("dom-par", "d(x || y) = d(x) || d(y)", anchor=a, algebra=V)
    add("dom-par-seq", "d(x) || d(y) = d(x) . d(y)", anchor=a, algebra=V)
    add("dom-left-unit", "d(x) . x = x", anchor=a, algebra=V)
    add("dom-locality", "d(x . d(y)) = d(x . y)", anchor=a, algebra=V)
    add("dom-import", "d(d(x) . y) = d(x) . d(y)", anchor=a, algebra=V)
    add("dom-comm", "d(x) . d(y) = d(y) . d(x)", anchor=a, algebra=V)
    add("dom-unit", "d(1s) = 1s", anchor=a, algebra=V)
    add("dom-seq-closed", "d(d(x) . d(y)) = d(x) . d(y)", anchor=a, algebra=V)
    add("dom-par-closed", "d(d(x) || d(y)) = d(x) || d(y)", anchor=a, algebra=V)
    add("term-par-idem", "z:term || z = z", anchor=a, algebra=V)
    add("dom-par-idem", "w:sub || w = w", anchor=a, algebra=V)
    add("dom-seq-par-distrib", "w:sub . (x || y) = (w . x) || (w . y)",
        anchor=a, algebra=V)

    a = "laws that hold for multirelations but not in every c-monoid"
    add("dom-par-right-distrib", "(x || y) . d(z) = (x . d(z)) || (y . d(z))",
        anchor=a, algebra=R)
    add("dom-seq-right-assoc", "(x . y) . d(z) = x . (y . d(z))",
        anchor=a, algebra=R)
    add("one-pi-left-zero", "1p . x = 1p", anchor=a, algebra=R)

    a = "domain laws derivable in c-trioids"
    add("dom-subdecomp", "x <= d(x) . x", anchor=a, algebra=V)
    add("dom-additive", "d(x + y) = d(x) + d(y)", anchor=a, algebra=V)
    add("dom-below-unit", "d(x) <= 1s", anchor=a, algebra=V)
    add("dom-zero", "d(0) = 0", anchor=a, algebra=V)
    add("sub-absorb-1", "p:sub + p . q:sub = p", anchor=a, algebra=V)
    add("sub-absorb-2", "p:sub . (p + q:sub) = p", anchor=a, algebra=V)
    add("sub-distrib-1", "(p:sub + q:sub) . r:sub = p . r + q . r",
        anchor=a, algebra=V)
    add("sub-distrib-2", "p:sub + q:sub . r:sub = (p + q) . (p + r)",
        anchor=a, algebra=V)
    add("sub-glb", "r:sub <= p:sub, r <= q:sub => r <= p . q", anchor=a, algebra=V)
    add("sub-glb-lower", "r:sub <= p:sub . q:sub => r <= p", anchor=a, algebra=V)
    add("term-glb", "s:term <= t:term, s <= u:term => s <= t || u", anchor=a,
        algebra=V)

    # concurrent dynamic algebra
    a = "diamond laws of concurrent dynamic algebra"
    add("dia-union", "dia(x + y, p:sub) = dia(x, p) + dia(y, p)", anchor=a)
    add("dia-seq", "dia(x . y, p:sub) = dia(x, dia(y, p))", anchor=a, algebra=R)
    add("dia-sub", "dia(p:sub, q:sub) = p . q", anchor=a)
    add("dia-par", "dia(x || y, p:sub) = dia(x, p) . dia(y, p)", anchor=a,
        algebra=R)
    add("dia-star-unfold", "p:sub + dia(x, dia(x^*, p)) = dia(x^*, p)", anchor=a)
    add("dia-star-induct", "dia(x, p:sub) <= p => dia(x^*, p) <= p", anchor=a)
    add("star-unfold-le", "1s + x . x^* <= x^*", anchor=a)
    add("star-induct-sub", "p:sub + x . y <= y => x^* . p <= y", anchor=a)

    # c-lattices
    a = "c-lattice axioms"
    add("cl1", "x . 1p + x . n1p = x . U", anchor=a)
    add("cl2", "1p & (x + n1p) = x . 0", anchor=a)
    add("cl3", "x . (y || z) <= (x . y) || (x . z)", anchor=a)
    add("cl4", "z || z <= z => (x || y) . z = (x . z) || (y . z)", anchor=a)
    add("cl5", "x . (y . (z . 0)) = (x . y) . (z . 0)", anchor=a)
    add("cl6", "(x . 0) . y = x . (0 . y)", anchor=a)
    add("cl7", "1s || 1s = 1s", anchor=a)
    add("cl8", "((x . 1p) || 1s) . y = (x . 1p) || y", anchor=a)
    add("cl9", "((x & 1s) . 1p) || 1s = x & 1s", anchor=a)
    add("cl10", "((x & n1p) . 1p) || 1s = 1s & (x & n1p) . n1p", anchor=a)
    add("cl11", "((x & n1p) . 1p) || n1p = (x & n1p) . n1p", anchor=a)

    a = "c-lattice consequences"
    add("co-join", "1p + n1p = U", anchor=a)
    add("co-meet", "1p & n1p = 0", anchor=a)
    add("meet-1p-tau", "x & 1p = x . 0", anchor=a)
    add("sub-dom-fix", "d(p:sub) = p", anchor=a)
    add("dom-fix-sub", "d(x) = x => x <= 1s", anchor=a)
    add("term-below-1p", "t:term <= 1p", anchor=a)
    add("term-tau-fix", "t:term . 0 = t", anchor=a)
    add("below-1p-term", "x <= 1p => x . 1p = x", anchor=a)
    add("vec-dom-fix", "v:vec = d(v) . U", anchor=a)
    add("dom-fix-vec", "d(x) . U = x => (x . 1p) || U = x", anchor=a)
    add("nt-tau-zero", "y:nt . 0 = 0", anchor=a)
    add("tau-zero-nt", "x . 0 = 0 => x <= n1p", anchor=a)
    add("par-self-super", "x <= x || x", anchor=a)
    add("meet-below-par", "x & y <= x || y", anchor=a)
    add("nu-tau-sum", "x = (x & n1p) + x . 0", anchor=a)
    add("sub-nonterminal", "p:sub <= n1p", anchor=a)
    add("term-meet-co1p", "(x . 1p) & n1p = 0", anchor=a)
    add("tau-meet-co1p", "(x . 0) & n1p = 0", anchor=a)
    add("nu-tau-zero", "(x & n1p) . 0 = 0", anchor=a)
    add("one-pi-explicit", "1p = U . 0", anchor=a)
    add("univ-seq-idem", "U . U = U", anchor=a)
    add("univ-seq-co1p", "U . n1p = U", anchor=a)
    add("co1p-seq-univ", "n1p . U = U", anchor=a)
    add("co1p-seq-1p", "n1p . 1p = 1p", anchor=a)
    add("univ-seq-1p", "U . 1p = 1p", anchor=a)
    add("univ-par-co1p", "U || n1p = n1p", anchor=a)
    add("co1p-seq-idem", "n1p . n1p = n1p", anchor=a)
    add("seq-split-zero", "x . y = (x & n1p) . y + x . 0", anchor=a)
    add("sub-meet-nt-seq", "1s & (x & n1p) . y = 1s & x . y", anchor=a)
    add("sub-meet-co1p-univ", "1s & x . n1p = 1s & x . U", anchor=a)
    add("sub-meet-par-co1p", "1s & x || n1p = 1s & x || U", anchor=a)
    add("term-par-co1p-split",
        "(x . 1p) || n1p = (x & n1p) . n1p + (x . 0) || n1p", anchor=a)
    add("term-par-univ-split", "(x . 1p) || U = x . U + (x . 0) || U", anchor=a)

    a = "explicit domain definitions"
    add("dom-univ", "d(U) = 1s", anchor=a)
    add("dom-co1p", "d(n1p) = 1s", anchor=a)
    add("dom-nt-1", "d(x & n1p) = 1s & x . n1p", anchor=a)
    add("dom-nt-2", "d(x & n1p) = 1s & (x & n1p) . U", anchor=a)
    add("dom-nt-3", "d(x & n1p) = 1s & x . U", anchor=a)
    add("dom-nt-4", "d(x & n1p) = 1s & ((x & n1p) . 1p) || n1p", anchor=a)
    add("dom-nt-5", "d(x & n1p) = 1s & ((x & n1p) . 1p) || U", anchor=a)
    add("dom-explicit-split", "d(x) = (1s & x . U) + (x . 0) || 1s", anchor=a)
    add("dom-explicit-1", "d(x) = 1s & (x . 1p) || n1p", anchor=a)
    add("dom-explicit-2", "d(x) = 1s & (x . 1p) || U", anchor=a)
    add("dom-explicit-3", "d(x) = (1p & x . U) || 1s", anchor=a)
    add("dom-vec-1", "d(x & n1p) . U = (x & n1p) . U", anchor=a)
    add("dom-vec-2", "d(x) . n1p = (x & n1p) . n1p + (x . 0) || n1p", anchor=a)
    add("dom-vec-3", "d(x) . U = (x & n1p) . U + (x . 0) || U", anchor=a)
    add("dom-vec-4", "d(x) . U = x . U + (x . 0) || U", anchor=a)
    add("dom-vec-5", "x . n1p = d(x & n1p) . n1p + x . 0", anchor=a)
    add("dom-vec-6", "x . U = d(x & n1p) . U + x . 0", anchor=a)
    add("dom-vec-7a", "d(x . U) = d(x)", anchor=a)
    add("dom-vec-7b", "d(x . n1p) = d(x)", anchor=a)

    # subalgebras
    a = "subalgebra closure"
    add("sub-meet-closed", "d(p:sub & q:sub) = p & q", anchor=a)
    add("sub-seq-meet", "p:sub . q:sub = p & q", anchor=a)
    add("sub-par-meet", "p:sub || q:sub = p & q", anchor=a)
    add("term-par-meet", "s:term || t:term = s & t", anchor=a)
    add("tau-right-unit", "(x . 0) . (y . 0) = x . 0", anchor=a)
    add("tau-closed-union", "x . 0 + y . 0 = (x + y) . 0", anchor=a)
    add("tau-closed-meet", "(x . 0) & (y . 0) = (x & y) . 0", anchor=a)
    add("tau-closed-par", "(x . 0) || (y . 0) = (x || y) . 0", anchor=a)
    add("tau-one-pi", "1p . 0 = 1p", anchor=a)
    add("tau-zero-const", "0 . 0 = 0", anchor=a)
    add("vec-zero", "d(0) . U = 0", anchor=a)
    add("vec-univ", "d(U) . U = U", anchor=a)
    add("vec-union", "d(x) . z + d(y) . z = d(x + y) . z", anchor=a)
    add("vec-par", "(d(x) . U) || (d(y) . U) = d(x || y) . U", anchor=a)
    add("vec-meet-closed", "d(v:vec & w:vec) . U = v & w", anchor=a)
    add("vec-seq-not-closed", "d(v:vec . w:vec) . U = v . w", R,
        anchor="vectors are not closed under sequential composition")
    add("nt-closed-seq", "(x:nt . y:nt) & n1p = x . y", anchor=a)
    add("nt-closed-par", "(x:nt || y:nt) & n1p = x || y", anchor=a)
    add("nt-closed-union", "(x:nt + y:nt) & n1p = x + y", anchor=a)
    add("nt-closed-meet", "(x:nt & y:nt) & n1p = x & y", anchor=a)
    add("one-sigma-nt", "1s & n1p = 1s", anchor=a)
    add("tarski", "x & n1p != 0 => n1p . ((x & n1p) . n1p) = n1p",
        anchor="Tarski's rule for nonterminal multirelations")
    nv = "d(v:nt) . n1p = v, d(w:nt) . n1p = w"
    a = "nonterminal vectors"
    add("ntvec-seq-nonzero", f"{nv}, w != 0 => v . w = v", anchor=a)
    add("ntvec-seq-zero", f"{nv} => v . 0 = 0", anchor=a)
    add("ntvec-par-meet", f"{nv} => v || w = v & w", anchor=a)
    add("ntvec-seq-closed", f"{nv} => (v . w) . n1p = v . w", anchor=a)
    add("ntvec-union-closed", f"{nv} => (v + w) . n1p = v + w", anchor=a)
    add("ntvec-meet-closed", f"{nv} => (v & w) . n1p = v & w", anchor=a)
    add("ntvec-par-closed", f"{nv} => (v || w) . n1p = v || w", anchor=a)
    add("ntvec-zero-left", "0 . n1p = 0", anchor=a)
    add("sub-meet-seq-nt", "(d(x) & d(y)) . z = d(x) . z & d(y) . z", anchor=a)

    # isomorphisms
    a = "round trips between subidentities, terminals and vectors"
    add("iso-sub-vec", "d(d(x) . U) = d(x)", anchor=a)
    add("iso-vec-sub", "d((x . 1p) || U) . U = (x . 1p) || U", anchor=a)
    add("iso-term-vec", "((x . 1p) || U) . 1p = x . 1p", anchor=a)
    add("iso-vec-term", "(((x . 1p) || U) . 1p) || U = (x . 1p) || U", anchor=a)
    a = "round trips for nonterminal multirelations"
    add("iso-nt-sub-term", "d(d(x & n1p) . 1p) = d(x & n1p)", anchor=a)
    add("iso-nt-term-sub", "d((x & n1p) . 1p) . 1p = (x & n1p) . 1p", anchor=a)
    add("iso-nt-sub-vec", "d(d(x & n1p) . n1p) = d(x & n1p)", anchor=a)
    add("iso-nt-vec-sub", "d((x & n1p) . n1p) . n1p = (x & n1p) . n1p", anchor=a)
    add("iso-nt-term-vec",
        "(((x & n1p) . 1p) || n1p) . 1p = (x & n1p) . 1p", anchor=a)
    add("iso-nt-vec-term",
        "(((x & n1p) . n1p) . 1p) || n1p = (x & n1p) . n1p", anchor=a)
    out.extend(_preservation_laws())

    # terminal and nonterminal parts
    a = "tau and nu are complementary interior operators"
    add("tau-deflate", "tau(x) <= x", anchor=a)
    add("tau-idem", "tau(tau(x)) = tau(x)", anchor=a)
    add("tau-iso", "x <= y => tau(x) <= tau(y)", anchor=a)
    add("nu-deflate", "nu(x) <= x", anchor=a)
    add("nu-idem", "nu(nu(x)) = nu(x)", anchor=a)
    add("nu-iso", "x <= y => nu(x) <= nu(y)", anchor=a)
    add("tau-nu-sum", "tau(x) + nu(x) = x", anchor=a)
    add("tau-nu-disjoint", "tau(x) & nu(x) = 0", anchor=a)
    add("tau-of-nu", "tau(nu(x)) = 0", anchor=a)
    add("nu-of-tau", "nu(tau(x)) = 0", anchor=a)
    a = "tau and nu of constants"
    for c, t, v in [("0", "0", "0"), ("1s", "0", "1s"), ("1p", "1p", "0"),
                    ("n1p", "0", "n1p"), ("U", "1p", "n1p")]:
        add(f"tau-const-{c}", f"tau({c}) = {t}", anchor=a)
        add(f"nu-const-{c}", f"nu({c}) = {v}", anchor=a)
    a = "tau and nu as homomorphisms"
    add("tau-union", "tau(x + y) = tau(x) + tau(y)", anchor=a)
    add("nu-union", "nu(x + y) = nu(x) + nu(y)", anchor=a)
    add("tau-meet", "tau(x & y) = tau(x) & tau(y)", anchor=a)
    add("nu-meet", "nu(x & y) = nu(x) & nu(y)", anchor=a)
    add("tau-par", "tau(x || y) = tau(x) || tau(y)", anchor=a)
    add("nu-par-decomp",
        "nu(x || y) = d(tau(x)) . nu(y) + d(tau(y)) . nu(x) + nu(x) || nu(y)",
        anchor=a)
    add("tau-seq-decomp", "tau(x . y) = tau(x) + nu(x) . tau(y)", anchor=a)
    a = "tau and nu fail to be homomorphisms"
    add("tau-seq-hom", "tau(x . y) = tau(x) . tau(y)", R, anchor=a)
    add("nu-seq-hom", "nu(x . y) = nu(x) . nu(y)", R, anchor=a)
    add("nu-par-hom", "nu(x || y) = nu(x) || nu(y)", R, anchor=a)
    a = "splitting compositions into terminal and nonterminal parts"
    add("seq-split", "x . y = tau(x) + nu(x) . y", anchor=a)
    add("par-split",
        "x || y = nu(x) || nu(y) + d(tau(x)) . nu(y) + d(tau(y)) . nu(x)"
        " + tau(x) || tau(y)", anchor=a)
    add("par-split-exchanged",
        "x || y = nu(x) || nu(y) + d(nu(x)) . tau(y) + d(nu(y)) . tau(x)"
        " + tau(x) || tau(y)", R,
        anchor="parallel split with tau and nu exchanged in the middle terms")
    a = "terminal and nonterminal elements form ideals"
    add("nt-down-closed", "y <= x:nt => y <= n1p", anchor=a)
    add("term-down-closed", "y <= t:term => y . 1p = y", anchor=a)
    add("nt-union-closed", "x:nt + y:nt <= n1p", anchor=a)
    add("term-union-closed", "(s:term + t:term) . 1p = s + t", anchor=a)
    add("nt-par-ideal", "x:nt || y <= n1p", anchor=a)
    add("term-seq-ideal-left", "(t:term . y) . 1p = t . y", anchor=a)
    add("term-seq-ideal-right", "(y . t:term) . 1p = y . t", anchor=a)
    a = "ideal properties that fail"
    add("term-nt-seq-nt", "t:term . x:nt <= n1p", R, anchor=a)
    add("nt-term-seq-nt", "x:nt . t:term <= n1p", R, anchor=a)
    add("term-nt-par-term", "(t:term || x:nt) . 1p = t || x", R, anchor=a)
    a = "precongruence properties of the tau and nu preorders"
    tp, vp = "tau(x) <= tau(y) =>", "nu(x) <= nu(y) =>"
    add("tau-pre-union", f"{tp} tau(x + z) <= tau(y + z)", anchor=a)
    add("tau-pre-meet", f"{tp} tau(x & z) <= tau(y & z)", anchor=a)
    add("tau-pre-par", f"{tp} tau(x || z) <= tau(y || z)", anchor=a)
    add("tau-pre-seq-left", f"{tp} tau(z . x) <= tau(z . y)", anchor=a)
    add("nu-pre-union", f"{vp} nu(x + z) <= nu(y + z)", anchor=a)
    add("nu-pre-meet", f"{vp} nu(x & z) <= nu(y & z)", anchor=a)
    add("nu-pre-seq-right", f"{vp} nu(x . z) <= nu(y . z)", anchor=a)
    add("tau-cong-par", "tau(x) = tau(y) => tau(x || z) = tau(y || z)", anchor=a)
    add("nu-cong-seq-right", "nu(x) = nu(y) => nu(x . z) = nu(y . z)", anchor=a)
    a = "missing precongruence properties"
    add("tau-pre-seq-right", f"{tp} tau(x . z) <= tau(y . z)", R, anchor=a)
    add("nu-pre-par", f"{vp} nu(x || z) <= nu(y || z)", R, anchor=a)
    add("nu-pre-seq-left", f"{vp} nu(z . x) <= nu(z . y)", R, anchor=a)
    add("tau-cong-seq-right", "tau(x) = tau(y) => tau(x . z) = tau(y . z)",
        R, anchor=a)
    add("nu-cong-par", "nu(x) = nu(y) => nu(x || z) = nu(y || z)", R, anchor=a)
    add("nu-cong-seq-left", "nu(x) = nu(y) => nu(z . x) = nu(z . y)", R, anchor=a)

    # finite iteration
    a = "finite iteration as a least fixpoint"
    add("star-unfold", "1s + x . x^* = x^*", anchor=a)
    add("star2-unfold", "y + x . star2(x, y) = star2(x, y)", anchor=a)
    add("star-induct", "1s + x . y <= y => x^* <= y", anchor=a)
    add("star2-induct", "z + x . y <= y => star2(x, z) <= y", anchor=a)
    add("star-as-binary", "x^* = star2(x, 1s)", anchor=a)
    add("star-split", "x^* = nu(x)^* . (1s + tau(x))", anchor=a)
    add("tau-star", "tau(x)^* = 1s + tau(x)", anchor=a)
    add("tau-of-star", "tau(x^*) = nu(x^*) . tau(x)", anchor=a)
    add("nu-star-below", "nu(x)^* <= nu(x^*)", anchor=a)
    add("tau-nu-star", "tau(nu(x)^*) = 0", anchor=a)
    add("nu-nu-star", "nu(nu(x)^*) = nu(x)^*", anchor=a)
    add("nu-tau-star", "nu(tau(x)^*) = 1s", anchor=a)
    add("tau-tau-star", "tau(tau(x)^*) = tau(x)", anchor=a)
    add("nu-star-above", "nu(x^*) <= nu(x)^*", R,
        anchor="nonterminal part of the star is not the star of the part")
    add("star-iter-paren", "x^* = starp(x)", anchor=a)
    add("star-paren-bracket", "starp(x) = starb(x)", anchor=a)
    add("star-bracket-powers", "starb(x) = starsum(x)", anchor=a)
    add("star-nu-powers", "starp(nu(x)) = starsum(nu(x))", anchor=a)
    add("star-iter-split", "starp(x) = starsum(nu(x)) . (1s + tau(x))", anchor=a)

    # infinite iteration
    a = "infinite iteration as a greatest fixpoint"
    add("omega-unfold", "x^w = x . x^w", anchor=a)
    add("omega-iso", "x <= y => x^w <= y^w", anchor=a)
    add("omega-coinduct", "y <= x . y => y <= x^w", anchor=a)
    add("omega2-unfold", "omega2(x, y) = y + x . omega2(x, y)", anchor=a)
    add("omega2-coinduct", "z <= y + x . z => z <= omega2(x, y)", anchor=a)
    add("omega-as-binary", "x^w = omega2(x, 0)", anchor=a)
    add("omega-const-0", "0^w = 0", anchor=a)
    add("omega-const-1p", "1p^w = 1p", anchor=a)
    add("omega-const-1s", "1s^w = U", anchor=a)
    add("omega-const-co1p", "n1p^w = U", anchor=a)
    add("omega-const-univ", "U^w = U", anchor=a)
    add("tau-omega-1", "tau(x) <= tau(x^w)", anchor=a)
    add("tau-omega-2", "tau(x)^w = tau(x)", anchor=a)
    add("tau-omega-3", "tau(x)^w <= tau(x^w)", anchor=a)
    add("omega-split", "nu(x)^w + nu(x)^* . tau(x) <= x^w", anchor=a)
    add("omega-fusion", "x^w + star2(x, y) <= omega2(x, y)", anchor=a)
    add("omega-fusion-strict", "omega2(x, y) <= x^w + star2(x, y)", R,
        anchor="binary omega is not omega plus binary star")
    add("omega2-vs-infinity", "omega2(x, y) = x^inf . y", R,
        anchor="binary omega is not infinity followed by y")
    add("inf-unfold", "x^inf = 1s + x . x^inf", anchor=a)
    add("inf-as-binary", "x^inf = omega2(x, 1s)", anchor=a)
    add("inf-coinduct", "y <= 1s + x . y => y <= x^inf", anchor=a)
    add("nabla-unfold", "nabla(x) = dia(x, nabla(x))", anchor=a)
    add("nabla-coinduct", "p:sub <= dia(x, p) => p <= nabla(x)", anchor=a)
    add("nabla-fusion-le", "nabla(x) + dia(x^*, q:sub) <= nabla(x) + dia(x^*, q)",
        anchor=a)
    add("nu-omega-nabla", "nu(x)^w = nabla(nu(x)) . U", anchor=a)
    add("nu-omega-nabla-nt", "nu(nu(x)^w) = nabla(nu(x)) . n1p", anchor=a)
    add("nu-omega-nabla-term", "tau(nu(x)^w) = nabla(nu(x)) . 1p", anchor=a)
    add("nu-omega-approx", "nabla(nu(x)) . U + nu(x)^* . tau(x) <= x^w", anchor=a)

    # counterexamples
    a = "failures of lattice-style parallel laws"
    add("par-self-below", "x || x <= x", R, anchor=a)
    add("below-par", "x <= x || y", R, anchor=a)
    add("par-meet-distrib", "x || y & x || z <= x || (y & z)", R, anchor=a)
    add("seq-superassoc", "x . (y . z) <= (x . y) . z", R, anchor=a)
    add("par-seq-superdistrib", "(x . z) || (y . z) <= (x || y) . z", R, anchor=a)
    add("seq-par-superdistrib",
        "x || x <= x, y || y <= y, z || z <= z => (x . y) || (x . z) <= x . (y || z)",
        R, anchor=a)
    a = "interchange laws fail in both directions"
    add("interchange-1a", "(w || x) . (y || z) <= (w . y) || (x . z)", R, anchor=a)
    add("interchange-1b", "(w . y) || (x . z) <= (w || x) . (y || z)", R, anchor=a)
    add("interchange-2a", "(x || y) . z <= x || (y . z)", R, anchor=a)
    add("interchange-2b", "x || (y . z) <= (x || y) . z", R, anchor=a)
    add("interchange-3a", "x . (y || z) <= (x . y) || z", R, anchor=a)
    add("interchange-3b", "(x . y) || z <= x . (y || z)", R, anchor=a)
    add("interchange-4a", "x . y <= x || y", R, anchor=a)
    add("interchange-4b", "x || y <= x . y", R, anchor=a)

    # up-closed multirelations
    a = "Parikh composition and up-closure"
    add("parikh-peleg", "x ; (y || U) = (x . y) || U", anchor=a)
    add("parikh-up-preserve", "(x ; (y || U)) || U = x ; (y || U)", anchor=a)
    add("parikh-simulation", "(x || U) ; (y || U) = ((x || U) . (y || U)) || U",
        anchor=a)
    add("parikh-up-assoc", "(x:up ; y:up) ; z:up = x ; (y ; z)", anchor=a)
    add("peleg-up-fails", "(x:up . y:up) || U = x . y", R,
        anchor="Peleg composition does not preserve up-closure")
    add("upclosed-par-meet-1", "x || U & y || U = (x || U) || (y || U)", anchor=a)
    add("upclosed-par-idem", "(x || U) || (x || U) = x || U", anchor=a)
    add("upclosed-par-distrib",
        "(x || y) . (z || U) = (x . (z || U)) || (y . (z || U))", anchor=a)
    add("upclosed-par-is-meet", "x:up || y:up = x & y", anchor=a)
    return out


# structure-preserving maps between the subalgebras: (name, argument
# sort, hypothesis template or None, map template, bottom, top of the
# source, image of top, whether sequential composition is preserved)
_MAPS = [
    ("sub-to-term", "sub", None, "({}) . 1p", "1s", "1p", False),
    ("term-to-sub", "term", None, "d({})", "1p", "1s", False),
    ("sub-to-vec", "sub", None, "({}) . U", "1s", "U", False),
    ("vec-to-sub", "vec", None, "d({})", "U", "1s", False),
    ("term-to-vec", "term", None, "({}) || U", "1p", "U", False),
    ("vec-to-term", "vec", None, "({}) . 1p", "U", "1p", True),
    ("sub-to-ntvec", "sub", None, "({}) . n1p", "1s", "n1p", False),
    ("ntvec-to-sub", "nt", "d({v}) . n1p = {v}", "d({})", "n1p", "1s", False),
    ("term-to-ntvec", "term", None, "({}) || n1p", "1p", "n1p", False),
    ("ntvec-to-term", "nt", "d({v}) . n1p = {v}", "({}) . 1p", "n1p", "1p", False),
]


def _preservation_laws():
    out = []
    anchor = "structure preservation of the subalgebra isomorphisms"
    for name, sort, hyp, f, top, image, seq_ok in _MAPS:
        x, y = f"x:{sort}", f"y:{sort}"
        hyps = ""
        if hyp:
            hyps = hyp.format(v=x) + ", " + hyp.format(v=y) + " => "
        fx, fy = f.format("x"), f.format("y")
        for op, sym in [("union", "+"), ("meet", "&"), ("par", "||")]:
            text = f"{hyps}{f.format(f'{x} {sym} {y}')} = ({fx}) {sym} ({fy})"
            out.append(Law.parse(f"{name}-{op}", text, VALID, anchor))
        out.append(Law.parse(f"{name}-bottom", f"{f.format('0')} = 0", VALID, anchor))
        out.append(Law.parse(f"{name}-top", f"{f.format(top)} = {image}", VALID,
                             anchor))
        text = f"{hyps}{f.format(f'{x} . {y}')} = ({fx}) . ({fy})"
        out.append(Law.parse(f"{name}-seq", text, VALID if seq_ok else REFUTED,
                             anchor if seq_ok else
                             "sequential composition is not preserved"))
    return out


@lru_cache(maxsize=1)
def _catalog():
    laws = tuple(_entries())
    names = [l.name for l in laws]
    dup = {n for n in names if names.count(n) > 1}
    if dup:
        raise MultirelError(f"duplicate law names: {sorted(dup)}")
    return laws


def catalog() -> list:
    return list(_catalog())


def get_law(name: str) -> Law:
    for law in _catalog():
        if law.name == name:
            return law
    raise UnknownLawError(f"no law named {name!r}")


def axiom_group(group: str) -> list:
    return [l for l in _catalog() if group in l.groups]
