"""Replayable counterexamples.

Each item either replays a stored witness (checking that the hypotheses
hold, the conclusion fails, and any recorded intermediate values come
out as stated), asks the hunter for a witness, or evaluates a law in the
builtin finite algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import MultirelError, make_universe, parse_literal
from .algebra import builtin_algebra
from .catalog import get_law
from .checker import check_at_labels, evaluate_at, hunt
from .models import AlgebraModel, MultirelModel
from .terms import parse_term, variables


class UnknownReproError(MultirelError):
    pass


@dataclass(frozen=True)
class ReproResult:
    name: str
    ok: bool
    kind: str
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name} [{self.kind}] {self.detail}"


@dataclass(frozen=True)
class Stored:
    """A witness over an explicit universe, given as inline literals."""
    name: str
    law: str
    universe: str
    bindings: dict
    values: dict = field(default_factory=dict)  # term text -> literal

    kind = "stored"

    def run(self) -> ReproResult:
        u = make_universe(self.universe.split(","))
        model = MultirelModel(u.n, u)
        law = get_law(self.law)
        env = {k: parse_literal(v, u).bits for k, v in self.bindings.items()}
        values = tuple(env[v] for v in law.variables)
        hyp_ok, concl_ok = evaluate_at(law, model, values)
        problems = []
        if not hyp_ok:
            problems.append("hypotheses fail")
        if concl_ok:
            problems.append("conclusion holds")
        for text, lit in self.values.items():
            t = parse_term(text)
            order = variables(t)
            got = model.compile(t, order)(tuple(env[v] for v in order))
            if got != parse_literal(lit, u).bits:
                problems.append(f"{text} = {model.describe(got)}, not {lit}")
        detail = f"{self.law}: " + ("; ".join(problems) or "violated as stated")
        return ReproResult(self.name, not problems, self.kind, detail)


@dataclass(frozen=True)
class Hunted:
    """A refutation whose witness comes from the hunter."""
    name: str
    law: str
    in_algebra: bool = False

    @property
    def kind(self):
        return "hunted-algebra" if self.in_algebra else "hunted"

    def run(self) -> ReproResult:
        law = get_law(self.law)
        model = AlgebraModel(builtin_algebra()) if self.in_algebra else None
        v = hunt(law, model=model)
        detail = f"{self.law}: " + (v.line().split(" ", 3)[-1] if v.refuted
                                    else f"no witness ({v.space})")
        return ReproResult(self.name, v.refuted, self.kind, detail)


@dataclass(frozen=True)
class InAlgebra:
    """A law evaluated at one assignment in the builtin algebra."""
    name: str
    law: str
    labels: dict

    kind = "algebra"

    def run(self) -> ReproResult:
        v = check_at_labels(get_law(self.law), builtin_algebra(), self.labels)
        detail = f"{self.law}: " + ("violated at " + str(self.labels) if v.refuted
                                    else "not violated")
        return ReproResult(self.name, v.refuted, self.kind, detail)


E = "{}"
A, AB, ABC = "a", "a,b", "a,b,c"

ITEMS = [
    Stored("relational-domain", "rel-domain-fails", A, {"x": "{(a,∅)}"},
           {"d(x)": "{(a,{a})}", "1s & x . U": E}),
    # lattice-style parallel laws
    Hunted("par-not-below-self", "par-self-below"),
    Stored("below-par", "below-par", AB,
           {"x": "{(a,{a})}", "y": "{(a,{a,b})}"}, {"x || y": "{(a,{a,b})}"}),
    Stored("par-meet-distrib", "par-meet-distrib", ABC,
           {"x": "{(a,{b,c})}", "y": "{(a,{b})}", "z": "{(a,{c})}"},
           {"x || y": "{(a,{b,c})}", "x || (y & z)": E}),
    Hunted("seq-superassoc", "seq-superassoc"),
    Hunted("par-seq-superdistrib", "par-seq-superdistrib"),
    Stored("seq-par-superdistrib", "seq-par-superdistrib", A,
           {"x": "{(a,{a}),(a,∅)}", "y": "{(a,{a})}", "z": E},
           {"x . (y || z)": "{(a,∅)}", "(x . y) || (x . z)": "{(a,{a}),(a,∅)}"}),
    # interchange
    Hunted("interchange-1-forward", "interchange-1a"),
    Hunted("interchange-1-backward", "interchange-1b"),
    Stored("interchange-2-forward", "interchange-2a", AB,
           {"x": "{(a,{a,b})}", "y": "{(a,{a,b})}", "z": "{(a,{a}),(b,{a})}"},
           {"(x || y) . z": "{(a,{a})}", "x || (y . z)": "{(a,{a,b})}"}),
    Stored("interchange-2-backward", "interchange-2b", AB,
           {"x": "{(a,{a,b})}", "y": "{(a,{a,b})}", "z": "{(a,{a}),(b,{a})}"}),
    Stored("interchange-3-forward", "interchange-3a", AB,
           {"x": "{(a,{a,b})}", "y": "{(a,{a}),(b,{a})}",
            "z": "{(a,{a}),(b,{a,b})}"},
           {"x . (y || z)": "{(a,{a,b})}", "(x . y) || z": "{(a,{a})}"}),
    Stored("interchange-3-backward", "interchange-3b", AB,
           {"x": "{(a,{a,b})}", "y": "{(a,{a}),(b,{a})}",
            "z": "{(a,{a}),(b,{a,b})}"}),
    Stored("interchange-4-forward", "interchange-4a", AB,
           {"x": "{(a,{a,b})}", "y": "{(a,{a}),(b,{a})}"},
           {"x . y": "{(a,{a})}", "x || y": "{(a,{a,b})}"}),
    Stored("interchange-4-backward", "interchange-4b", AB,
           {"x": "{(a,{a,b})}", "y": "{(a,{a}),(b,{a})}"}),
    # the four-element algebra
    InAlgebra("algebra-dom-par-right-distrib", "dom-par-right-distrib",
              {"x": "a", "y": "1p", "z": "0"}),
    InAlgebra("algebra-dom-seq-right-assoc", "dom-seq-right-assoc",
              {"x": "a", "y": "1p", "z": "0"}),
    InAlgebra("algebra-dia-seq", "dia-seq", {"x": "a", "y": "1p", "p": "0"}),
    InAlgebra("algebra-dia-par", "dia-par", {"x": "a", "y": "1p", "p": "0"}),
    Hunted("algebra-hunt-dom-par-right-distrib", "dom-par-right-distrib", True),
    Hunted("algebra-hunt-dom-seq-right-assoc", "dom-seq-right-assoc", True),
    Hunted("algebra-hunt-one-pi-left-zero", "one-pi-left-zero", True),
    # terminal and nonterminal parts
    Stored("tau-seq-hom", "tau-seq-hom", AB,
           {"x": "{(a,∅),(b,{a})}", "y": "{(a,∅)}"},
           {"tau(x) . tau(y)": "{(a,∅)}", "tau(x . y)": "{(a,∅),(b,∅)}"}),
    Stored("nu-seq-hom", "nu-seq-hom", AB,
           {"x": "{(a,{a,b})}", "y": "{(a,∅),(b,{a,b})}"},
           {"nu(x . y)": "{(a,{a,b})}", "nu(x) . nu(y)": E}),
    Stored("nu-par-hom", "nu-par-hom", A, {"x": "{(a,{a})}", "y": "{(a,∅)}"},
           {"nu(x || y)": "{(a,{a})}", "nu(x) || nu(y)": E}),
    Stored("ideal-term-nt-seq", "term-nt-seq-nt", A,
           {"t": "{(a,∅)}", "x": "{(a,{a})}"}, {"t . x": "{(a,∅)}"}),
    Stored("ideal-nt-term-seq", "nt-term-seq-nt", A,
           {"t": "{(a,∅)}", "x": "{(a,{a})}"}, {"x . t": "{(a,∅)}"}),
    Stored("ideal-term-nt-par", "term-nt-par-term", A,
           {"t": "{(a,∅)}", "x": "{(a,{a})}"}, {"t || x": "{(a,{a})}"}),
    Stored("tau-pre-seq-right", "tau-pre-seq-right", A,
           {"x": "{(a,{a})}", "y": E, "z": "{(a,∅)}"},
           {"tau(x . z)": "{(a,∅)}", "tau(y . z)": E}),
    Stored("nu-pre-par", "nu-pre-par", A,
           {"x": "{(a,∅)}", "y": E, "z": "{(a,{a})}"},
           {"nu(x || z)": "{(a,{a})}", "nu(y || z)": E}),
    Stored("nu-pre-seq-left", "nu-pre-seq-left", AB,
           {"x": "{(a,∅),(b,{b})}", "y": "{(b,{b})}", "z": "{(a,{a,b})}"},
           {"nu(x)": "{(b,{b})}", "nu(z . x)": "{(a,{b})}", "nu(z . y)": E}),
    Stored("tau-cong-seq-right", "tau-cong-seq-right", A,
           {"x": "{(a,{a})}", "y": E, "z": "{(a,∅)}"}),
    Stored("nu-cong-par", "nu-cong-par", A,
           {"x": "{(a,∅)}", "y": E, "z": "{(a,{a})}"}),
    Stored("nu-cong-seq-left", "nu-cong-seq-left", AB,
           {"x": "{(a,∅),(b,{b})}", "y": "{(b,{b})}", "z": "{(a,{a,b})}"}),
    # iteration
    Stored("nu-star", "nu-star-above", "a,b,c,d",
           {"x": "{(a,{b,c}),(b,∅),(c,{d})}"}),
    Stored("binary-omega-strict", "omega-fusion-strict", ABC,
           {"x": "{(a,{b,c}),(b,{a})}", "y": "{(c,{a})}"}, {"x^w": E}),
    Stored("binary-omega-vs-infinity", "omega2-vs-infinity", ABC,
           {"x": "{(a,{b,c}),(b,{a})}", "y": "{(c,{a})}"}),
    # structure preservation
    Stored("preserve-seq-sub-to-term", "sub-to-term-seq", A,
           {"x": "{(a,{a})}", "y": E},
           {"(x . y) . 1p": E, "(x . 1p) . (y . 1p)": "{(a,∅)}"}),
    Stored("preserve-seq-sub-to-vec", "sub-to-vec-seq", A,
           {"x": "{(a,{a})}", "y": E},
           {"(x . y) . U": E, "(x . U) . (y . U)": "{(a,∅)}"}),
    Stored("preserve-seq-term-to-sub", "term-to-sub-seq", A,
           {"x": "{(a,∅)}", "y": E}, {"d(x . y)": "{(a,{a})}", "d(x) . d(y)": E}),
    Stored("preserve-seq-term-to-vec", "term-to-vec-seq", A,
           {"x": "{(a,∅)}", "y": E},
           {"(x . y) || U": "{(a,∅),(a,{a})}", "(x || U) . (y || U)": "{(a,∅)}"}),
    Stored("preserve-seq-term-to-ntvec", "term-to-ntvec-seq", A,
           {"x": "{(a,∅)}", "y": E}),
    Stored("preserve-seq-ntvec-to-sub", "ntvec-to-sub-seq", AB,
           {"x": "{(a,{a}),(a,{b}),(a,{a,b})}", "y": "{(b,{a}),(b,{b}),(b,{a,b})}"},
           {"d(x . y)": "{(a,{a})}", "d(x) . d(y)": E}),
    Hunted("preserve-seq-vec-to-sub", "vec-to-sub-seq"),
    Hunted("preserve-seq-sub-to-ntvec", "sub-to-ntvec-seq"),
    Hunted("preserve-seq-ntvec-to-term", "ntvec-to-term-seq"),
    # up-closed multirelations
    Stored("upclosed-peleg", "peleg-up-fails", A,
           {"x": "{(a,∅),(a,{a})}", "y": E}, {"x . y": "{(a,∅)}"}),
]


def items() -> list:
    return list(ITEMS)


def get_item(name: str):
    for it in ITEMS:
        if it.name == name:
            return it
    raise UnknownReproError(f"no repro item named {name!r}")


def run(names=None) -> list:
    chosen = ITEMS if names is None else [get_item(n) for n in names]
    return [it.run() for it in chosen]
