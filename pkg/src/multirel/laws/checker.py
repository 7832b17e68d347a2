"""Exhaustive and sampled law checking, the counterexample hunter and the
finite algebra checker."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

from ..core import MultiRelation, MultirelError, UniverseMismatchError
from ..structure import ClassTag, is_in_class
from .algebra import FiniteAlgebra, builtin_algebra
from .catalog import REFUTED, VALID, Law, axiom_group, catalog, get_law
from .models import (AlgebraModel, MultirelModel, UnboundVariableError,
                     UnsupportedOperationError)
from .terms import SortError, parse_term, variables

EXHAUSTIVE_LIMIT = 1 << 26
SUITE_EXHAUSTIVE_LIMIT = 1 << 18
HUNT_EXHAUSTIVE_LIMIT = 1 << 20
DEFAULT_SEED = 42

HOLDS, INCONCLUSIVE = "Holds", "Inconclusive"


class SearchSpaceError(MultirelError):
    """Exhaustive search requested over too many assignments."""


@dataclass(frozen=True)
class Sampled:
    k: int
    seed: int = DEFAULT_SEED


EXHAUSTIVE = "exhaustive"


def parse_mode(mode):
    """Accept ``"exhaustive"``, a ``Sampled`` or ``("sampled", k, seed)``."""
    if mode == EXHAUSTIVE or isinstance(mode, Sampled):
        return mode
    if isinstance(mode, tuple) and len(mode) in (2, 3) and mode[0] == "sampled":
        return Sampled(*mode[1:])
    raise MultirelError(f"unknown mode {mode!r}")


@dataclass
class Verdict:
    status: str  # Holds, Refuted or Inconclusive
    law: str
    space: str
    checked: int = 0
    satisfying: int = 0  # assignments that passed the hypotheses
    witness: dict | None = None
    values: tuple | None = field(default=None, repr=False)
    details: str = ""
    parts: tuple = ()
    n: int | None = None  # universe size, for multirelation verdicts

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED

    def line(self) -> str:
        out = f"LAW {self.law} {self.status.upper()}"
        if self.witness is not None:
            out += " " + json.dumps(self.witness, ensure_ascii=False)
        return out

    def to_json(self) -> dict:
        return {"law": self.law, "status": self.status, "space": self.space,
                "checked": self.checked, "satisfying": self.satisfying,
                "witness": self.witness, "details": self.details}


@lru_cache(maxsize=8)
def multirel_model(n: int) -> MultirelModel:
    return MultirelModel(n)


def _compiled(law: Law, model):
    order = law.variables
    hyps = [model.compile_relation(h, order) for h in law.hypotheses]
    concl = model.compile_relation(law.conclusion, order)
    return order, hyps, concl


def evaluate_at(law: Law, model, values) -> tuple:
    """(hypotheses hold, conclusion holds) at one assignment."""
    order, hyps, concl = _compiled(law, model)
    sorts = law.sorts
    for name, v in zip(order, values):
        if not model.in_sort(v, sorts[name]):
            raise SortError(f"{name} = {model.describe(v)} is not {sorts[name]}")
    return all(h(values) for h in hyps), concl(values)


def search_space(law: Law, model) -> int:
    sorts = law.sorts
    return prod(model.class_size(sorts[v]) for v in law.variables)


def check_law(law: Law, n: int | None = None, mode=EXHAUSTIVE, model=None,
              limit: int = EXHAUSTIVE_LIMIT) -> Verdict:
    """Check ``law`` on multirelations over ``n`` points, or on ``model``.

    Hypotheses filter assignments.  Exhaustive search walks assignments in
    canonical order and reports the first violation.
    """
    if model is None:
        if n is None:
            raise MultirelError("need a universe size or a model")
        model = multirel_model(n)
    mode = parse_mode(mode)
    order, hyps, concl = _compiled(law, model)
    sorts = [law.sorts[v] for v in order]
    space = search_space(law, model)

    def witness(values):
        return {v: model.to_json(x) for v, x in zip(order, values)}

    checked = satisfying = 0
    if mode == EXHAUSTIVE:
        if space > limit:
            raise SearchSpaceError(
                f"{law.name}: {space} assignments exceed the limit {limit}")
        desc = f"{model.descriptor}, exhaustive, {space} assignments"
        source = itertools.product(*(model.members(s) for s in sorts))
    else:
        rng = random.Random(mode.seed)
        draw = [model.sampler(s, rng) for s in sorts]
        desc = (f"{model.descriptor}, sampled, {mode.k} of {space} "
                f"assignments, seed {mode.seed}")
        source = (tuple(f() for f in draw) for _ in range(mode.k))
    for values in source:
        checked += 1
        if not all(h(values) for h in hyps):
            continue
        satisfying += 1
        if not concl(values):
            return Verdict(REFUTED, law.name, desc, checked, satisfying,
                           witness(values), tuple(values), n=model.n)
    status = HOLDS if mode == EXHAUSTIVE else INCONCLUSIVE
    return Verdict(status, law.name, desc, checked, satisfying, n=model.n)


def hunt(law: Law, max_n: int = 3, seed: int = DEFAULT_SEED,
         samples: int = 20000, model=None) -> Verdict:
    """Look for a counterexample, smallest universe first.

    n=1 exhaustively, n=2 exhaustively when the space allows (sampled
    otherwise), n=3 sampled with the given seed.  With an explicit model
    (a finite algebra) the search is a single exhaustive pass.
    """
    if model is not None:
        return check_law(law, model=model)
    last = None
    for n in range(1, max_n + 1):
        m = multirel_model(n)
        if n == 1 or search_space(law, m) <= HUNT_EXHAUSTIVE_LIMIT:
            v = check_law(law, model=m)
        else:
            v = check_law(law, model=m, mode=Sampled(samples, seed))
        if v.refuted:
            return v
        last = v
    if last.status == HOLDS and max_n > 0:
        return last
    return Verdict(INCONCLUSIVE, law.name, last.space, last.checked,
                   last.satisfying, details=f"no witness up to n={max_n}")


@dataclass
class SuiteEntry:
    law: Law
    verdict: Verdict

    @property
    def ok(self) -> bool:
        if self.law.expected == REFUTED:
            return self.verdict.refuted
        return not self.verdict.refuted

    def line(self) -> str:
        mark = "" if self.ok else f"  MISMATCH (expected {self.law.expected})"
        return self.verdict.line() + mark


@dataclass
class SuiteReport:
    entries: list

    @property
    def mismatches(self) -> list:
        return [e for e in self.entries if not e.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def lines(self) -> list:
        out = [e.line() for e in self.entries]
        counts = {}
        for e in self.entries:
            counts[e.verdict.status] = counts.get(e.verdict.status, 0) + 1
        summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
        out.append(f"# {len(self.entries)} laws: {summary}; "
                   f"{len(self.mismatches)} mismatches")
        return out


def check_valid(law: Law, n: int = 2, samples: int = 200000,
                seed: int = DEFAULT_SEED,
                exhaustive_limit: int = SUITE_EXHAUSTIVE_LIMIT) -> Verdict:
    """Check a law at every size up to ``n``: exhaustive where the space is
    small enough, seeded samples otherwise.  Stops at the first refutation."""
    v = None
    for k in range(1, n + 1):
        m = multirel_model(k)
        if search_space(law, m) <= exhaustive_limit:
            v = check_law(law, model=m)
        else:
            v = check_law(law, model=m, mode=Sampled(samples, seed))
        if v.refuted:
            return v
    return v


def run_suite(n: int = 2, laws=None, samples: int = 200000,
              seed: int = DEFAULT_SEED, hunt_samples: int = 20000,
              progress=None) -> SuiteReport:
    """Check every law against its expectation on multirelations."""
    entries = []
    for law in (catalog() if laws is None else laws):
        if law.expected == VALID:
            v = check_valid(law, n, samples, seed)
        else:
            v = hunt(law, max(n, 3), seed, hunt_samples)
        entry = SuiteEntry(law, v)
        entries.append(entry)
        if progress:
            progress(entry)
    return SuiteReport(entries)


def eval_term(t, env: dict, universe=None) -> MultiRelation:
    """Denotation of a term under ``env`` (variable name -> MultiRelation)."""
    if isinstance(t, str):
        t = parse_term(t)
    us = {r.universe for r in env.values()}
    if universe is not None:
        us.add(universe)
    if len(us) > 1:
        raise UniverseMismatchError("bindings live over different universes")
    if not us:
        raise MultirelError("no universe: pass one or bind a variable")
    (u,) = us
    order = variables(t)
    sorts = {}

    def walk(x):
        if hasattr(x, "sort"):
            sorts[x.name] = x.sort
        for a in getattr(x, "args", ()):
            walk(a)

    walk(t)
    for name in order:
        if name in env and not is_in_class(env[name], ClassTag(sorts[name])):
            raise SortError(f"binding for {name} is not {sorts[name]}")
    model = MultirelModel(u.n, u)
    f = model.compile(t, order)
    values = tuple(env[v].bits if v in env else None for v in order)
    missing = [v for v, x in zip(order, values) if x is None]
    if missing:
        raise UnboundVariableError(f"unbound variable {missing[0]}")
    return MultiRelation(u, f(values))


# the four equations that separate the builtin algebra from multirelations,
# with the assignments at which they fail there
ALGEBRA_COUNTEREXAMPLES = [
    ("dom-par-right-distrib", {"x": "a", "y": "1p", "z": "0"}),
    ("dom-seq-right-assoc", {"x": "a", "y": "1p", "z": "0"}),
    ("dia-seq", {"x": "a", "y": "1p", "p": "0"}),
    ("dia-par", {"x": "a", "y": "1p", "p": "0"}),
]


def check_at_labels(law: Law, alg: FiniteAlgebra, labels: dict) -> Verdict:
    """Evaluate a law at one assignment of carrier labels."""
    model = AlgebraModel(alg)
    values = tuple(alg.index(labels[v]) for v in law.variables)
    hyp_ok, concl_ok = evaluate_at(law, model, values)
    status = REFUTED if hyp_ok and not concl_ok else HOLDS
    return Verdict(status, law.name, f"{model.descriptor}, single assignment",
                   1, int(hyp_ok),
                   dict(labels) if status == REFUTED else None, values)


def check_algebra(alg: FiniteAlgebra | None = None,
                  axiom_set: str = "c-trioid") -> Verdict:
    """Check an axiom group on every carrier tuple of ``alg``.

    ``parts`` holds one verdict per axiom followed by the four separating
    equations at their stored witnesses (when ``alg`` interprets them).
    """
    if axiom_set not in ("c-monoid", "c-trioid"):
        raise MultirelError(f"unknown axiom set {axiom_set!r}")
    alg = alg or builtin_algebra()
    model = AlgebraModel(alg)
    parts = []
    failed = None
    for law in axiom_group(axiom_set):
        v = check_law(law, model=model)
        parts.append(v)
        if v.refuted and failed is None:
            failed = v
    for name, labels in ALGEBRA_COUNTEREXAMPLES:
        try:
            parts.append(check_at_labels(get_law(name), alg, labels))
        except (UnsupportedOperationError, MultirelError):
            continue
    d_ok = alg.check_expected_d()
    details = f"{len(parts)} checks; expected d column {'matches' if d_ok else 'differs'}"
    desc = f"{model.descriptor}, {axiom_set} axioms, all carrier tuples"
    if failed is not None:
        return Verdict(REFUTED, axiom_set, desc, failed.checked, failed.satisfying,
                       {"law": failed.law, **failed.witness}, failed.values,
                       details, tuple(parts))
    if not d_ok:
        return Verdict(REFUTED, axiom_set, desc, details=details, parts=tuple(parts))
    return Verdict(HOLDS, axiom_set, desc, sum(p.checked for p in parts),
                   details=details, parts=tuple(parts))
