"""Domain, terminal/nonterminal projections, subclasses and the iso maps."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum

from . import _bits
from .core import (MultiRelation, MultirelError, Universe, const, inter,
                   par, seq, to_json, _same)


class ClassTag(str, Enum):
    SEQ_SUBID = "SeqSubid"
    TERMINAL = "Terminal"
    VECTOR = "Vector"
    UP_CLOSED = "UpClosed"
    NONTERMINAL = "Nonterminal"
    GENERAL = "General"


def _c(r: MultiRelation, which: str) -> MultiRelation:
    return const(r.universe, which)


def domain(r: MultiRelation) -> MultiRelation:
    """``d(R) = (R . 1p) || 1s``: the subidentity on the sources of ``R``."""
    return par(seq(r, _c(r, "one_pi")), _c(r, "one_sigma"))


def tau(r: MultiRelation) -> MultiRelation:
    """Terminal part ``R . 0``."""
    return seq(r, _c(r, "empty"))


def nu(r: MultiRelation) -> MultiRelation:
    """Nonterminal part ``R & n1p``."""
    return inter(r, _c(r, "co_one_pi"))


def up_closure(r: MultiRelation) -> MultiRelation:
    """Smallest up-closed superset, computed directly (equals ``R || U``)."""
    return MultiRelation(r.universe, _bits.up_closure(r.n, r.bits))


def to_terminal(r: MultiRelation) -> MultiRelation:
    return seq(r, _c(r, "one_pi"))


def vectorize(r: MultiRelation) -> MultiRelation:
    return par(to_terminal(r), _c(r, "univ"))


def is_in_class(r: MultiRelation, tag) -> bool:
    tag = ClassTag(tag)
    if tag is ClassTag.SEQ_SUBID:
        return inter(r, _c(r, "one_sigma")) == r
    if tag is ClassTag.TERMINAL:
        return to_terminal(r) == r
    if tag is ClassTag.VECTOR:
        return vectorize(r) == r
    if tag is ClassTag.UP_CLOSED:
        return par(r, _c(r, "univ")) == r
    if tag is ClassTag.NONTERMINAL:
        return nu(r) == r
    return True


class NotSubidentityError(MultirelError):
    pass


def diamond(r: MultiRelation, p: MultiRelation) -> MultiRelation:
    """Modal diamond ``<R>p = d(R . p)``; ``p`` must be a subidentity."""
    _same(r, p)
    if not is_in_class(p, ClassTag.SEQ_SUBID):
        raise NotSubidentityError(f"{p!r} is not a sequential subidentity")
    return domain(seq(r, p))


def leq_tau(r: MultiRelation, s: MultiRelation) -> bool:
    _same(r, s)
    return tau(r) <= tau(s)


def leq_nu(r: MultiRelation, s: MultiRelation) -> bool:
    _same(r, s)
    return nu(r) <= nu(s)


def eqv_tau(r: MultiRelation, s: MultiRelation) -> bool:
    _same(r, s)
    return tau(r) == tau(s)


def eqv_nu(r: MultiRelation, s: MultiRelation) -> bool:
    _same(r, s)
    return nu(r) == nu(s)


# isomorphism round trips ---------------------------------------------------

def _roundtrips():
    U = lambda x: _c(x, "univ")
    P = lambda x: _c(x, "one_pi")
    N = lambda x: _c(x, "co_one_pi")

    def t(x):
        return seq(x, P(x))

    def nt(x):
        return inter(x, N(x))

    return [
        ("d(d(x).U) = d(x)",
         lambda x: domain(seq(domain(x), U(x))), domain),
        ("d((x.1p)||U).U = (x.1p)||U",
         lambda x: seq(domain(par(t(x), U(x))), U(x)),
         lambda x: par(t(x), U(x))),
        ("((x.1p)||U).1p = x.1p",
         lambda x: seq(par(t(x), U(x)), P(x)), t),
        ("(((x.1p)||U).1p)||U = (x.1p)||U",
         lambda x: par(seq(par(t(x), U(x)), P(x)), U(x)),
         lambda x: par(t(x), U(x))),
        ("d(d(x&n1p).1p) = d(x&n1p)",
         lambda x: domain(seq(domain(nt(x)), P(x))),
         lambda x: domain(nt(x))),
        ("d((x&n1p).1p).1p = (x&n1p).1p",
         lambda x: seq(domain(t(nt(x))), P(x)),
         lambda x: t(nt(x))),
        ("d(d(x&n1p).n1p) = d(x&n1p)",
         lambda x: domain(seq(domain(nt(x)), N(x))),
         lambda x: domain(nt(x))),
        ("d((x&n1p).n1p).n1p = (x&n1p).n1p",
         lambda x: seq(domain(seq(nt(x), N(x))), N(x)),
         lambda x: seq(nt(x), N(x))),
        ("(((x&n1p).1p)||n1p).1p = (x&n1p).1p",
         lambda x: seq(par(t(nt(x)), N(x)), P(x)),
         lambda x: t(nt(x))),
        ("(((x&n1p).n1p).1p)||n1p = (x&n1p).n1p",
         lambda x: par(t(seq(nt(x), N(x))), N(x)),
         lambda x: seq(nt(x), N(x))),
    ]


ROUNDTRIP_IDENTITIES = tuple(name for name, _, _ in _roundtrips())


@dataclass
class IsoReport:
    universe: Universe
    mode: str
    checked: int
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["status"] == "holds" for r in self.results)

    def lines(self) -> list:
        out = [f"# iso round-trips n={self.universe.n} mode={self.mode} "
               f"checked={self.checked}"]
        for r in self.results:
            line = f"{r['identity']}: {r['status'].upper()}"
            if "witness" in r:
                line += f" witness={r['witness']}"
            out.append(line)
        return out

    def to_json(self) -> str:
        return json.dumps(self.results)


def check_iso_roundtrips(u: Universe, samples: int | None = None,
                         seed: int = 42) -> IsoReport:
    """Check the iso round-trip identities on every (n <= 2) or sampled R.

    Each identity is written so that its free variable ranges over all of
    M(X); the class restriction is applied inside the identity.
    """
    n = u.n
    if n <= 2 and samples is None:
        candidates = (MultiRelation(u, b) for b in _bits.members(n, "General"))
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        k = 100_000 if samples is None else samples
        candidates = (MultiRelation(u, rng.getrandbits(n << n)) for _ in range(k))
        mode = f"sampled(k={k}, seed={seed})"
    ids = _roundtrips()
    witness = [None] * len(ids)
    count = 0
    for r in candidates:
        count += 1
        for i, (_, lhs, rhs) in enumerate(ids):
            if witness[i] is None and lhs(r) != rhs(r):
                witness[i] = r
    report = IsoReport(u, mode, count)
    for (name, _, _), w in zip(ids, witness):
        entry = {"identity": name, "status": "holds" if w is None else "violated"}
        if w is not None:
            entry["witness"] = to_json(w)
        report.results.append(entry)
    return report


__all__ = [
    "ClassTag", "domain", "tau", "nu", "up_closure", "to_terminal",
    "vectorize", "is_in_class", "diamond", "NotSubidentityError", "leq_tau",
    "leq_nu", "eqv_tau", "eqv_nu", "check_iso_roundtrips", "IsoReport",
    "ROUNDTRIP_IDENTITIES",
]
