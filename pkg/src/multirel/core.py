"""Universes, multirelations and their set-theoretic operations.

A multirelation over a finite universe ``X`` is a set of pairs ``(a, A)``
with ``a`` in ``X`` and ``A`` a subset of ``X``.  Values are immutable; all
operations return new values and require both operands to live over the
same universe.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _bits

MAX_UNIVERSE = 16

CONSTANTS = ("empty", "one_sigma", "one_pi", "univ", "co_one_pi")


class MultirelError(ValueError):
    """Base class for every error raised by this package."""


class DuplicateLabelError(MultirelError):
    pass


class UniverseOverflowError(MultirelError):
    pass


class UnknownLabelError(MultirelError):
    pass


class UniverseMismatchError(MultirelError):
    pass


@dataclass(frozen=True)
class Universe:
    names: tuple

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise UnknownLabelError(f"unknown label {label!r}") from None

    def subset(self, labels: Iterable[str]) -> int:
        """Bit-vector of a collection of labels."""
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return mask

    def labels(self, mask: int) -> list:
        return [self.names[i] for i in _bits.iter_bits(mask)]

    def __repr__(self):
        return f"Universe({list(self.names)!r})"


def make_universe(names: Sequence[str]) -> Universe:
    names = tuple(str(x) for x in names)
    if len(names) > MAX_UNIVERSE:
        raise UniverseOverflowError(
            f"universe has {len(names)} elements; at most {MAX_UNIVERSE} supported")
    seen = set()
    for x in names:
        if x in seen:
            raise DuplicateLabelError(f"duplicate label {x!r}")
        seen.add(x)
    return Universe(names)


@dataclass(frozen=True)
class MultiRelation:
    """A finite multirelation, stored as a bitmask over ``X x 2^X``.

    Bit ``a * 2**n + A`` is set iff the pair ``(a, A)`` is present, where
    ``A`` is the bit-vector of the target set.  Numeric bit order is the
    canonical pair order (source index first, then target value), so
    equality of ``bits`` is set equality.
    """

    universe: Universe
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> (self.universe.n << self.universe.n):
            raise MultirelError("pair outside the universe")

    @property
    def n(self) -> int:
        return self.universe.n

    @property
    def pairs(self) -> tuple:
        """Canonically ordered ``(source index, target bit-vector)`` pairs."""
        return tuple(_bits.pairs(self.n, self.bits))

    def labeled_pairs(self) -> list:
        u = self.universe
        return [(u.names[a], u.labels(t)) for a, t in self.pairs]

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return bin(self.bits).count("1")

    def __bool__(self):
        return self.bits != 0

    def __contains__(self, pair):
        a, target = pair
        if isinstance(a, str):
            a = self.universe.index(a)
        if not isinstance(target, int):
            target = self.universe.subset(target)
        return bool(self.bits >> (a * (1 << self.n) + target) & 1)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return inter(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        return is_subset(self, other)

    def __lt__(self, other):
        return is_subset(self, other) and self.bits != other.bits

    def __ge__(self, other):
        return is_subset(other, self)

    def __gt__(self, other):
        return is_subset(other, self) and self.bits != other.bits

    def __repr__(self):
        return format_literal(self)


def _same(r: MultiRelation, s: MultiRelation) -> int:
    if r.universe != s.universe:
        raise UniverseMismatchError(
            f"universe mismatch: {r.universe!r} vs {s.universe!r}")
    return r.n


def from_pairs(u: Universe, pairs: Iterable) -> MultiRelation:
    """Build a multirelation from ``(label, [labels])`` pairs."""
    w = 1 << u.n
    bits = 0
    for src, tgt in pairs:
        bits |= 1 << (u.index(src) * w + u.subset(tgt))
    return MultiRelation(u, bits)


def const(u: Universe, which: str) -> MultiRelation:
    n = u.n
    table = {
        "empty": lambda: 0,
        "one_sigma": _bits.one_sigma,
        "one_pi": _bits.one_pi,
        "univ": _bits.univ,
        "co_one_pi": _bits.co_one_pi,
    }
    try:
        make = table[which]
    except KeyError:
        raise MultirelError(f"unknown constant {which!r}") from None
    return MultiRelation(u, make() if which == "empty" else make(n))


def union(r: MultiRelation, s: MultiRelation) -> MultiRelation:
    _same(r, s)
    return MultiRelation(r.universe, r.bits | s.bits)


def inter(r: MultiRelation, s: MultiRelation) -> MultiRelation:
    _same(r, s)
    return MultiRelation(r.universe, r.bits & s.bits)


def complement(r: MultiRelation) -> MultiRelation:
    """Complement relative to the universal multirelation."""
    return MultiRelation(r.universe, _bits.full(r.n) ^ r.bits)


def is_subset(r: MultiRelation, s: MultiRelation) -> bool:
    _same(r, s)
    return r.bits & ~s.bits == 0


def seq(r: MultiRelation, s: MultiRelation) -> MultiRelation:
    """Peleg's sequential composition.

    For every ``(a, B)`` in ``r`` the targets reachable by a choice of one
    ``s``-successor per element of ``B`` are accumulated by folding over
    ``B``, deduplicating the working family after each step.  An element
    of ``B`` without successors kills the pair; ``B = {}`` yields
    ``(a, {})`` through the empty choice function.
    """
    n = _same(r, s)
    return MultiRelation(r.universe, _bits.seq(n, r.bits, s.bits))


def par(r: MultiRelation, s: MultiRelation) -> MultiRelation:
    """Parallel composition: ``{(a, A | B) : (a, A) in r, (a, B) in s}``."""
    n = _same(r, s)
    return MultiRelation(r.universe, _bits.par(n, r.bits, s.bits))


def parikh_seq(r: MultiRelation, s: MultiRelation) -> MultiRelation:
    """Parikh's composition: one common target set for all of ``B``."""
    n = _same(r, s)
    return MultiRelation(r.universe, _bits.parikh_seq(n, r.bits, s.bits))


# serialization -------------------------------------------------------------

def to_json(r: MultiRelation) -> dict:
    return {
        "universe": list(r.universe.names),
        "pairs": [[a, t] for a, t in r.labeled_pairs()],
    }


def from_json(obj, universe: Universe | None = None) -> MultiRelation:
    """Read the JSON object form; pair order and duplicates are irrelevant."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    u = make_universe(obj["universe"])
    if universe is not None and u != universe:
        raise UniverseMismatchError(
            f"universe mismatch: {universe!r} vs {u!r}")
    return from_pairs(u, [(p[0], p[1]) for p in obj["pairs"]])


def dumps(r: MultiRelation) -> str:
    return json.dumps(to_json(r))


_LITERAL = re.compile(r"\(\s*([^,\s(){}]+)\s*,\s*\{([^{}]*)\}\s*\)")


def parse_literal(text: str, u: Universe) -> MultiRelation:
    """Parse the inline form ``<{(a,{b,c}), (b,{})}>``; brackets optional."""
    body = text.strip().replace("\u2205", "{}")
    if body.startswith("<") and body.endswith(">"):
        body = body[1:-1].strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise MultirelError(f"malformed multirelation literal {text!r}")
    body = body[1:-1]
    found = []
    pos = 0
    for m in _LITERAL.finditer(body):
        gap = body[pos:m.start()].strip().strip(",").strip()
        if gap:
            raise MultirelError(f"malformed multirelation literal {text!r}")
        pos = m.end()
        targets = [t.strip() for t in m.group(2).split(",") if t.strip()]
        found.append((m.group(1), targets))
    if body[pos:].strip().strip(",").strip():
        raise MultirelError(f"malformed multirelation literal {text!r}")
    return from_pairs(u, found)


def format_literal(r: MultiRelation) -> str:
    parts = [f"({a},{{{','.join(t)}}})" for a, t in r.labeled_pairs()]
    return "{" + ", ".join(parts) + "}"
