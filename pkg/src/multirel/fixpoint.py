"""Fixpoints on the finite lattice of multirelations and the iterations.

The lattice of multirelations over ``n`` elements has height ``n * 2**n``,
so plain Kleene iteration from the bottom (or the top) reaches the least
(or greatest) fixpoint of any isotone map after at most that many steps,
continuous or not.  Each step asserts that the chain really ascends or
descends, which catches non-monotone functionals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import _bits
from .core import (MultiRelation, MultirelError, Universe, const, seq, union,
                   is_subset)
from .structure import domain


class FixpointError(MultirelError):
    """Iteration cap exceeded or a non-monotone chain was detected."""


@dataclass(frozen=True)
class MonotoneFunctional:
    func: Callable[[MultiRelation], MultiRelation]
    description: str = ""

    def __call__(self, x: MultiRelation) -> MultiRelation:
        return self.func(x)


@dataclass(frozen=True)
class FixpointResult:
    value: MultiRelation
    iterations: int
    converged: bool


def _functional(f) -> MonotoneFunctional:
    return f if isinstance(f, MonotoneFunctional) else MonotoneFunctional(f)


def _iterate(f, start, ascending, cap):
    x = start
    for i in range(1, cap + 1):
        y = f(x)
        ok = is_subset(x, y) if ascending else is_subset(y, x)
        if not ok:
            raise FixpointError(
                f"non-monotone functional {getattr(f, 'description', '')!r}: "
                f"chain broke at step {i}")
        if y == x:
            return FixpointResult(x, i, True)
        x = y
    raise FixpointError(f"no fixpoint within {cap} steps")


def _cap(n):
    return n * (1 << n) + 1


def lfp(f, u: Universe) -> FixpointResult:
    """Least fixpoint by iteration from the empty multirelation."""
    return _iterate(_functional(f), const(u, "empty"), True, _cap(u.n))


def gfp(f, u: Universe) -> FixpointResult:
    """Greatest fixpoint by iteration from the universal multirelation."""
    return _iterate(_functional(f), const(u, "univ"), False, _cap(u.n))


# finite iteration ----------------------------------------------------------

def star_binary(r: MultiRelation, s: MultiRelation) -> MultiRelation:
    f = MonotoneFunctional(lambda x: union(s, seq(r, x)), "S + R.X")
    return lfp(f, r.universe).value


def star(r: MultiRelation) -> MultiRelation:
    return star_binary(r, const(r.universe, "one_sigma"))


def power_paren(r: MultiRelation, i: int) -> MultiRelation:
    """``R^(0) = 0``, ``R^(i+1) = 1s + R . R^(i)``."""
    if i < 0:
        raise ValueError("index must be non-negative")
    one = const(r.universe, "one_sigma")
    x = const(r.universe, "empty")
    for _ in range(i):
        x = union(one, seq(r, x))
    return x


def power_bracket(r: MultiRelation, i: int) -> MultiRelation:
    """``R^[0] = 1s``, ``R^[i+1] = 1s + R . R^[i]``."""
    if i < 0:
        raise ValueError("index must be non-negative")
    one = const(r.universe, "one_sigma")
    x = one
    for _ in range(i):
        x = union(one, seq(r, x))
    return x


def power(r: MultiRelation, k: int) -> MultiRelation:
    """``R^0 = 1s``, ``R^(k+1) = R . R^k``."""
    x = const(r.universe, "one_sigma")
    for _ in range(k):
        x = seq(r, x)
    return x


def _union_of_chain(step, start, cap):
    acc = start
    x = start
    for _ in range(cap):
        x = step(x)
        new = union(acc, x)
        if new == acc:
            return acc
        acc = new
    raise FixpointError(f"union did not stabilise within {cap} steps")


def iter_star_paren(r: MultiRelation) -> MultiRelation:
    one = const(r.universe, "one_sigma")
    return _union_of_chain(lambda x: union(one, seq(r, x)),
                           const(r.universe, "empty"), _cap(r.n) + 1)


def iter_star_bracket(r: MultiRelation) -> MultiRelation:
    one = const(r.universe, "one_sigma")
    return _union_of_chain(lambda x: union(one, seq(r, x)), one, _cap(r.n) + 1)


def iter_star_powers(r: MultiRelation) -> MultiRelation:
    """Union of the powers ``(1s + R)^k``."""
    step = union(const(r.universe, "one_sigma"), r)
    return _union_of_chain(lambda x: seq(step, x), const(r.universe, "one_sigma"),
                           _cap(r.n) + 1)


# infinite iteration --------------------------------------------------------

def omega_binary(r: MultiRelation, s: MultiRelation) -> MultiRelation:
    f = MonotoneFunctional(lambda x: union(s, seq(r, x)), "S + R.X")
    return gfp(f, r.universe).value


def omega(r: MultiRelation) -> MultiRelation:
    return omega_binary(r, const(r.universe, "empty"))


def infinity(r: MultiRelation) -> MultiRelation:
    return omega_binary(r, const(r.universe, "one_sigma"))


def nabla_result(r: MultiRelation) -> FixpointResult:
    """Greatest subidentity ``p`` with ``p = d(R . p)``, with its step count.

    Iterates ``p -> d(R . p)`` downwards from ``1s``; the subidentities form
    a lattice of height ``n``.
    """
    p = const(r.universe, "one_sigma")
    for i in range(1, r.n + 2):
        q = domain(seq(r, p))
        if not is_subset(q, p):
            raise FixpointError("nabla iteration is not descending")
        if q == p:
            return FixpointResult(p, i, True)
        p = q
    raise FixpointError("nabla iteration did not converge")


def nabla(r: MultiRelation) -> MultiRelation:
    return nabla_result(r).value


# termination notions -------------------------------------------------------

def _candidates(u: Universe, mode):
    if mode == "exhaustive":
        if u.n > 2:
            raise MultirelError("exhaustive mode is limited to n <= 2")
        return (MultiRelation(u, b) for b in _bits.members(u.n, "General"))
    if isinstance(mode, tuple) and mode and mode[0] == "sampled":
        _, k, seed = mode
        rng = random.Random(seed)
        return (MultiRelation(u, rng.getrandbits(u.n << u.n)) for _ in range(k))
    raise MultirelError(f"unknown mode {mode!r}")


def is_omega_trivial(r: MultiRelation) -> bool:
    return not omega(r)


def is_deflationary(r: MultiRelation, mode="exhaustive") -> bool:
    """``y <= R . y`` implies ``y = 0`` for every candidate ``y``."""
    return all(not y or not is_subset(y, seq(r, y))
               for y in _candidates(r.universe, mode))


def is_wellfounded(r: MultiRelation, mode="exhaustive") -> bool:
    """``d(y) <= d(R . y)`` implies ``d(y) = 0`` for every candidate ``y``."""
    for y in _candidates(r.universe, mode):
        dy = domain(y)
        if dy and is_subset(dy, domain(seq(r, y))):
            return False
    return True


__all__ = [
    "FixpointError", "MonotoneFunctional", "FixpointResult", "lfp", "gfp",
    "star", "star_binary", "power_paren", "power_bracket", "power",
    "iter_star_paren", "iter_star_bracket", "iter_star_powers", "omega",
    "omega_binary", "infinity", "nabla", "nabla_result", "is_omega_trivial",
    "is_deflationary", "is_wellfounded",
]
