"""Interpretations of the term language.

A model turns a term into a closure over a tuple of variable values.  The
multirelation model works on the raw ints of ``_bits``; the finite
algebra model works on carrier indices.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .. import _bits
from .. import fixpoint as fx
from ..core import MultiRelation, MultirelError, make_universe
from ..structure import ClassTag
from .terms import App, Const, Var, CONSTANTS


class UnboundVariableError(MultirelError):
    pass


class UnsupportedOperationError(MultirelError):
    pass


def default_universe(n):
    return make_universe("abcdefghijklmnop"[:n])


class Model:
    """Common compilation scheme; subclasses supply the primitives."""

    def constant(self, name):
        raise NotImplementedError

    def operation(self, op):
        raise NotImplementedError

    def leq(self, a, b) -> bool:
        raise NotImplementedError

    def compile(self, t, order):
        """Closure ``env_tuple -> value`` for term ``t``; ``order`` names slots."""
        if isinstance(t, Var):
            try:
                i = order.index(t.name)
            except ValueError:
                raise UnboundVariableError(f"unbound variable {t.name}") from None
            return lambda env: env[i]
        if isinstance(t, Const):
            c = self.constant(t.name)
            return lambda env: c
        fn = self.operation(t.op)
        args = [self.compile(a, order) for a in t.args]
        if len(args) == 1:
            (a,) = args
            return lambda env: fn(a(env))
        a, b = args
        return lambda env: fn(a(env), b(env))

    def compile_relation(self, r, order):
        lhs, rhs = self.compile(r.lhs, order), self.compile(r.rhs, order)
        if r.rel == "=":
            return lambda env: lhs(env) == rhs(env)
        if r.rel == "!=":
            return lambda env: lhs(env) != rhs(env)
        leq = self.leq
        return lambda env: leq(lhs(env), rhs(env))


class MultirelModel(Model):
    """Multirelations over the first ``n`` letters, as bitmask ints."""

    def __init__(self, n: int, universe=None):
        self.n = n
        self.universe = universe or default_universe(n)
        if self.universe.n != n:
            raise MultirelError("universe size does not match n")
        self.full = _bits.full(n)
        self._ops = self._build()

    @property
    def descriptor(self):
        return f"M(X), |X|={self.n}"

    def constant(self, name):
        n = self.n
        which = CONSTANTS[name]
        return 0 if which == "empty" else getattr(_bits, which)(n)

    def leq(self, a, b):
        return a & ~b == 0

    def operation(self, op):
        try:
            return self._ops[op]
        except KeyError:
            raise UnsupportedOperationError(f"no operation {op!r}") from None

    def wrap(self, bits):
        return MultiRelation(self.universe, bits)

    def _build(self):
        n = self.n
        full = self.full
        one_s, one_p = _bits.one_sigma(n), _bits.one_pi(n)
        co_p = _bits.co_one_pi(n)
        w = 1 << n
        wrap = self.wrap

        def seq(a, b):
            return _bits.seq(n, a, b)

        def par(a, b):
            return _bits.par(n, a, b)

        def d(a):
            return _bits.domain(n, a)

        def lifted(f):
            @lru_cache(maxsize=1 << 16)
            def g(*args):
                return f(*(wrap(a) for a in args)).bits
            return g

        def diamond(a, p):
            if p & ~one_s:
                raise MultirelError("diamond needs a sequential subidentity")
            return d(seq(a, p))

        def nabla(a):
            p = one_s
            while True:
                q = d(seq(a, p))
                if q == p:
                    return p
                p = q

        # set-builder oracles, written pair by pair
        def sb_term(a):
            out = 0
            for s, _ in _bits.pairs(n, a):
                out |= 1 << (s * w)
            return out

        def sb_zero(a):
            return a & one_p

        def sb_sub(a):
            return a & one_s

        def sb_univ(a):
            # {(s, A) : exists B with (s, B) in a, and B empty or A nonempty}
            out = 0
            for s, row in enumerate(_bits.rows(n, a)):
                if row & ~1:
                    out |= ((1 << w) - 1) << (s * w)
                elif row:
                    out |= 1 << (s * w)
            return out

        return {
            "union": lambda a, b: a | b,
            "meet": lambda a, b: a & b,
            "complement": lambda a: full ^ a,
            "seq": seq,
            "par": par,
            "parikh": lambda a, b: _bits.parikh_seq(n, a, b),
            "d": d,
            "tau": lambda a: seq(a, 0),
            "nu": lambda a: a & co_p,
            "up": lambda a: _bits.up_closure(n, a),
            "to_terminal": lambda a: seq(a, one_p),
            "vectorize": lambda a: par(seq(a, one_p), full),
            "diamond": diamond,
            "nabla": lru_cache(maxsize=1 << 16)(nabla),
            "star": lifted(fx.star),
            "omega": lifted(fx.omega),
            "infinity": lifted(fx.infinity),
            "star_binary": lifted(fx.star_binary),
            "omega_binary": lifted(fx.omega_binary),
            "iter_star_paren": lifted(fx.iter_star_paren),
            "iter_star_bracket": lifted(fx.iter_star_bracket),
            "iter_star_powers": lifted(fx.iter_star_powers),
            "sb_term": sb_term,
            "sb_zero": sb_zero,
            "sb_sub": sb_sub,
            "sb_univ": sb_univ,
        }

    # sorts
    def members(self, sort):
        return _bits.members(self.n, ClassTag(sort).value)

    def class_size(self, sort):
        return _bits.class_size(self.n, ClassTag(sort).value)

    def sampler(self, sort, rng: random.Random):
        tag = ClassTag(sort).value
        n = self.n
        return lambda: _bits.sample(n, tag, rng)

    def in_sort(self, value, sort):
        tag = ClassTag(sort)
        n = self.n
        if tag is ClassTag.SEQ_SUBID:
            return value & ~_bits.one_sigma(n) == 0
        if tag is ClassTag.TERMINAL:
            return _bits.seq(n, value, _bits.one_pi(n)) == value
        if tag is ClassTag.VECTOR:
            v = _bits.par(n, _bits.seq(n, value, _bits.one_pi(n)), self.full)
            return v == value
        if tag is ClassTag.UP_CLOSED:
            return _bits.par(n, value, self.full) == value
        if tag is ClassTag.NONTERMINAL:
            return value & _bits.one_pi(n) == 0
        return True

    def to_json(self, value):
        return [[a, t] for a, t in self.wrap(value).labeled_pairs()]

    def describe(self, value):
        return repr(self.wrap(value))


class AlgebraModel(Model):
    """A finite algebra given by operation tables over carrier indices."""

    def __init__(self, alg):
        self.alg = alg
        self.n = None
        self._order = alg.order_matrix()

    @property
    def descriptor(self):
        return f"algebra {self.alg.name} ({len(self.alg.carrier)} elements)"

    def constant(self, name):
        try:
            return self.alg.constants[name]
        except KeyError:
            raise UnsupportedOperationError(
                f"constant {name} not interpreted in {self.alg.name}") from None

    def leq(self, a, b):
        return self._order[a][b]

    def operation(self, op):
        alg = self.alg
        if op in alg.tables:
            t = alg.tables[op]
            return lambda a, b: t[a][b]
        if op == "d":
            dt = alg.d_table()
            return lambda a: dt[a]
        if op == "tau" and "0" in alg.constants:
            t, z = alg.tables["seq"], alg.constants["0"]
            return lambda a: t[a][z]
        if op == "diamond":
            dt, t = alg.d_table(), alg.tables["seq"]

            def diamond(a, p):
                if dt[p] != p:
                    raise MultirelError("diamond needs a sequential subidentity")
                return dt[t[a][p]]
            return diamond
        raise UnsupportedOperationError(
            f"operation {op!r} not interpreted in {alg.name}")

    def members(self, sort):
        return tuple(x for x in range(len(self.alg.carrier))
                     if self.in_sort(x, sort))

    def class_size(self, sort):
        return len(self.members(sort))

    def sampler(self, sort, rng):
        pool = self.members(sort)
        return lambda: rng.choice(pool)

    def in_sort(self, value, sort):
        tag = ClassTag(sort)
        if tag is ClassTag.GENERAL:
            return True
        if tag is ClassTag.SEQ_SUBID:
            return self.alg.d_table()[value] == value
        if tag is ClassTag.TERMINAL:
            return self.alg.tables["seq"][value][self.alg.constants["1p"]] == value
        raise UnsupportedOperationError(f"sort {sort} not interpreted")

    def to_json(self, value):
        return self.alg.carrier[value]

    def describe(self, value):
        return self.alg.carrier[value]
