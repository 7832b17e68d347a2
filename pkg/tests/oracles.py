"""Definition-literal reference implementations.

Multirelations here are frozensets of ``(a, frozenset(B))`` pairs over
labels.  Nothing in this module uses the package's bit encoding, so the
package can be checked against it.
"""

from itertools import chain, combinations, product

from multirel import MultiRelation, from_pairs


def powerset(xs):
    xs = sorted(xs)
    return [frozenset(c) for c in chain.from_iterable(
        combinations(xs, k) for k in range(len(xs) + 1))]


def all_pairs(labels):
    return [(a, B) for a in sorted(labels) for B in powerset(labels)]


def to_oracle(r: MultiRelation) -> frozenset:
    return frozenset((a, frozenset(t)) for a, t in r.labeled_pairs())


def from_oracle(u, rel) -> MultiRelation:
    return from_pairs(u, [(a, sorted(B)) for a, B in rel])


def seq(R, S):
    """Peleg composition: for every choice function f on B with
    (b, f(b)) in S, the pair (a, union of f(b))."""
    out = set()
    for a, B in R:
        options = [[C for (b2, C) in S if b2 == b] for b in sorted(B)]
        for choice in product(*options):
            out.add((a, frozenset().union(*choice)))
    return frozenset(out)


def par(R, S):
    return frozenset((a, B | C) for a, B in R for b, C in S if a == b)


def parikh(R, S, labels):
    """(a, A) whenever some (a, B) in R has (b, A) in S for every b in B."""
    return frozenset((a, A) for a, B in R for A in powerset(labels)
                     if all((b, A) in S for b in B))


def one_sigma(labels):
    return frozenset((a, frozenset([a])) for a in labels)


def one_pi(labels):
    return frozenset((a, frozenset()) for a in labels)


def univ(labels):
    return frozenset(all_pairs(labels))


def domain(R):
    return frozenset((a, frozenset([a])) for a, _ in R)


def up(R, labels):
    return frozenset((a, C) for a, B in R for C in powerset(labels) if B <= C)


def is_vector(R, labels):
    rows = {a for a, _ in R}
    return R == frozenset((a, B) for a in rows for B in powerset(labels))


def kleene(f, start, ascending):
    """Iterate a monotone map to its fixpoint from ``start``."""
    x = start
    while True:
        y = f(x)
        assert (x <= y) if ascending else (y <= x), "chain is not monotone"
        if y == x:
            return x
        x = y


def star_binary(R, S, labels):
    return kleene(lambda X: S | seq(R, X), frozenset(), True)


def omega_binary(R, S, labels):
    return kleene(lambda X: S | seq(R, X), univ(labels), False)


def nabla(R, labels):
    """Greatest p below 1s with p = d(R . p), from the definition."""
    best = frozenset()
    for p in powerset(labels):
        sub = one_sigma(p)
        if domain(seq(R, sub)) == sub and len(sub) > len(best):
            best = sub
    return best


def parse(text):
    """Oracle literal: 'a:b,c; b:' -> {(a,{b,c}), (b,{})}."""
    out = set()
    for part in filter(None, (p.strip() for p in text.split(";"))):
        a, targets = part.split(":")
        out.add((a.strip(), frozenset(t.strip() for t in targets.split(",")
                                      if t.strip())))
    return frozenset(out)
