"""Integer kernels behind the public multirelation API.

A multirelation over a universe of size ``n`` is one Python int.  Pair
``(a, A)`` lives at bit ``a * 2**n + A`` where ``A`` is the bit-vector of
the target set.  The slice of ``2**n`` bits belonging to source ``a`` is
called its *row*: a family of subsets, again encoded as an int whose bit
``A`` is set iff ``A`` is in the family.

Everything here is pure and keyed on plain ints so results can be cached.
"""

from functools import lru_cache

_CACHE = 1 << 20


def width(n):
    return 1 << n


def row_mask(n):
    return (1 << (1 << n)) - 1


def full(n):
    return (1 << (n << n)) - 1


def iter_bits(x):
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def rows(n, r):
    w = 1 << n
    m = (1 << w) - 1
    return [(r >> (a * w)) & m for a in range(n)]


def from_rows(n, rs):
    w = 1 << n
    out = 0
    for a, row in enumerate(rs):
        out |= row << (a * w)
    return out


def pairs(n, r):
    w = 1 << n
    for idx in iter_bits(r):
        yield idx >> n, idx & (w - 1)


# constants -----------------------------------------------------------------

def one_sigma(n):
    return sum(1 << (a * (1 << n) + (1 << a)) for a in range(n))


def one_pi(n):
    return sum(1 << (a * (1 << n)) for a in range(n))


def univ(n):
    return full(n)


def co_one_pi(n):
    return full(n) ^ one_pi(n)


# compositions --------------------------------------------------------------

def _join_families(f, g):
    """{A | B : A in f, B in g} for families f, g given as ints."""
    out = 0
    for a in iter_bits(f):
        for b in iter_bits(g):
            out |= 1 << (a | b)
    return out


@lru_cache(maxsize=_CACHE)
def seq(n, r, s):
    srows = rows(n, s)
    w = 1 << n
    out = 0
    for a, big in pairs(n, r):
        work = 1  # the family {∅}
        for b in iter_bits(big):
            succ = srows[b]
            if not succ:
                work = 0
                break
            work = _join_families(work, succ)
        out |= work << (a * w)
    return out


@lru_cache(maxsize=_CACHE)
def par(n, r, s):
    rr, ss = rows(n, r), rows(n, s)
    return from_rows(n, [_join_families(x, y) for x, y in zip(rr, ss)])


@lru_cache(maxsize=_CACHE)
def parikh_seq(n, r, s):
    srows = rows(n, s)
    m = row_mask(n)
    w = 1 << n
    out = 0
    for a, big in pairs(n, r):
        common = m
        for b in iter_bits(big):
            common &= srows[b]
        out |= common << (a * w)
    return out


def _up_row(n, row):
    out = 0
    w = 1 << n
    for a in iter_bits(row):
        for b in range(w):
            if a & b == a:
                out |= 1 << b
    return out


@lru_cache(maxsize=_CACHE)
def up_closure(n, r):
    return from_rows(n, [_up_row(n, row) for row in rows(n, r)])


def domain(n, r):
    return par(n, seq(n, r, one_pi(n)), one_sigma(n))


def support(n, r):
    """Indices of the sources related to anything."""
    return [a for a, row in enumerate(rows(n, r)) if row]


# class enumeration ---------------------------------------------------------

def _upsets(n):
    w = 1 << n
    return [f for f in range(1 << w) if _up_row(n, f) == f]


@lru_cache(maxsize=None)
def allowed_rows(n, tag):
    """Rows a member of class ``tag`` may carry at each source, per source."""
    w = 1 << n
    m = (1 << w) - 1
    out = []
    for a in range(n):
        if tag == "SeqSubid":
            choices = [0, 1 << (1 << a)]
        elif tag == "Terminal":
            choices = [0, 1]
        elif tag == "Vector":
            choices = [0, m]
        elif tag == "UpClosed":
            choices = _upsets(n)
        elif tag == "Nonterminal":
            choices = [f for f in range(1 << w) if not f & 1]
        elif tag == "General":
            choices = list(range(1 << w))
        else:
            raise ValueError(f"unknown class tag {tag!r}")
        out.append(tuple(choices))
    return tuple(out)


def class_size(n, tag):
    if tag == "General":
        return 1 << (n << n)
    if tag == "Nonterminal":
        return 1 << (n * ((1 << n) - 1))
    size = 1
    for choices in allowed_rows(n, tag):
        size *= len(choices)
    return size


@lru_cache(maxsize=64)
def _members_small(n, tag):
    rs = allowed_rows(n, tag)
    acc = [0]
    w = 1 << n
    for a, choices in enumerate(rs):
        acc = [x | (c << (a * w)) for x in acc for c in choices]
    return tuple(sorted(acc))


def members(n, tag):
    """All members of a class in canonical (numeric) order."""
    if tag == "General":
        return range(1 << (n << n))
    return _members_small(n, tag)


def sample(n, tag, rng):
    """Random member of a class, uniform except for UpClosed beyond n=4."""
    w = 1 << n
    if tag == "General":
        return rng.getrandbits(n << n)
    if tag == "Nonterminal":
        return rng.getrandbits(n << n) & ~one_pi(n)
    if tag == "UpClosed" and n > 4:
        return up_closure(n, rng.getrandbits(n << n))
    out = 0
    for a, choices in enumerate(allowed_rows(n, tag)):
        out |= rng.choice(choices) << (a * w)
    return out
