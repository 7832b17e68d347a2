"""Term and law syntax.

Grammar, loosest binding first::

    law     := [rel {',' rel} '=>'] rel
    rel     := expr ('=' | '<=' | '>=' | '!=') expr
    expr    := meet {'+' meet}                 union
    meet    := par {'&' par}                   intersection
    par     := seq {'||' seq}                  parallel composition
    seq     := post {('.' | ';') post}         Peleg / Parikh composition
    post    := atom {'^*' | '^w' | '^inf'}     star, omega, infinity
    atom    := '(' expr ')' | '~' atom | const | func '(' expr {',' expr} ')'
             | var [':' sort]

Constants are ``0 1s 1p U n1p``.  Sequential operators associate to the
left, which matters because ``.`` is not associative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..core import MultirelError


class TermSyntaxError(MultirelError):
    pass


class SortError(MultirelError):
    pass


SORTS = {
    "sub": "SeqSubid",
    "term": "Terminal",
    "vec": "Vector",
    "up": "UpClosed",
    "nt": "Nonterminal",
    "gen": "General",
}
SORT_SUFFIX = {v: k for k, v in SORTS.items()}

CONSTANTS = {"0": "empty", "1s": "one_sigma", "1p": "one_pi", "U": "univ",
             "n1p": "co_one_pi"}

BINARY_INFIX = {"+": "union", "&": "meet", "||": "par", ".": "seq",
                ";": "parikh"}
INFIX_SYMBOL = {v: k for k, v in BINARY_INFIX.items()}

POSTFIX = {"^*": "star", "^w": "omega", "^inf": "infinity"}
POSTFIX_SYMBOL = {v: k for k, v in POSTFIX.items()}

# function name -> (operation, arity)
FUNCTIONS = {
    "d": ("d", 1),
    "tau": ("tau", 1),
    "nu": ("nu", 1),
    "up": ("up", 1),
    "nabla": ("nabla", 1),
    "comp": ("complement", 1),
    "term": ("to_terminal", 1),
    "vec": ("vectorize", 1),
    "star": ("star", 1),
    "omega": ("omega", 1),
    "inf": ("infinity", 1),
    "starp": ("iter_star_paren", 1),
    "starb": ("iter_star_bracket", 1),
    "starsum": ("iter_star_powers", 1),
    "star2": ("star_binary", 2),
    "omega2": ("omega_binary", 2),
    "dia": ("diamond", 2),
    "sb_term": ("sb_term", 1),
    "sb_zero": ("sb_zero", 1),
    "sb_sub": ("sb_sub", 1),
    "sb_univ": ("sb_univ", 1),
}
FUNCTION_NAME = {op: name for name, (op, _) in FUNCTIONS.items()}

OPERATIONS = (set(BINARY_INFIX.values()) | set(POSTFIX.values())
              | {op for op, _ in FUNCTIONS.values()})


@dataclass(frozen=True)
class Var:
    name: str
    sort: str = "General"


@dataclass(frozen=True)
class Const:
    name: str  # one of CONSTANTS keys


@dataclass(frozen=True)
class App:
    op: str
    args: tuple


@dataclass(frozen=True)
class Relation:
    lhs: object
    rel: str  # '=', '<=', '!='
    rhs: object

    def __str__(self):
        return f"{to_text(self.lhs)} {self.rel} {to_text(self.rhs)}"


# printing ------------------------------------------------------------------

def _wrap(t):
    s = to_text(t)
    if isinstance(t, App) and t.op in INFIX_SYMBOL:
        return f"({s})"
    return s


def to_text(t) -> str:
    """Render a term in the concrete syntax; re-parses to the same term."""
    if isinstance(t, Var):
        if t.sort == "General":
            return t.name
        return f"{t.name}:{SORT_SUFFIX[t.sort]}"
    if isinstance(t, Const):
        return t.name
    if t.op in INFIX_SYMBOL:
        a, b = t.args
        return f"{_wrap(a)} {INFIX_SYMBOL[t.op]} {_wrap(b)}"
    if t.op in POSTFIX_SYMBOL:
        (a,) = t.args
        inner = to_text(a)
        if not isinstance(a, (Var, Const)):
            inner = f"({inner})"
        return inner + POSTFIX_SYMBOL[t.op]
    return f"{FUNCTION_NAME[t.op]}({', '.join(to_text(a) for a in t.args)})"


def variables(t) -> list:
    """Free variables in order of first occurrence."""
    out = []

    def walk(x):
        if isinstance(x, Var):
            if x.name not in out:
                out.append(x.name)
        elif isinstance(x, App):
            for a in x.args:
                walk(a)

    walk(t)
    return out


# parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"""
    \s*(?:
      (?P<op>=>|<=|>=|!=|\|\||\^inf|\^\*|\^w|[-+&.;=(),:~])
    | (?P<const>n1p|1s|1p|0|U)(?![A-Za-z0-9_])
    | (?P<name>[a-z][A-Za-z0-9_]*)
    )""", re.VERBOSE)


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise TermSyntaxError(f"unexpected input at {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
    out.append(("end", ""))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            raise TermSyntaxError(
                f"expected {value!r} but found {tok[1] or 'end of input'!r} "
                f"in {self.text!r}")
        self.i += 1
        return tok

    def at(self, *values):
        kind, val = self.peek()
        return kind == "op" and val in values

    def expect_end(self):
        if self.peek()[0] != "end":
            raise TermSyntaxError(
                f"trailing input {self.peek()[1]!r} in {self.text!r}")

    def expr(self):
        return self._chain(self.meet, ("+",))

    def meet(self):
        return self._chain(self.par, ("&",))

    def par(self):
        return self._chain(self.seq, ("||",))

    def seq(self):
        return self._chain(self.post, (".", ";"))

    def _chain(self, sub, ops):
        left = sub()
        while self.at(*ops):
            op = self.take()[1]
            left = App(BINARY_INFIX[op], (left, sub()))
        return left

    def post(self):
        t = self.atom()
        while self.at(*POSTFIX):
            t = App(POSTFIX[self.take()[1]], (t,))
        return t

    def atom(self):
        kind, val = self.peek()
        if kind == "op" and val == "(":
            self.take()
            t = self.expr()
            self.take(")")
            return t
        if kind == "op" and val == "~":
            self.take()
            return App("complement", (self.post_atom(),))
        if kind == "const":
            self.take()
            return Const(val)
        if kind == "name":
            self.take()
            if self.at("(") and val in FUNCTIONS:
                op, arity = FUNCTIONS[val]
                self.take("(")
                args = [self.expr()]
                while self.at(","):
                    self.take()
                    args.append(self.expr())
                self.take(")")
                if len(args) != arity:
                    raise TermSyntaxError(
                        f"{val} takes {arity} argument(s), got {len(args)}")
                return App(op, tuple(args))
            if val in FUNCTIONS:
                raise TermSyntaxError(f"{val!r} is a function name")
            sort = "General"
            if self.at(":"):
                self.take()
                k, s = self.take()
                if s not in SORTS:
                    raise TermSyntaxError(f"unknown sort {s!r}")
                sort = SORTS[s]
            return Var(val, sort)
        raise TermSyntaxError(
            f"unexpected {val or 'end of input'!r} in {self.text!r}")

    def post_atom(self):
        t = self.atom()
        while self.at(*POSTFIX):
            t = App(POSTFIX[self.take()[1]], (t,))
        return t

    def relation(self, allowed=("=", "<=", ">=", "!=")):
        lhs = self.expr()
        kind, val = self.peek()
        if kind != "op" or val not in allowed:
            raise TermSyntaxError(
                f"expected one of {allowed} in {self.text!r}")
        self.take()
        rhs = self.expr()
        if val == ">=":
            return Relation(rhs, "<=", lhs)
        return Relation(lhs, val, rhs)


def _unify_sorts(terms):
    """Give every occurrence of a variable its single declared sort."""
    declared = {}

    def collect(t):
        if isinstance(t, Var):
            if t.sort != "General":
                old = declared.setdefault(t.name, t.sort)
                if old != t.sort:
                    raise SortError(
                        f"variable {t.name} declared both {old} and {t.sort}")
        elif isinstance(t, App):
            for a in t.args:
                collect(a)

    def fix(t):
        if isinstance(t, Var):
            return Var(t.name, declared.get(t.name, "General"))
        if isinstance(t, App):
            return App(t.op, tuple(fix(a) for a in t.args))
        return t

    for t in terms:
        collect(t)
    return [fix(t) for t in terms]


def parse_term(text: str):
    p = _Parser(text)
    t = p.expr()
    p.expect_end()
    (t,) = _unify_sorts([t])
    return t


def parse_law(text: str):
    """Parse ``hyp, hyp => lhs rel rhs``; returns (hypotheses, conclusion)."""
    p = _Parser(text)
    rels = [p.relation()]
    hyps = []
    while p.at(","):
        p.take()
        rels.append(p.relation())
    if p.at("=>"):
        p.take()
        hyps = rels
        rels = [p.relation(("=", "<=", ">="))]
    if len(rels) != 1:
        raise TermSyntaxError(f"several conclusions in {text!r}")
    p.expect_end()
    concl = rels[0]
    if concl.rel == "!=":
        raise TermSyntaxError("a conclusion must use '=' or '<='")
    sides = []
    for r in hyps + [concl]:
        sides += [r.lhs, r.rhs]
    sides = _unify_sorts(sides)
    out = [Relation(sides[2 * i], r.rel, sides[2 * i + 1])
           for i, r in enumerate(hyps + [concl])]
    return tuple(out[:-1]), out[-1]


def law_variables(hyps, concl) -> list:
    out = []
    for r in list(hyps) + [concl]:
        for v in variables(r.lhs) + variables(r.rhs):
            if v not in out:
                out.append(v)
    return out


def variable_sorts(hyps, concl) -> dict:
    sorts = {}

    def walk(t):
        if isinstance(t, Var):
            sorts[t.name] = t.sort
        elif isinstance(t, App):
            for a in t.args:
                walk(a)

    for r in list(hyps) + [concl]:
        walk(r.lhs)
        walk(r.rhs)
    return sorts
