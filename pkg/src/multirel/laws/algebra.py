"""Finite algebras given by operation tables."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import MultirelError


class AlgebraError(MultirelError):
    """Malformed tables or constants."""


TABLE_OPS = ("union", "meet", "seq", "par")


@dataclass
class FiniteAlgebra:
    name: str
    carrier: list
    tables: dict  # op -> square matrix of carrier indices
    constants: dict  # '0', '1s', '1p', ... -> carrier index
    expected_d: list | None = None  # optional d column to compare against
    _d: list | None = field(default=None, repr=False)

    def __post_init__(self):
        size = len(self.carrier)
        if size == 0 or len(set(self.carrier)) != size:
            raise AlgebraError("carrier must be a non-empty list of distinct labels")
        for op, t in self.tables.items():
            if op not in TABLE_OPS:
                raise AlgebraError(f"unknown table {op!r}")
            if len(t) != size or any(len(row) != size for row in t):
                raise AlgebraError(f"table {op} is not {size}x{size}")
            if any(not 0 <= v < size for row in t for v in row):
                raise AlgebraError(f"table {op} leaves the carrier")
        for need in ("union", "seq", "par"):
            if need not in self.tables:
                raise AlgebraError(f"missing table {need}")
        for c, v in self.constants.items():
            if not 0 <= v < size:
                raise AlgebraError(f"constant {c} is not a carrier member")
        for c in ("0", "1s", "1p"):
            if c not in self.constants:
                raise AlgebraError(f"missing constant {c}")

    @classmethod
    def from_labels(cls, name, carrier, tables, constants, expected_d=None):
        """Build from tables written with carrier labels instead of indices."""
        idx = {x: i for i, x in enumerate(carrier)}
        try:
            t = {op: [[idx[v] for v in row] for row in m] for op, m in tables.items()}
            c = {k: idx[v] for k, v in constants.items()}
            d = None if expected_d is None else [idx[v] for v in expected_d]
        except KeyError as e:
            raise AlgebraError(f"unknown carrier label {e.args[0]!r}") from None
        return cls(name, list(carrier), t, c, d)

    def index(self, label):
        try:
            return self.carrier.index(label)
        except ValueError:
            raise AlgebraError(f"{label!r} is not in the carrier") from None

    def d_table(self) -> list:
        """``d(x) = (x . 1p) || 1s``, derived from the tables."""
        if self._d is None:
            s, p = self.tables["seq"], self.tables["par"]
            one_p, one_s = self.constants["1p"], self.constants["1s"]
            self._d = [p[s[x][one_p]][one_s] for x in range(len(self.carrier))]
        return self._d

    def order_matrix(self):
        j = self.tables["union"]
        n = len(self.carrier)
        return [[j[a][b] == b for b in range(n)] for a in range(n)]

    def check_expected_d(self) -> bool:
        return self.expected_d is None or self.expected_d == self.d_table()

    def to_json(self):
        lab = self.carrier
        return {
            "name": self.name,
            "carrier": list(lab),
            "tables": {op: [[lab[v] for v in row] for row in t]
                       for op, t in self.tables.items()},
            "constants": {k: lab[v] for k, v in self.constants.items()},
        }

    @classmethod
    def from_json(cls, obj):
        return cls.from_labels(obj.get("name", "custom"), obj["carrier"],
                               obj["tables"], obj["constants"],
                               obj.get("expected_d"))


def _chain_tables(order):
    n = len(order)
    join = [[order[max(i, j)] for j in range(n)] for i in range(n)]
    meet = [[order[min(i, j)] for j in range(n)] for i in range(n)]
    return join, meet


def builtin_algebra() -> FiniteAlgebra:
    """The four-element chain 0 < 1p < 1s < a given by fixed operation tables.

    The derived d table is checked against the expected column before the
    algebra is handed out.
    """
    carrier = ["0", "1p", "1s", "a"]
    join, meet = _chain_tables(carrier)
    par = [
        ["0", "0", "0", "0"],
        ["0", "1p", "1s", "a"],
        ["0", "1s", "1s", "a"],
        ["0", "a", "a", "a"],
    ]
    seq = [
        ["0", "0", "0", "0"],
        ["0", "1p", "1p", "1p"],
        ["0", "1p", "1s", "a"],
        ["1p", "1p", "a", "a"],
    ]
    alg = FiniteAlgebra.from_labels(
        "chain4", carrier,
        {"union": join, "meet": meet, "seq": seq, "par": par},
        {"0": "0", "1p": "1p", "1s": "1s"},
        expected_d=["0", "1s", "1s", "1s"])
    if not alg.check_expected_d():
        raise AlgebraError("derived d table differs from the expected column")
    return alg
