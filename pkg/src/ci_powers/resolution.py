"""Graded Betti tables of a complete intersection I and of its powers I^s.

Everything is read off the type (d_1, ..., d_r): the Koszul complex for I, and
for I^s a sum over the sets M_{r,s,t} of compositions weighted by chain
multiplicities.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .combinatorics import binomial, chain_multiplicities, enum_M


class PreconditionError(ValueError):
    """An input violates a hypothesis a computation depends on."""


@dataclass(frozen=True)
class CIType:
    """Generator degrees of a complete intersection, stored ascending."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        if not degs:
            raise PreconditionError("a complete intersection needs at least one generator (r >= 1)")
        bad = [d for d in degs if d < 1]
        if bad:
            raise PreconditionError(f"degrees must be >= 1 (got {bad[0]}): generators are forms of positive degree")
        object.__setattr__(self, "degrees", tuple(sorted(degs)))

    @classmethod
    def parse(cls, text: str) -> "CIType":
        """Parse a comma separated list such as ``"2,3"``."""
        parts = [p.strip() for p in text.split(",")]
        try:
            degs = [int(p) for p in parts]
        except ValueError:
            raise PreconditionError(f"malformed type {text!r}: expected comma-separated positive integers") from None
        return cls(tuple(degs))

    @property
    def r(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __str__(self):
        return "(" + ",".join(map(str, self.degrees)) + ")"


def as_citype(value) -> CIType:
    if isinstance(value, CIType):
        return value
    if isinstance(value, str):
        return CIType.parse(value)
    return CIType(tuple(value))


@dataclass
class BettiTable:
    """Graded Betti numbers of an ideal: column i maps twist -> multiplicity.

    Column i is the i-th free module in the resolution of the ideal (column 0
    holds the generators). Zero multiplicities are never stored.
    """

    r: int
    s: int
    columns: list[dict[int, int]] = field(default_factory=list)

    @classmethod
    def from_twists(cls, r: int, s: int, twists_by_column: Iterable[Iterable[int]]) -> "BettiTable":
        cols = []
        for twists in twists_by_column:
            counts = Counter(twists)
            cols.append({b: counts[b] for b in sorted(counts)})
        return cls(r, s, cols)

    def total(self, i: int) -> int:
        return sum(self.columns[i].values())

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(len(self.columns))]

    def alternating_rank_sum(self) -> int:
        """1 + sum_i (-1)^(i+1) rk(col i); zero for a resolution of a grade >= 1 ideal."""
        return 1 + sum((-1) ** (i + 1) * tot for i, tot in enumerate(self.totals()))

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "columns": [
                {"i": i, "twists": [{"shift": b, "mult": m} for b, m in sorted(col.items())]}
                for i, col in enumerate(self.columns)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BettiTable":
        try:
            cols_in = sorted(data["columns"], key=lambda c: c["i"])
            if [c["i"] for c in cols_in] != list(range(len(cols_in))):
                raise PreconditionError("columns: homological indices must be 0..r-1 without gaps")
            cols = []
            for c in cols_in:
                col = {int(t["shift"]): int(t["mult"]) for t in c["twists"]}
                cols.append(dict(sorted(col.items())))
            return cls(int(data["r"]), int(data["s"]), cols)
        except KeyError as exc:
            raise PreconditionError(f"Betti table JSON is missing field {exc.args[0]!r}") from None

    def render(self) -> str:
        """Aligned text: one column per homological degree, one row per twist."""
        twists = sorted({b for col in self.columns for b in col})
        header = ["twist"] + [str(i) for i in range(len(self.columns))]
        rows = [[str(b)] + [str(col.get(b, ".")) for col in self.columns] for b in twists]
        rows.append(["total"] + [str(t) for t in self.totals()])
        widths = [max(len(row[k]) for row in [header] + rows) for k in range(len(header))]
        lines = []
        for row in [header] + rows:
            lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
        return "\n".join(lines)


def koszul_betti(citype) -> BettiTable:
    """Betti table of I itself: column j has one twist per (j+1)-subset of the degrees."""
    ct = as_citype(citype)
    cols = []
    for j in range(ct.r):
        cols.append([sum(sub) for sub in itertools.combinations(ct.degrees, j + 1)])
    return BettiTable.from_twists(ct.r, 1, cols)


def _twist(a, degrees) -> int:
    return sum(x * d for x, d in zip(a, degrees))


def power_betti(citype, s: int) -> BettiTable:
    """Betti table of I^s for a complete intersection I of the given type."""
    ct = as_citype(citype)
    if s < 1:
        raise PreconditionError(f"power must be >= 1 (got s={s}); I^0 = R has no resolution to describe")
    r, degs = ct.r, ct.degrees
    chains = chain_multiplicities(r)

    cols = [Counter(_twist(a, degs) for a in enum_M(r, s, 1))]
    for i in range(1, r):
        col = Counter()
        for t in range(i + 1, r + 1):
            weight = chains[(i, t)]
            for a in enum_M(r, s + i, t):
                col[_twist(a, degs)] += weight
        cols.append(col)
    return BettiTable(r, s, [{b: c[b] for b in sorted(c)} for c in cols])


def rank_formula(r: int, s: int, i: int) -> int:
    """Rank of the i-th module in the resolution of I^s: C(r+s-1, s+i) C(s-1+i, i)."""
    if not 0 <= i <= r - 1:
        raise PreconditionError(f"homological index must lie in 0..{r - 1} (got i={i})")
    if s < 1:
        raise PreconditionError(f"power must be >= 1 (got s={s})")
    return binomial(r + s - 1, s + i) * binomial(s - 1 + i, i)


def extreme_shifts(table: BettiTable) -> list[tuple[int, int]]:
    if not table.columns or not any(table.columns):
        raise PreconditionError("extreme shifts of an empty table are undefined")
    return [(min(col), max(col)) for col in table.columns]
