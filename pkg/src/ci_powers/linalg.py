"""Exact rank over Q by fraction-free row elimination."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def _integer_row(row: Sequence) -> list[int]:
    """Scale a row of rationals to a primitive integer row (same row space)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = math.lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = math.gcd(*ints) if ints else 0
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix of ints/Fractions.

    Pivots are the first row (in input order) with a nonzero entry in the
    current column. Rows are kept primitive after each update so entries stay
    small; no division ever leaves the integers.
    """
    work = [r for r in (_integer_row(row) for row in rows) if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for c in range(ncols):
        piv_idx = next((k for k in range(rank, len(work)) if work[k][c]), None)
        if piv_idx is None:
            continue
        work[rank], work[piv_idx] = work[piv_idx], work[rank]
        pivot = work[rank]
        p = pivot[c]
        for k in range(rank + 1, len(work)):
            row = work[k]
            f = row[c]
            if not f:
                continue
            new = [p * x - f * y for x, y in zip(row, pivot)]
            g = math.gcd(*new)
            if g > 1:
                new = [x // g for x in new]
            work[k] = new
        rank += 1
        if rank == len(work):
            break
    return rank
