"""Binomials and the index sets behind the Betti and Hilbert formulas.

Every enumeration here is emitted in ascending lexicographic order so that
downstream tables and golden outputs are byte-stable.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator

Composition = tuple[int, ...]


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact Python int, 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def compositions(r: int, total: int) -> Iterator[Composition]:
    """All r-tuples of non-negative integers summing to `total`, lex ascending."""
    if r <= 0:
        if r == 0 and total == 0:
            yield ()
        return
    if r == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(r - 1, total - first):
            yield (first,) + rest


def enum_M(r: int, s: int, t: int) -> list[Composition]:
    """Tuples (a_1..a_r) with sum s and at least t nonzero entries."""
    if r < 1 or s < 0:
        return []
    return [a for a in compositions(r, s) if sum(1 for x in a if x) >= t]


def enum_L(r: int, s: int) -> list[Composition]:
    """Tuples (a_1..a_r) with a_1 + ... + a_r <= s - 1."""
    if r < 1 or s < 1:
        return []
    out = [a for total in range(s) for a in compositions(r, total)]
    out.sort()
    return out


def iter_chains(i: int, t: int, r: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing chains i+1 <= l_1 <= ... <= l_i = t with t <= r."""
    if i < 1 or t < i + 1 or t > r:
        return
    # l_1..l_{i-1} are free in [i+1, t]; l_i is pinned to t
    for head in itertools.combinations_with_replacement(range(i + 1, t + 1), i - 1):
        yield head + (t,)


def chain_count(i: int, t: int, r: int) -> int:
    """Number of chains counted by literal enumeration (ground truth)."""
    if i < 1:
        raise ValueError(f"chain length must be >= 1, got i={i}")
    return sum(1 for _ in iter_chains(i, t, r))


def chain_count_closed(i: int, t: int, r: int) -> int:
    """Closed form C(t-2, i-1) of `chain_count`, valid for i+1 <= t <= r."""
    if i < 1:
        raise ValueError(f"chain length must be >= 1, got i={i}")
    if t < i + 1 or t > r:
        return 0
    return binomial(t - 2, i - 1)


# Enumeration cost grows like 2**r; beyond this the closed form is trusted
# on the strength of the property tests alone.
CHAIN_SELF_CHECK_MAX_R = 14


@lru_cache(maxsize=None)
def chain_multiplicities(r: int) -> dict[tuple[int, int], int]:
    """Map (i, t) -> chain count for 1 <= i <= r-1, i+1 <= t <= r.

    Uses the closed form, after checking it against enumeration for this r
    (when r is small enough to enumerate).
    """
    table = {}
    for i in range(1, r):
        for t in range(i + 1, r + 1):
            fast = chain_count_closed(i, t, r)
            if r <= CHAIN_SELF_CHECK_MAX_R and fast != chain_count(i, t, r):
                raise AssertionError(f"chain closed form disagrees at i={i}, t={t}, r={r}")
            table[(i, t)] = fast
    return table
