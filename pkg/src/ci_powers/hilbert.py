"""Hilbert functions of R/I and R/I^s, R = k[x_0..x_n], and the multiplicity e(R/I^s).

Series are handled as truncated exact integer polynomials: a numerator K(z)
over (1 - z)^(n+1), expanded to degree D.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .combinatorics import binomial, enum_L
from .resolution import BettiTable, CIType, PreconditionError, as_citype


@dataclass
class HilbertData:
    ambient: int
    values: list[int]
    numerator: list[int]

    def to_json_dict(self) -> dict:
        return {"ambient": self.ambient, "values": list(self.values), "numerator": list(self.numerator)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "HilbertData":
        try:
            return cls(int(data["ambient"]), [int(v) for v in data["values"]], [int(c) for c in data["numerator"]])
        except KeyError as exc:
            raise PreconditionError(f"Hilbert data JSON is missing field {exc.args[0]!r}") from None

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "value"])
        for t, v in enumerate(self.values):
            w.writerow([t, v])
        return buf.getvalue()

    def __getitem__(self, t: int) -> int:
        if t < 0:
            return 0
        return self.values[t]


def check_ambient(r: int, n: int) -> None:
    if n < 0:
        raise PreconditionError(f"ambient dimension must be >= 0 (got n={n})")
    if r > n + 1:
        raise PreconditionError(
            f"type longer than ambient allows: r={r} generators but a regular sequence "
            f"in k[x_0..x_{n}] has length at most n+1={n + 1}"
        )


def default_max_degree(citype, s: int = 1) -> int:
    """s * sum(d_i) + 5, enough to see stabilization for points."""
    ct = as_citype(citype)
    return s * sum(ct.degrees) + 5


def poly_mul(p: list[int], q: list[int], cap: int | None = None) -> list[int]:
    """Product of coefficient lists, optionally truncated above degree `cap`."""
    size = len(p) + len(q) - 1
    if cap is not None:
        size = min(size, cap + 1)
    out = [0] * max(size, 0)
    for i, a in enumerate(p):
        if not a or i >= size:
            continue
        for j, b in enumerate(q):
            if i + j >= size:
                break
            out[i + j] += a * b
    return out


def _trim(p: list[int]) -> list[int]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def series_values(numerator: list[int], n: int, D: int) -> list[int]:
    """Coefficients 0..D of numerator(z) / (1 - z)^(n+1)."""
    # 1/(1-z)^(n+1) has coefficient C(t+n, n) in degree t
    return [
        sum(c * binomial(t - j + n, n) for j, c in enumerate(numerator) if j <= t)
        for t in range(D + 1)
    ]


def ci_numerator(citype) -> list[int]:
    """prod (1 - z^{d_i})."""
    num = [1]
    for d in as_citype(citype).degrees:
        factor = [0] * (d + 1)
        factor[0], factor[d] = 1, -1
        num = poly_mul(num, factor)
    return num


def hf_ci(citype, n: int, D: int) -> HilbertData:
    ct = as_citype(citype)
    check_ambient(ct.r, n)
    num = ci_numerator(ct)
    return HilbertData(n, series_values(num, n, D), num)


def hf_power(citype, n: int, s: int, D: int) -> HilbertData:
    """H_{R/I^s}(t) = sum over a in L_{r,s} of H_{R/I}(t - a.d)."""
    ct = as_citype(citype)
    check_ambient(ct.r, n)
    if s < 1:
        raise PreconditionError(f"power must be >= 1 (got s={s})")
    base = hf_ci(ct, n, D)
    shifts = [sum(a_j * d_j for a_j, d_j in zip(a, ct.degrees)) for a in enum_L(ct.r, s)]
    values = [sum(base[t - b] for b in shifts) for t in range(D + 1)]

    shift_poly = [0] * (max(shifts) + 1)
    for b in shifts:
        shift_poly[b] += 1
    return HilbertData(n, values, _trim(poly_mul(shift_poly, base.numerator)))


def betti_numerator(table: BettiTable) -> list[int]:
    """K(z) = 1 + sum_i (-1)^(i+1) sum_b mult * z^b."""
    top = max((b for col in table.columns for b in col), default=0)
    num = [0] * (top + 1)
    num[0] = 1
    for i, col in enumerate(table.columns):
        sign = -1 if i % 2 == 0 else 1
        for b, m in col.items():
            num[b] += sign * m
    return _trim(num)


def hf_from_betti(table: BettiTable, n: int, D: int) -> HilbertData:
    check_ambient(table.r, n)
    num = betti_numerator(table)
    return HilbertData(n, series_values(num, n, D), num)


def multiplicity(citype, s: int) -> int:
    """e(R/I^s) = C(s+r-1, r) * d_1 ... d_r."""
    ct = as_citype(citype)
    if s < 1:
        raise PreconditionError(f"power must be >= 1 (got s={s})")
    prod = 1
    for d in ct.degrees:
        prod *= d
    return binomial(s + ct.r - 1, ct.r) * prod


def first_attainment(values: list[int], target: int) -> int | None:
    """Least t with values[t] == target, or None inside the window."""
    for t, v in enumerate(values):
        if v == target:
            return t
    return None


def stabilization_degree(citype, s: int) -> int:
    """Least degree where H_{R/I^s} reaches deg for r = n (points).

    The window is extended until the value is attained.
    """
    ct = as_citype(citype)
    n = ct.r
    target = multiplicity(ct, s)
    D = default_max_degree(ct, s)
    while True:
        t = first_attainment(hf_power(ct, n, s, D).values, target)
        if t is not None:
            return t
        D *= 2
