"""Herzog-Huneke-Srinivasan multiplicity bounds for R/I^s.

With m_i, M_i the least and largest shifts at step i of the resolution of
R/I^s, the bounds read  prod(m_i)/r! <= e(R/I^s) <= prod(M_i)/r!.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .hilbert import multiplicity
from .resolution import PreconditionError, as_citype, extreme_shifts, power_betti


@dataclass
class HHSReport:
    type: tuple[int, ...]
    s: int
    m: list[int]
    M: list[int]
    e: int
    lower: Fraction
    upper: Fraction
    holds: bool
    table_m: list[int] = field(default_factory=list)
    table_M: list[int] = field(default_factory=list)
    mismatch: bool = False

    def to_json_dict(self) -> dict:
        return {
            "type": list(self.type),
            "s": self.s,
            "m": self.m,
            "M": self.M,
            "e": self.e,
            "lower": str(self.lower),
            "upper": str(self.upper),
            "holds": self.holds,
            "table_m": self.table_m,
            "table_M": self.table_M,
            "mismatch": self.mismatch,
        }

    def verdict_line(self) -> str:
        word = "HOLDS" if self.holds else "FAILS"
        return f"{self.lower} ≤ {self.e} ≤ {self.upper} : {word}"


def shift_bounds(citype, s: int) -> tuple[list[int], list[int]]:
    """m_i = s*d_1 + d_2 + ... + d_i,  M_i = d_{r-i+1} + ... + d_{r-1} + s*d_r."""
    ct = as_citype(citype)
    if s < 1:
        raise PreconditionError(f"power must be >= 1 (got s={s})")
    d = ct.degrees
    r = ct.r
    m = [s * d[0] + sum(d[1:i]) for i in range(1, r + 1)]
    M = [sum(d[r - i:r - 1]) + s * d[r - 1] for i in range(1, r + 1)]
    return m, M


def check_hhs(citype, s: int) -> HHSReport:
    ct = as_citype(citype)
    m, M = shift_bounds(ct, s)
    e = multiplicity(ct, s)
    fact = math.factorial(ct.r)
    lower = Fraction(math.prod(m), fact)
    upper = Fraction(math.prod(M), fact)

    # Column i of the ideal's table is step i+1 of the resolution of R/I^s.
    ext = extreme_shifts(power_betti(ct, s))
    table_m = [lo for lo, _ in ext]
    table_M = [hi for _, hi in ext]
    return HHSReport(
        type=ct.degrees,
        s=s,
        m=m,
        M=M,
        e=e,
        lower=lower,
        upper=upper,
        holds=lower <= e <= upper,
        table_m=table_m,
        table_M=table_M,
        mismatch=(table_m != m or table_M != M),
    )
