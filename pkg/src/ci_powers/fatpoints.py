"""Invariants of fat points supported on a complete intersection X = CI(d_1..d_n) in P^n.

Homogeneous schemes {X; m} are cut out by I_X^m, so everything follows from
the Hilbert function of a power. Non-homogeneous schemes are sandwiched
between the two homogeneous ones, and X minus one fat point is handled when
X splits off a hyperplane section containing the removed point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .combinatorics import binomial
from .hilbert import default_max_degree, hf_ci, hf_power, multiplicity
from .resolution import CIType, PreconditionError, as_citype


class HypothesisError(PreconditionError):
    """A result is being applied outside the hypotheses it was proved under."""


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def __str__(self):
        return str(self.lo) if self.exact else f"[{self.lo},{self.hi}]"

    def to_json(self) -> list[int]:
        return [self.lo, self.hi]


@dataclass
class InvariantReport:
    alpha: Interval | None
    ri: Interval | None
    deg: int
    notes: dict[str, str] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha.to_json() if self.alpha else None,
            "ri": self.ri.to_json() if self.ri else None,
            "deg": self.deg,
            "notes": dict(sorted(self.notes.items())),
        }

    def summary(self) -> str:
        lines = []
        for name, val in (("alpha", self.alpha), ("ri", self.ri)):
            if val is not None:
                lines.append(f"{name} = {val}    ({self.notes.get(name, '')})")
        lines.append(f"deg = {self.deg}    ({self.notes.get('deg', '')})")
        return "\n".join(lines)


@dataclass
class FatCISpec:
    """Fat points on CI(d_1..d_n) in P^n: one multiplicity, or one per point."""

    type: CIType
    ambient: int
    mult: int | None = None
    mults: list[int] | None = None

    def __post_init__(self):
        self.type = as_citype(self.type)
        if self.type.r != self.ambient:
            raise HypothesisError(
                f"support must be points: type has r={self.type.r} forms but P^{self.ambient} "
                f"needs exactly n={self.ambient} for a zero-dimensional complete intersection"
            )
        if (self.mult is None) == (self.mults is None):
            raise PreconditionError("give exactly one of mult (homogeneous) or mults (per point)")
        if self.mult is not None and self.mult < 1:
            raise PreconditionError(f"multiplicity must be >= 1 (got {self.mult})")
        if self.mults is not None:
            self.mults = [int(m) for m in self.mults]
            if not self.mults:
                raise PreconditionError("mults must be non-empty")
            if any(m < 1 for m in self.mults):
                raise PreconditionError(f"every multiplicity must be >= 1 (got {self.mults})")
            if len(self.mults) != self.npoints:
                raise PreconditionError(
                    f"CI{self.type} has {self.npoints} points but {len(self.mults)} multiplicities were given"
                )

    @property
    def npoints(self) -> int:
        out = 1
        for d in self.type.degrees:
            out *= d
        return out

    @property
    def homogeneous(self) -> bool:
        return self.mult is not None or len(set(self.mults)) == 1


AXES = ("first", "last")


@dataclass
class SplitSpec:
    """X = CI(.., d_i - 1, ..) u CI(.., 1, ..) with the removed point in the degree-1 part."""

    base: FatCISpec
    split_axis: str
    removed_in_hyperplane: bool

    def __post_init__(self):
        if self.split_axis not in AXES:
            raise PreconditionError(f"split axis must be one of {AXES} (got {self.split_axis!r})")
        if self.base.mult is None:
            raise HypothesisError("split results are stated for homogeneous schemes {X; m} only")

    @property
    def split_degree(self) -> int:
        degs = self.base.type.degrees
        return degs[0] if self.split_axis == "first" else degs[-1]

    def pieces(self) -> tuple[CIType, CIType]:
        degs = list(self.base.type.degrees)
        k = 0 if self.split_axis == "first" else len(degs) - 1
        big, small = list(degs), list(degs)
        big[k] -= 1
        small[k] = 1
        return CIType(tuple(big)), CIType(tuple(small))


def _ri_formula(degrees: Sequence[int], m: int) -> int:
    """d_1 + ... + d_{n-1} + m d_n - n."""
    n = len(degrees)
    return sum(degrees[:-1]) + m * degrees[-1] - n


def fat_degree(n: int, mults: Sequence[int]) -> int:
    return sum(binomial(n + m - 1, n) for m in mults)


def ci_invariants(spec: FatCISpec) -> InvariantReport:
    if spec.mult is None:
        if not spec.homogeneous:
            raise HypothesisError("ci_invariants needs a homogeneous scheme; use sandwich_bounds")
        m = spec.mults[0]
    else:
        m = spec.mult
    degs = spec.type.degrees
    n = spec.ambient
    alpha = m * degs[0]
    ri = _ri_formula(degs, m)
    deg = multiplicity(spec.type, m)
    return InvariantReport(
        Interval(alpha, alpha),
        Interval(ri, ri),
        deg,
        {
            "alpha": "I_Z = I_X^m is generated in degree >= m*d_1",
            "ri": "Hilbert function of R/I_X^m reaches deg at d_1+...+d_{n-1}+m*d_n-n",
            "deg": f"prod(d_i) * C(m+n-1, n) = {deg}",
        },
    )


def sandwich_bounds(spec: FatCISpec, D: int | None = None):
    """Bounds for non-homogeneous fat points from I_X^M <= I_Z <= I_X^m.

    Returns (list of per-degree (lo, hi) Hilbert function bounds for 0..D, report).
    """
    if spec.mults is None:
        mults = [spec.mult] * spec.npoints
    else:
        mults = spec.mults
    m, M = min(mults), max(mults)
    n = spec.ambient
    degs = spec.type.degrees
    if D is None:
        D = default_max_degree(spec.type, M)
    lo_hf = hf_power(spec.type, n, m, D).values
    hi_hf = hf_power(spec.type, n, M, D).values
    report = InvariantReport(
        Interval(m * degs[0], M * degs[0]),
        Interval(_ri_formula(degs, m), _ri_formula(degs, M)),
        fat_degree(n, mults),
        {
            "alpha": f"m*d_1 <= alpha <= M*d_1 with m={m}, M={M}",
            "ri": f"ri of {{X;m}} <= ri <= ri of {{X;M}} with m={m}, M={M}",
            "deg": "sum over points of C(n+m_i-1, n)",
        },
    )
    return list(zip(lo_hf, hi_hf)), report


def cb_minus_point_hf(citype, t: int) -> int:
    """Hilbert function of a reduced CI(d_1..d_n) minus one point: min{H_X(t), |X| - 1}."""
    ct = as_citype(citype)
    if t < 0:
        return 0
    npts = 1
    for d in ct.degrees:
        npts *= d
    return min(hf_ci(ct, ct.r, t).values[t], npts - 1)


def _require_hyperplane_point(spec: SplitSpec) -> None:
    if not spec.removed_in_hyperplane:
        raise HypothesisError(
            "the removed point must lie in the degree-1 piece of the split; "
            "for other points the invariants depend on how X is constructed"
        )


def split_alpha(spec: SplitSpec) -> Interval:
    """alpha(Y) for Y = {X;m} minus (P,m), X split on its largest degree d_n."""
    if spec.split_axis != "last":
        raise HypothesisError("the alpha bound needs X split on the last (largest) degree d_n")
    _require_hyperplane_point(spec)
    degs = spec.base.type.degrees
    m = spec.base.mult
    if degs[-1] < 2:
        raise HypothesisError(f"split coordinate degree >= 2 required (d_n = {degs[-1]})")
    if degs[0] == degs[-1]:
        return Interval(m * (degs[0] - 1), m * degs[0])
    return Interval(m * degs[0], m * degs[0])


def split_ri_bounds(spec: SplitSpec) -> Interval:
    """d - (n+1) <= ri(Y) <= d - n with d = d_1 + ... + d_{n-1} + m d_n, X split on d_1."""
    if spec.split_axis != "first":
        raise HypothesisError("the ri lower bound needs X split on the first (smallest) degree d_1")
    _require_hyperplane_point(spec)
    degs = spec.base.type.degrees
    if degs[0] < 2:
        raise HypothesisError(f"split coordinate degree >= 2 required (d_1 = {degs[0]})")
    n = len(degs)
    d = sum(degs[:-1]) + spec.base.mult * degs[-1]
    return Interval(d - (n + 1), d - n)


def p2_exact_ri(d1: int, d2: int, m: int) -> int:
    """ri(Y) = d_1 + m d_2 - 3 for X = CI(d_1,d_2) in P^2 split on d_1."""
    if not 2 <= d1 <= d2:
        raise HypothesisError(f"need 2 <= d_1 <= d_2 (got d_1={d1}, d_2={d2})")
    if m < 1:
        raise HypothesisError(f"multiplicity must be >= 1 (got m={m})")
    return d1 + m * d2 - 3


def b_value(d1: int, d2: int, minus_point: bool = False) -> int:
    """Least degree holding a regular sequence of length two in I_X (or I_Y, Y = X minus a point)."""
    if not 1 <= d1 <= d2:
        raise HypothesisError(f"need 1 <= d_1 <= d_2 (got d_1={d1}, d_2={d2})")
    # For Y the ideals agree with I_X through degree d_1+d_2-3, so b is unchanged.
    return d2


def trung_valla_bound(ri_support: int, b_values: Sequence[int]) -> int:
    """ri(Z) <= ri(X) + sum_{i=2}^{m_1} b(Y_i); b_values lists b(Y_2), ..., b(Y_{m_1})."""
    return ri_support + sum(b_values)


def split_report(spec: SplitSpec) -> InvariantReport:
    """Whatever the split results give for Y = {X;m} minus one fat point in the hyperplane piece."""
    degs = spec.base.type.degrees
    n = spec.base.ambient
    m = spec.base.mult
    deg = multiplicity(spec.base.type, m) - binomial(n + m - 1, n)
    notes = {"deg": f"deg {{X;m}} minus C(n+m-1, n) = {deg}"}
    alpha = ri = None
    if spec.split_axis == "last":
        alpha = split_alpha(spec)
        notes["alpha"] = (
            "m(d_1-1) <= alpha(Y) <= m*d_1 (d_1 = d_n)" if not alpha.exact else "alpha(Y) = alpha(Z) = m*d_1 (d_1 < d_n)"
        )
    else:
        ri = split_ri_bounds(spec)
        notes["ri"] = "d-(n+1) <= ri(Y) <= d-n, lower bound from the split, upper from ri(Y) <= ri(Z)"
        if n == 2:
            exact = p2_exact_ri(degs[0], degs[1], m)
            ri = Interval(exact, exact)
            notes["ri"] = (
                "ri(Y) = d_1 + m*d_2 - 3 in P^2: Trung-Valla upper bound "
                f"{trung_valla_bound(degs[0] + degs[1] - 3, [degs[1]] * (m - 1))} meets the split lower bound"
            )
    return InvariantReport(alpha, ri, deg, notes)


# Hilbert functions of {CI(3,4);3} minus one triple point in P^2 for two
# constructions of the support. Neither is reproducible from rational points
# here when the forms are irreducible; kept as reference data.
REFERENCE_HF = {
    "linear_forms": [1, 3, 6, 10, 15, 21, 28, 36, 45, 54, 62, 65, 66],
    "irreducible_forms": [1, 3, 6, 10, 15, 21, 28, 36, 45, 54, 62, 66],
}
