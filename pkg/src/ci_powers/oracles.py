"""Brute-force cross-checks that share no code path with the formulas.

* `monomial_hf` counts standard monomials of the monomial complete
  intersection (x_0^{d_1}, ..., x_{r-1}^{d_r})^s. Its Hilbert function equals
  that of any complete intersection power of the same type.
* `points_hf` builds the interpolation conditions for explicit fat points and
  takes an exact rank. Vanishing to order m at P is encoded by all affine
  partial derivatives of order <= m-1 (char 0).
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .combinatorics import binomial
from .hilbert import check_ambient
from .linalg import exact_rank
from .resolution import PreconditionError, as_citype


class SchemaError(PreconditionError):
    """Malformed point-configuration JSON."""


# ---------------------------------------------------------------------------
# monomial model
# ---------------------------------------------------------------------------

def exponent_vectors(nvars: int, t: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of the degree-t monomials in `nvars` variables, lex descending."""
    if nvars == 0:
        if t == 0:
            yield ()
        return
    if nvars == 1:
        yield (t,)
        return
    for first in range(t, -1, -1):
        for rest in exponent_vectors(nvars - 1, t - first):
            yield (first,) + rest


def _outside_power(b, degrees, s) -> bool:
    return sum(bj // dj for bj, dj in zip(b, degrees)) <= s - 1


def monomial_hf_naive(citype, n: int, s: int, t: int) -> int:
    """Literal count over every degree-t monomial in n+1 variables."""
    ct = as_citype(citype)
    check_ambient(ct.r, n)
    if s < 1:
        raise PreconditionError(f"power must be >= 1 (got s={s})")
    if t < 0:
        return 0
    return sum(1 for b in exponent_vectors(n + 1, t) if _outside_power(b, ct.degrees, s))


def _constrained_weights(degrees, s) -> dict[int, int]:
    """Histogram by total degree of exponent vectors on the first r variables
    that survive outside the power (each b_j < s*d_j, so the set is finite)."""
    hist: dict[int, int] = {}

    def rec(j, weight, budget):
        if j == len(degrees):
            hist[weight] = hist.get(weight, 0) + 1
            return
        d = degrees[j]
        # floor(b/d) may use at most the remaining budget
        for b in range((budget + 1) * d):
            rec(j + 1, weight + b, budget - b // d)

    rec(0, 0, s - 1)
    return hist


def monomial_hf_values(citype, n: int, s: int, D: int) -> list[int]:
    """H(0..D) of R/(x_0^{d_1},...,x_{r-1}^{d_r})^s, R = k[x_0..x_n].

    The r constrained exponents are enumerated; the remaining n+1-r variables
    are free and contribute C(t - w + k - 1, k - 1) monomials of degree t - w.
    """
    ct = as_citype(citype)
    check_ambient(ct.r, n)
    if s < 1:
        raise PreconditionError(f"power must be >= 1 (got s={s})")
    hist = _constrained_weights(ct.degrees, s)
    k = n + 1 - ct.r
    out = []
    for t in range(D + 1):
        if k == 0:
            out.append(hist.get(t, 0))
        else:
            out.append(sum(c * binomial(t - w + k - 1, k - 1) for w, c in hist.items() if w <= t))
    return out


def monomial_hf(citype, n: int, s: int, t: int) -> int:
    if t < 0:
        return 0
    return monomial_hf_values(citype, n, s, t)[t]


# ---------------------------------------------------------------------------
# explicit fat points
# ---------------------------------------------------------------------------

def _normalize(coords: Sequence[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    """Scale so the first nonzero coordinate is 1; return (its index, coords)."""
    j = next(k for k, c in enumerate(coords) if c != 0)
    lead = coords[j]
    return j, tuple(c / lead for c in coords)


@dataclass
class PointConfig:
    """Fat points in P^n with exact rational coordinates."""

    ambient: int
    points: list[tuple[tuple[Fraction, ...], int]] = field(default_factory=list)

    def __post_init__(self):
        pts = []
        seen = set()
        for idx, (coords, mult) in enumerate(self.points):
            coords = tuple(Fraction(c) for c in coords)
            if len(coords) != self.ambient + 1:
                raise SchemaError(f"points[{idx}].coords: expected {self.ambient + 1} coordinates, got {len(coords)}")
            if all(c == 0 for c in coords):
                raise SchemaError(f"points[{idx}].coords: the zero vector is not a projective point")
            if int(mult) != mult or mult < 1:
                raise SchemaError(f"points[{idx}].mult: multiplicity must be an integer >= 1 (got {mult})")
            key = _normalize(coords)[1]
            if key in seen:
                raise SchemaError(f"points[{idx}]: duplicates an earlier point projectively")
            seen.add(key)
            pts.append((coords, int(mult)))
        self.points = pts

    @property
    def degree(self) -> int:
        """deg Z = sum C(n + m_i - 1, n)."""
        n = self.ambient
        return sum(binomial(n + m - 1, n) for _, m in self.points)

    @property
    def mults(self) -> list[int]:
        return [m for _, m in self.points]

    def to_json_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "points": [{"coords": [str(c) for c in coords], "mult": m} for coords, m in self.points],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data) -> "PointConfig":
        if not isinstance(data, dict):
            raise SchemaError("top level: expected an object with 'ambient' and 'points'")
        if "ambient" not in data:
            raise SchemaError("ambient: missing field")
        if not isinstance(data["ambient"], int) or data["ambient"] < 0:
            raise SchemaError(f"ambient: expected a non-negative integer (got {data['ambient']!r})")
        if not isinstance(data.get("points"), list):
            raise SchemaError("points: expected a list")
        pts = []
        for idx, p in enumerate(data["points"]):
            if not isinstance(p, dict) or "coords" not in p:
                raise SchemaError(f"points[{idx}].coords: missing field")
            if not isinstance(p["coords"], list):
                raise SchemaError(f"points[{idx}].coords: expected a list of rational strings")
            coords = []
            for k, c in enumerate(p["coords"]):
                try:
                    coords.append(Fraction(str(c)))
                except (ValueError, ZeroDivisionError):
                    raise SchemaError(f"points[{idx}].coords[{k}]: not a rational number: {c!r}") from None
            mult = p.get("mult", 1)
            if not isinstance(mult, int):
                raise SchemaError(f"points[{idx}].mult: expected an integer (got {mult!r})")
            pts.append((tuple(coords), mult))
        return cls(data["ambient"], pts)

    @classmethod
    def loads(cls, text: str) -> "PointConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(data)


def grid_points(value_lists: Sequence[Sequence], mult=1) -> PointConfig:
    """The box of points (1 : a_1 : ... : a_n), a_k ranging over value_lists[k].

    Each coordinate hyperplane family gives a product of distinct linear forms,
    so the points are a complete intersection of type (len(list_1), ..., len(list_n)).
    `mult` is one multiplicity or a list in itertools.product order.
    """
    lists = [[Fraction(v) for v in vals] for vals in value_lists]
    for k, vals in enumerate(lists):
        if not vals:
            raise PreconditionError(f"value list {k} is empty")
        if len(set(vals)) != len(vals):
            raise PreconditionError(f"value list {k} has duplicate entries; grid lines must be distinct")
    coords = [(Fraction(1),) + combo for combo in itertools.product(*lists)]
    if isinstance(mult, int):
        mults = [mult] * len(coords)
    else:
        mults = list(mult)
        if len(mults) != len(coords):
            raise PreconditionError(f"expected {len(coords)} multiplicities, got {len(mults)}")
    return PointConfig(len(lists), list(zip(coords, mults)))


def remove_point(config: PointConfig, index: int) -> PointConfig:
    if not 0 <= index < len(config.points):
        raise IndexError(f"point index {index} out of range 0..{len(config.points) - 1}")
    return PointConfig(config.ambient, config.points[:index] + config.points[index + 1:])


def _falling(b: int, a: int) -> int:
    return math.perm(b, a) if a <= b else 0


def conditions_matrix(config: PointConfig, t: int) -> list[list[Fraction]]:
    """Rows: derivative conditions; columns: degree-t monomials of k[x_0..x_n]."""
    n = config.ambient
    basis = list(exponent_vectors(n + 1, t))
    rows = []
    for coords, m in config.points:
        j, p = _normalize(coords)
        others = [k for k in range(n + 1) if k != j]
        for order in range(m):
            for alpha in exponent_vectors(n, order):
                row = []
                for b in basis:
                    val = Fraction(1)
                    for k, a in zip(others, alpha):
                        f = _falling(b[k], a)
                        if not f:
                            val = Fraction(0)
                            break
                        val *= f * p[k] ** (b[k] - a)
                    row.append(val)
                rows.append(row)
    return rows


def conditions_rank(config: PointConfig, t: int) -> int:
    if t < 0:
        return 0
    return exact_rank(conditions_matrix(config, t))


def points_hf(config: PointConfig, t: int) -> int:
    """H_{R/I_Z}(t) as the rank of the interpolation conditions in degree t."""
    return conditions_rank(config, t)


def ideal_dim(config: PointConfig, t: int) -> int:
    """dim (I_Z)_t = C(t+n, n) - H(t)."""
    if t < 0:
        return 0
    return binomial(t + config.ambient, config.ambient) - points_hf(config, t)


@dataclass
class OracleInvariants:
    values: list[int]
    alpha: int
    ri: int
    deg: int


def points_invariants(config: PointConfig) -> OracleInvariants:
    """Scan degrees until both alpha and ri are found.

    The Hilbert function of fat points is non-decreasing and reaches deg Z no
    later than degree sum(m_i) - 1, so the scan always terminates.
    """
    n = config.ambient
    deg = config.degree
    values = []
    alpha = ri = None
    limit = max(sum(config.mults), 1) + 1
    t = 0
    while alpha is None or ri is None:
        if t > limit:
            raise AssertionError(f"no stabilization by degree {limit}; Hilbert function so far {values}")
        h = points_hf(config, t)
        values.append(h)
        if alpha is None and binomial(t + n, n) - h > 0:
            alpha = t
        if ri is None and h == deg:
            ri = t
        t += 1
    return OracleInvariants(values, alpha, ri, deg)


def points_hf_values(config: PointConfig, D: int) -> list[int]:
    return [points_hf(config, t) for t in range(D + 1)]
