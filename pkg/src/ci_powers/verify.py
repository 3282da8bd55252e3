"""Property sweeps over a lattice of types and powers.

Each property is checked case by case; the first failing case is kept as the
counterexample. Sweeps can be spread over worker processes
(env CI_POWERS_THREADS); results are collected in lattice order, so the
output does not depend on scheduling.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from . import fatpoints, hhs, hilbert, oracles, resolution
from .combinatorics import binomial, chain_count

SUITES = ("ranks", "series", "oracle")


@dataclass(frozen=True)
class LatticeConfig:
    max_r: int = 4
    max_type: int = 4
    max_s: int = 4
    max_deg: int | None = None  # None: the full window s*sum(d)+5

    def types(self, max_r=None, max_type=None) -> list[tuple[int, ...]]:
        max_r = self.max_r if max_r is None else max_r
        max_type = self.max_type if max_type is None else max_type
        out = []
        for r in range(1, max_r + 1):
            out.extend(itertools.combinations_with_replacement(range(1, max_type + 1), r))
        return out

    def cases(self) -> list[tuple[tuple[int, ...], int]]:
        return [(t, s) for t in self.types() for s in range(1, self.max_s + 1)]

    def window(self, degrees, s) -> int:
        D = s * sum(degrees) + 5
        return D if self.max_deg is None else min(D, self.max_deg)


@dataclass
class PropertyResult:
    suite: str
    name: str
    ok: bool
    cases: int
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  first counterexample: {self.counterexample}" if self.counterexample else ""
        return f"[{status}] {self.suite}/{self.name} ({self.cases} cases){tail}"


def worker_count() -> int:
    raw = os.environ.get("CI_POWERS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _sweep(suite, name, fn: Callable, cases: Iterable) -> PropertyResult:
    """fn(case) returns None on success or a description of the failure."""
    cases = list(cases)
    workers = worker_count()
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(fn, cases))
    else:
        outcomes = [fn(c) for c in cases]
    for case, out in zip(cases, outcomes):
        if out is not None:
            return PropertyResult(suite, name, False, len(cases), f"{case}: {out}")
    return PropertyResult(suite, name, True, len(cases))


# -- individual case checks (module level so they pickle) --------------------

def case_rank_identity(case):
    degs, s = case
    table = resolution.power_betti(degs, s)
    want = [resolution.rank_formula(len(degs), s, i) for i in range(len(degs))]
    if table.totals() != want:
        return f"column totals {table.totals()} != {want}"
    return None


def case_alternating_sum(case):
    degs, s = case
    val = resolution.power_betti(degs, s).alternating_rank_sum()
    return None if val == 0 else f"alternating rank sum = {val}"


def case_koszul(degs):
    a = resolution.power_betti(degs, 1)
    b = resolution.koszul_betti(degs)
    return None if a == b else f"{a.columns} != {b.columns}"


def case_chain(case):
    i, t = case
    got = chain_count(i, t, t)
    want = binomial(t - 2, i - 1)
    return None if got == want else f"enumerated {got} != C(t-2,i-1) = {want}"


def case_hhs(case):
    degs, s = case
    rep = hhs.check_hhs(degs, s)
    if not rep.holds:
        return f"{rep.verdict_line()}"
    if rep.mismatch:
        return f"formula shifts m={rep.m}, M={rep.M} vs table m={rep.table_m}, M={rep.table_M}"
    return None


def case_triple_hilbert(case):
    degs, s, D = case
    n = len(degs)
    a = hilbert.hf_power(degs, n, s, D).values
    b = hilbert.hf_from_betti(resolution.power_betti(degs, s), n, D).values
    c = oracles.monomial_hf_values(degs, n, s, D)
    if not a == b == c:
        t = next(k for k in range(D + 1) if not a[k] == b[k] == c[k])
        return f"degree {t}: corollary {a[t]}, from Betti {b[t]}, monomial {c[t]}"
    return None


def case_stabilization(case):
    degs, s = case
    n = len(degs)
    deg = hilbert.multiplicity(degs, s)
    ri = sum(degs[:-1]) + s * degs[-1] - n
    vals = hilbert.hf_power(degs, n, s, ri + 3).values
    if any(b < a for a, b in zip(vals, vals[1:])):
        return f"not non-decreasing: {vals}"
    if max(vals) != deg or vals[ri] != deg or (ri > 0 and vals[ri - 1] == deg):
        return f"expected first attainment of {deg} at {ri}: {vals}"
    return None


def case_grid_homogeneous(case):
    degs, m = case
    n = len(degs)
    cfg = oracles.grid_points([range(d) for d in degs], m)
    inv = oracles.points_invariants(cfg)
    rep = fatpoints.ci_invariants(fatpoints.FatCISpec(degs, n, mult=m))
    D = len(inv.values) - 1
    formula = hilbert.hf_power(degs, n, m, D).values
    if inv.values != formula:
        return f"oracle HF {inv.values} != formula {formula}"
    if (inv.alpha, inv.ri, inv.deg) != (rep.alpha.lo, rep.ri.lo, rep.deg):
        return f"oracle alpha/ri/deg {(inv.alpha, inv.ri, inv.deg)} != {(rep.alpha.lo, rep.ri.lo, rep.deg)}"
    return None


def case_cbp(degs):
    cfg = oracles.grid_points([range(d) for d in degs], 1)
    D = sum(degs) + 1
    want = [fatpoints.cb_minus_point_hf(degs, t) for t in range(D + 1)]
    for k in range(len(cfg.points)):
        got = oracles.points_hf_values(oracles.remove_point(cfg, k), D)
        if got != want:
            return f"removing point {k}: {got} != {want}"
    return None


def case_sandwich(mults):
    degs = (2, 2)
    spec = fatpoints.FatCISpec(degs, 2, mults=list(mults))
    cfg = oracles.grid_points([range(2), range(2)], list(mults))
    inv = oracles.points_invariants(cfg)
    bounds, rep = fatpoints.sandwich_bounds(spec)
    D = len(bounds) - 1
    vals = oracles.points_hf_values(cfg, D)
    for t, (v, (lo, hi)) in enumerate(zip(vals, bounds)):
        if not lo <= v <= hi:
            return f"degree {t}: {v} outside [{lo},{hi}]"
    if inv.alpha not in rep.alpha or inv.ri not in rep.ri or inv.deg != rep.deg:
        return f"oracle alpha={inv.alpha}, ri={inv.ri}, deg={inv.deg} vs {rep.to_json_dict()}"
    return None


def case_split_p2(case):
    d1, d2, m = case
    # grid: first coordinate takes d1 values; the line x_1 = d1-1 is the degree-1 piece
    cfg = oracles.grid_points([range(d1), range(d2)], m)
    idx = next(k for k, (c, _) in enumerate(cfg.points) if c[1] == d1 - 1)
    inv = oracles.points_invariants(oracles.remove_point(cfg, idx))
    spec = fatpoints.SplitSpec(fatpoints.FatCISpec((d1, d2), 2, mult=m), "first", True)
    interval = fatpoints.split_ri_bounds(spec)
    exact = fatpoints.p2_exact_ri(d1, d2, m)
    if inv.ri != exact or inv.ri not in interval:
        return f"oracle ri={inv.ri}, exact formula {exact}, interval {interval}"
    return None


# -- suites ------------------------------------------------------------------

def run_ranks(cfg: LatticeConfig) -> list[PropertyResult]:
    cases = cfg.cases()
    return [
        _sweep("ranks", "rank_identity", case_rank_identity, cases),
        _sweep("ranks", "alternating_rank_sum", case_alternating_sum, cases),
        _sweep("ranks", "koszul_degeneration", case_koszul, cfg.types(max_r=max(5, cfg.max_r), max_type=max(5, cfg.max_type))),
        _sweep("ranks", "chain_closed_form", case_chain, [(i, t) for i in range(1, 7) for t in range(i + 1, 9)]),
        _sweep("ranks", "hhs", case_hhs, cases),
    ]


def run_series(cfg: LatticeConfig) -> list[PropertyResult]:
    triple = [(t, s, cfg.window(t, s)) for t, s in cfg.cases()]
    return [
        _sweep("series", "triple_hilbert_agreement", case_triple_hilbert, triple),
        _sweep("series", "points_stabilization", case_stabilization, cfg.cases()),
    ]


def run_oracle(cfg: LatticeConfig) -> list[PropertyResult]:
    grid = [(t, m) for t in itertools.combinations_with_replacement(range(1, 4), 2) for m in range(1, 4)]
    grid.append(((2, 2, 2), 2))
    split = [(d1, d2, m) for d1 in range(2, 4) for d2 in range(d1, 4) for m in range(1, 4)]
    return [
        _sweep("oracle", "grid_homogeneous", case_grid_homogeneous, grid),
        _sweep("oracle", "cayley_bacharach", case_cbp, list(itertools.combinations_with_replacement(range(1, 5), 2))),
        _sweep("oracle", "sandwich", case_sandwich, list(itertools.product((1, 2), repeat=4))),
        _sweep("oracle", "split_ri_p2", case_split_p2, split),
    ]


RUNNERS = {"ranks": run_ranks, "series": run_series, "oracle": run_oracle}


def run(suite: str, cfg: LatticeConfig | None = None) -> list[PropertyResult]:
    cfg = cfg or LatticeConfig()
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        out.extend(RUNNERS[name](cfg))
    return out
