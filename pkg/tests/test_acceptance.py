"""Exit criteria. Every comparison is exact; each criterion also has a wall-clock budget.

One PASS/FAIL line per criterion is printed in the pytest terminal summary.
"""
import functools
import itertools
import time

from ci_powers.combinatorics import binomial, iter_chains
from ci_powers.fatpoints import FatCISpec, cb_minus_point_hf, p2_exact_ri, sandwich_bounds
from ci_powers.hhs import check_hhs
from ci_powers.hilbert import hf_from_betti, hf_power, multiplicity
from ci_powers.oracles import grid_points, monomial_hf_values, points_hf_values, points_invariants, remove_point
from ci_powers.resolution import extreme_shifts, koszul_betti, power_betti, rank_formula

RESULTS = []  # (number, title, status, seconds, detail) read by conftest


def criterion(number, title, budget):
    def wrap(fn):
        @functools.wraps(fn)
        def test():
            start = time.perf_counter()
            try:
                fn()
            except AssertionError as exc:
                RESULTS.append((number, title, "FAIL", time.perf_counter() - start, str(exc).splitlines()[0][:160]))
                raise
            elapsed = time.perf_counter() - start
            ok = elapsed < budget
            RESULTS.append((number, title, "PASS" if ok else "FAIL", elapsed,
                            "" if ok else f"over budget: {elapsed:.1f}s >= {budget}s"))
            assert ok, f"criterion {number} took {elapsed:.1f}s, budget {budget}s"
        return test
    return wrap


def ci_types(max_r, max_d):
    for r in range(1, max_r + 1):
        yield from itertools.combinations_with_replacement(range(1, max_d + 1), r)


LATTICE = [(t, s) for t in ci_types(4, 4) for s in range(1, 5)]


@criterion(1, "rank identity, r<=4, d_i<=4, s<=4", budget=10)
def test_01_rank_identity():
    for degs, s in LATTICE:
        r = len(degs)
        want = [binomial(r + s - 1, s + i) * binomial(s - 1 + i, i) for i in range(r)]
        got = power_betti(degs, s).totals()
        assert got == want, f"{degs}, s={s}: {got} != {want}"
        assert want == [rank_formula(r, s, i) for i in range(r)]


@criterion(2, "triple Hilbert agreement, n=r, degrees 0..s*sum(d)+5", budget=60)
def test_02_triple_hilbert():
    for degs, s in LATTICE:
        n = len(degs)
        D = s * sum(degs) + 5
        a = hf_power(degs, n, s, D).values
        b = hf_from_betti(power_betti(degs, s), n, D).values
        c = monomial_hf_values(degs, n, s, D)
        assert a == b == c, f"{degs}, s={s}"


@criterion(3, "power_betti(., 1) == koszul_betti, r<=5, d_i<=5", budget=5)
def test_03_koszul_degeneration():
    for degs in ci_types(5, 5):
        assert power_betti(degs, 1).columns == koszul_betti(degs).columns, degs


@criterion(4, "HHS bounds hold; formula shifts equal table extremes", budget=10)
def test_04_hhs():
    for degs, s in LATTICE:
        rep = check_hhs(degs, s)
        assert rep.holds, f"{degs}, s={s}: {rep.verdict_line()}"
        d = sorted(degs)
        r = len(d)
        m = [s * d[0] + sum(d[1:i]) for i in range(1, r + 1)]
        M = [sum(d[r - i:r - 1]) + s * d[-1] for i in range(1, r + 1)]
        ext = extreme_shifts(power_betti(degs, s))
        # m_i, M_i at step i of R/I^s sit in column i-1 of the ideal's table
        assert [lo for lo, _ in ext] == m == rep.m, (degs, s)
        assert [hi for _, hi in ext] == M == rep.M, (degs, s)


GRID_EXAMPLE = [1, 3, 6, 10, 15, 21, 28, 36, 45, 54, 62, 65, 66]


@criterion(5, "3x4 grid, multiplicity 3, minus a triple point", budget=60)
def test_05_grid_example():
    Z = grid_points([range(3), range(4)], 3)
    for k in range(len(Z.points)):
        Y = remove_point(Z, k)
        vals = points_hf_values(Y, 15)
        assert vals[:13] == GRID_EXAMPLE, f"removed point {k}: {vals}"
        assert vals[12:] == [66] * 4
        assert vals.index(66) == 12 == p2_exact_ri(3, 4, 3)


@criterion(6, "homogeneous fat points on grids vs alpha/ri/deg formulas", budget=180)
def test_06_homogeneous_fat_points():
    for (d1, d2), m in itertools.product(itertools.combinations_with_replacement(range(1, 4), 2), range(1, 4)):
        inv = points_invariants(grid_points([range(d1), range(d2)], m))
        assert inv.alpha == m * d1, (d1, d2, m, inv)
        assert inv.ri == d1 + m * d2 - 2, (d1, d2, m, inv)
        assert inv.deg == multiplicity((d1, d2), m)
    inv = points_invariants(grid_points([range(2)] * 3, 2))
    assert (inv.alpha, inv.ri, inv.deg) == (4, 2 + 2 + 4 - 3, 8 * binomial(4, 3)) == (4, 5, 32)


@criterion(7, "Cayley-Bacharach: every single-point removal from reduced grids", budget=60)
def test_07_cbp():
    for d1, d2 in itertools.combinations_with_replacement(range(1, 5), 2):
        X = grid_points([range(d1), range(d2)])
        D = d1 + d2 + 2
        hx = points_hf_values(X, D)
        want = [min(h, len(X.points) - 1) for h in hx]
        assert want == [cb_minus_point_hf((d1, d2), t) for t in range(D + 1)]
        for k in range(len(X.points)):
            assert points_hf_values(remove_point(X, k), D) == want, (d1, d2, k)


@criterion(8, "sandwich bounds for CI(2,2) with multiplicities in {1,2}", budget=60)
def test_08_sandwich():
    for mults in itertools.product((1, 2), repeat=4):
        bounds, rep = sandwich_bounds(FatCISpec((2, 2), 2, mults=list(mults)))
        cfg = grid_points([range(2), range(2)], list(mults))
        vals = points_hf_values(cfg, len(bounds) - 1)
        for t, (v, (lo, hi)) in enumerate(zip(vals, bounds)):
            assert lo <= v <= hi, (mults, t, v, lo, hi)
        inv = points_invariants(cfg)
        assert inv.alpha in rep.alpha and inv.ri in rep.ri, (mults, inv, rep)
        assert inv.deg == rep.deg


@criterion(9, "chain counts by enumeration equal C(t-2, i-1)", budget=1)
def test_09_chain_count():
    for i in range(1, 7):
        for t in range(i + 1, 9):
            assert sum(1 for _ in iter_chains(i, t, t)) == binomial(t - 2, i - 1), (i, t)


@criterion(10, "alternating rank sum vanishes for every computed table", budget=1)
def test_10_alternating_sum():
    tables = [power_betti(degs, s) for degs, s in LATTICE]
    tables += [koszul_betti(degs) for degs in ci_types(5, 5)]
    for tab in tables:
        assert tab.alternating_rank_sum() == 0, tab.columns
