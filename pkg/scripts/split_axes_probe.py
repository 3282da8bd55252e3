"""Remove one fat point from grid schemes and compare with the split formulas.

The ri bound is only proved for a split on the smallest degree and the alpha
result for a split on the largest. Grids split on every axis, so this probes
what the oracle says for each axis without asserting anything.

    python scripts/split_axes_probe.py --max-d 3 --max-m 3 [--p3]
"""
import argparse
import itertools

from ci_powers.fatpoints import FatCISpec, SplitSpec, split_alpha, split_ri_bounds
from ci_powers.oracles import grid_points, points_invariants, remove_point


def probe(degs, m):
    n = len(degs)
    Z = grid_points([range(d) for d in degs], m)
    ri_iv = alpha_iv = None
    if degs[0] >= 2:
        ri_iv = split_ri_bounds(SplitSpec(FatCISpec(degs, n, mult=m), "first", True))
    if degs[-1] >= 2:
        alpha_iv = split_alpha(SplitSpec(FatCISpec(degs, n, mult=m), "last", True))
    seen = set()
    for k in range(len(Z.points)):
        inv = points_invariants(remove_point(Z, k))
        seen.add((inv.alpha, inv.ri))
    print(f"CI{degs} m={m}: (alpha, ri) over all removals {sorted(seen)};"
          f" ri interval {ri_iv}, alpha interval {alpha_iv}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-d", type=int, default=3)
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--p3", action="store_true", help="also run CI(2,2,2) and CI(2,2,3)")
    args = ap.parse_args()
    for degs in itertools.combinations_with_replacement(range(1, args.max_d + 1), 2):
        for m in range(1, args.max_m + 1):
            probe(degs, m)
    if args.p3:
        for degs in ((2, 2, 2), (2, 2, 3)):
            probe(degs, 2)


if __name__ == "__main__":
    main()
