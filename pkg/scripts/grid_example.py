"""{CI(3,4); 3} on a 3x4 grid minus one triple point, for every choice of point.

Prints the Hilbert function of each Y = Z minus (P,3) and the regularity
index, next to the stored sequence for the irreducible-forms construction.

    python scripts/grid_example.py [--max-degree 14]
"""
import argparse

from ci_powers.fatpoints import REFERENCE_HF, p2_exact_ri
from ci_powers.oracles import grid_points, points_hf_values, remove_point


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=14)
    args = ap.parse_args()

    Z = grid_points([range(3), range(4)], 3)
    print(f"deg Z = {Z.degree}, deg Y = {Z.degree - 6}, predicted ri(Y) = {p2_exact_ri(3, 4, 3)}")
    rows = {}
    for k, (coords, _) in enumerate(Z.points):
        vals = points_hf_values(remove_point(Z, k), args.max_degree)
        rows.setdefault(tuple(vals), []).append(tuple(str(c) for c in coords))
    for vals, pts in rows.items():
        print(f"{len(pts):2d} removals -> {' '.join(map(str, vals))}   ri = {vals.index(66)}")
    print("irreducible forms (reference only):", " ".join(map(str, REFERENCE_HF["irreducible_forms"])))


if __name__ == "__main__":
    main()
