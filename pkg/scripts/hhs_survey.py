"""Herzog-Huneke-Srinivasan bounds over a lattice of types and powers.

Prints one line per (type, s) with lower <= e <= upper and the ratio of
the upper bound to e, then the tightest and loosest cases.

    python scripts/hhs_survey.py --max-r 3 --max-d 4 --max-s 4
"""
import argparse
import itertools

from ci_powers.hhs import check_hhs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-r", type=int, default=3)
    ap.add_argument("--max-d", type=int, default=4)
    ap.add_argument("--max-s", type=int, default=4)
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args()

    reports = []
    for r in range(1, args.max_r + 1):
        for degs in itertools.combinations_with_replacement(range(1, args.max_d + 1), r):
            for s in range(1, args.max_s + 1):
                rep = check_hhs(degs, s)
                reports.append(rep)
                if not args.quiet:
                    print(f"{str(degs):16s} s={s}  {rep.verdict_line():40s} upper/e = {float(rep.upper / rep.e):.3f}")
    bad = [rep for rep in reports if not rep.holds or rep.mismatch]
    print(f"{len(reports)} cases, {len(bad)} failures")
    ratio = lambda rep: rep.upper / rep.e
    loose = max(reports, key=ratio)
    print(f"loosest upper bound: type {loose.type}, s={loose.s}, upper/e = {float(ratio(loose)):.3f}")


if __name__ == "__main__":
    main()
