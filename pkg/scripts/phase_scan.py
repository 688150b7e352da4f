"""Quasi-clique versus quasi-star construction values for satex(n, K_{1,s}: m, K_{a,b})."""

import argparse
import csv
import sys

from satex.counting import count_subgraphs
from satex.graph import Graph
from satex.patterns import PatternSpec
from satex.phase import phase_transition_scan


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, nargs="+", default=[20, 40, 60])
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--points", type=int, default=60)
    p.add_argument("--csv", help="write every grid point here")
    args = p.parse_args(argv)
    rows = []
    for n in args.n:
        top = count_subgraphs(PatternSpec.star(args.s), Graph.complete(n))
        grid = sorted({round(top * i / args.points) for i in range(args.points + 1)})
        scan = phase_transition_scan(n, args.s, args.a, args.b, grid)
        frac = f"{scan.crossing_fraction:.3f}" if scan.crossing_fraction is not None else "none"
        zeta = f"{scan.zeta_hat:.4g}" if scan.zeta_hat is not None else "none"
        print(f"n={n}: crossing fraction {frac}, zeta_hat {zeta}; " + "; ".join(scan.notes))
        rows += [{"n": n, **pt.to_row()} for pt in scan.points]
    if args.csv:
        out = open(args.csv, "w", newline="") if args.csv != "-" else sys.stdout
        w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\r\n")
        w.writeheader()
        w.writerows(rows)


if __name__ == "__main__":
    main()
