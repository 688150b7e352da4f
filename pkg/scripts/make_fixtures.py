"""Regenerate tests/fixtures/satex_fixtures.csv from exhaustive search."""

import argparse
import csv
from pathlib import Path

from satex.patterns import parse_pattern
from satex.search import exact_satex

CASES = [
    (4, "K2", 5, "K3"),
    (4, "K2", 4, "K3"),
    (4, "K2", 6, "K3"),
    (5, "K2", 7, "K3"),
    (5, "K2", 8, "K3"),
    (5, "K2", 10, "K3"),
    (6, "K2", 9, "K3"),
    (6, "K2", 10, "K3"),
    (6, "K2", 12, "K3"),
    (6, "K2", 13, "K3"),
    (6, "K2", 15, "K4"),
    (6, "K2", 13, "K4"),
    (6, "P3", 20, "K3"),
    (6, "K2", 7, "C4"),
    (6, "K2", 8, "C4"),
    (6, "K3", 4, "K4"),
    (6, "K3", 10, "K4"),
    (7, "K2", 12, "K3"),
    (7, "K2", 13, "K3"),
    (7, "K2", 16, "K3"),
    (7, "K2", 9, "C4"),
    (7, "K2", 10, "C4"),
    (7, "P3", 30, "K3"),
    (7, "K3", 12, "K4"),
    (7, "S3", 20, "K2,2"),
    (7, "K2", 10, "P4"),
    (5, "K2", 0, "K3"),
    (5, "C4", 3, "K3"),
]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "tests/fixtures/satex_fixtures.csv"))
    args = p.parse_args(argv)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "F", "m", "G", "value", "witness_graph6"])
        for n, f, m, g in CASES:
            res = exact_satex(n, parse_pattern(f), m, parse_pattern(g))
            w.writerow([n, f, m, g, res.optimum, res.witness.to_graph6()])
            print(n, f, m, g, res.optimum)


if __name__ == "__main__":
    main()
