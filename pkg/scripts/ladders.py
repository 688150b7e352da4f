"""Print the asymptotic ladders: main terms against exact counts."""

import argparse
from fractions import Fraction

from satex.ladders import PATHPATH_CASES, corollary_ladder, pathcycle_ladder, pathpath_ladder, table_ladder


def main(argv=None):
    argparse.ArgumentParser(description=__doc__).parse_args(argv)
    for k, q in PATHPATH_CASES:
        print(f"pathpath k={k} q={q}:", ", ".join(f"n={n} {r:.5f}" for n, r in pathpath_ladder(k, q)))
    for n, b, e in pathcycle_ladder():
        print(f"pathcycle n={n}: bound {b:.6g} exact C4 {e} ratio {b / e:.4f}")
    for n, b, e in corollary_ladder():
        print(f"corollary n={n}: bound {b:.6g} exact C8 {e} ratio {b / e:.4f}")
    for fam in ("clique", "quasi_star", "bipartite"):
        for lam in (Fraction(1, 2), Fraction(3, 4)):
            for k in (3, 4):
                errs = ", ".join(f"{e:.4f}" for _, e in table_ladder(fam, lam, k))
                print(f"table {fam} lambda={lam} P{k}: {errs}")


if __name__ == "__main__":
    main()
