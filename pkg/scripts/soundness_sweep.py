"""Every certified bound against the true count on every graph up to n vertices."""

import argparse
import time

from satex.soundness import sweep


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=7)
    args = p.parse_args(argv)
    t0 = time.perf_counter()
    checks, violations = sweep(args.max_n)
    for row in violations:
        print("VIOLATION", *row)
    print(f"{checks} checks, {len(violations)} violations, {time.perf_counter() - t0:.1f} s")
    return 1 if violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
