"""Run the oracle certification over a (d, k) grid and write per-cell results as CSV.

    python scripts/certify_grid.py --k-max 6 --d-max 200 --out certify.csv
"""

import argparse
import csv
import sys
import time

from quadgenus.oracle import verify


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k-max", type=int, default=6)
    parser.add_argument("--d-max", type=int, default=200)
    parser.add_argument("--out", default="-")
    args = parser.parse_args()

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(out)
    writer.writerow(["d", "k", "checks", "passed", "failing"])
    start = time.perf_counter()
    bad = 0
    for k in range(1, args.k_max + 1):
        for d in range(1, args.d_max + 1):
            report = verify(d, k)
            failing = ";".join(c.name for c in report.failures())
            bad += not report.passed
            writer.writerow([d, k, len(report.checks), int(report.passed), failing])
    if out is not sys.stdout:
        out.close()
    print(f"{args.k_max * args.d_max} cells, {bad} failing, {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
