"""Run the exact identity suite at a given cap (same as `holeyhex check`)."""

import argparse
import sys
import time

from holeyhex.checks import run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=3)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    t0 = time.perf_counter()
    results = run_suite(args.cap, workers=args.workers, log=print)
    print(f"{time.perf_counter() - t0:.1f}s")
    sys.exit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
