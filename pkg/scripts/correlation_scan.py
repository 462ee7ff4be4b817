"""Two rhombus holes in a large hexagon: normalised ratio against separation.

Writes a CSV to stdout and the log-log fit to stderr.
"""

import argparse
import json
import sys
import time

from holeyhex.correlation import fit_exponent, fit_json, pair_scan, write_csv
from holeyhex.lattice import HexDims, Orient, TriTriple

RHOMBUS = [TriTriple(0, -2, 0, Orient.LEFT), TriTriple(2, 0, 0, Orient.RIGHT)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=30)
    ap.add_argument("--base", type=int, nargs=3, default=[1, 1, 1])
    ap.add_argument("--separations", type=int, nargs="+", default=[2, 4, 6, 8, 12, 16, 24])
    ap.add_argument("--holes", help="JSON list of holes (default: the centre horizontal rhombus)")
    args = ap.parse_args()

    hole = RHOMBUS if args.holes is None else [TriTriple.from_json(h) for h in json.loads(args.holes)]
    t0 = time.perf_counter()
    points = pair_scan(HexDims(*args.base), args.n, hole, args.separations)
    write_csv(points, sys.stdout)
    for p in points:
        print(f"d={p.separation:g} ratio={float(p.ratio):.6f}", file=sys.stderr)
    print(fit_json(fit_exponent(points)), file=sys.stderr)
    print(f"{time.perf_counter() - t0:.2f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
