"""Exact M(H minus holes)/M(H) for H_{n a0, n b0, n c0}, n = 1..n_max."""

import argparse
import json
import sys

from holeyhex.correlation import correlation_sequence, write_csv
from holeyhex.lattice import HexDims, TriTriple


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--base", type=int, nargs=3, default=[1, 1, 1])
    ap.add_argument("--holes", default='[[0,-2,0,"L"],[2,0,0,"R"]]')
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()
    holes = [TriTriple.from_json(h) for h in json.loads(args.holes)]
    points = correlation_sequence(HexDims(*args.base), holes, args.n_max)
    write_csv(points, sys.stdout)
    for p in points:
        print(f"n={p.n} ratio={float(p.ratio):.8f}", file=sys.stderr)


if __name__ == "__main__":
    main()
