"""Tabulate the two global signs per hexagon.

eps_det relates the relabelled minor det(A minus {b, w}) to det(P);
eps_inv relates the closed-form K to the true inverse of A.
"""

import argparse

from holeyhex.checks import observed_signs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=3)
    args = ap.parse_args()
    print("a,b,c,eps_det,eps_inv,all_odd")
    for (a, b, c), (eps_det, eps_inv) in sorted(observed_signs(args.cap).items()):
        print(f"{a},{b},{c},{eps_det},{eps_inv},{int(a % 2 and b % 2 and c % 2)}")


if __name__ == "__main__":
    main()
