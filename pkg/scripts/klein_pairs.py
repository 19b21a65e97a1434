"""Tabulate generalized torsion pairs in the Klein bottle group and their primitivity."""

import argparse
from collections import Counter

from gtorsion.klein import k_enumerate_gt_pairs, k_is_primitive_pair


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=3, help="bound on every exponent")
    args = ap.parse_args()
    pairs = sorted(k_enumerate_gt_pairs(args.max), key=lambda p: (p.g, p.c))
    by_g = Counter(p.g for p in pairs)
    primitive = sum(k_is_primitive_pair(p) for p in pairs)
    print(f"pairs in the box |exponent| <= {args.max}: {len(pairs)} ({primitive} primitive)")
    for g, n in sorted(by_g.items()):
        print(f"  g = {g}: {n} conjugators")


if __name__ == "__main__":
    main()
