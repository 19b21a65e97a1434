"""Classify seeded random manifold descriptors and summarise the verdicts."""

import argparse
import random
from collections import Counter

from gtorsion.manifold import admits_gt_order2, is_r_group, random_descriptor


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    table = Counter()
    for _ in range(args.n):
        m = random_descriptor(rng)
        table[admits_gt_order2(m).status.value, is_r_group(m).value] += 1
    print("gt-order-2  R-group  count")
    for (gt, r), n in sorted(table.items()):
        print(f"{gt:10s}  {r:7s}  {n}")


if __name__ == "__main__":
    main()
