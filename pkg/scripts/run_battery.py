"""Cross-validate the piece classifier against the brute-force oracle on every boundary fixture."""

import argparse
import time

from gtorsion.catalog import BOUNDARY_FIXTURES
from gtorsion.oracle import SearchBounds, cross_validate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-g", type=int, default=6)
    ap.add_argument("--max-c", type=int, default=3)
    args = ap.parse_args()
    bounds = SearchBounds(args.max_g, args.max_c)
    print(f"{'piece':36s} {'verdict':8s} {'oracle':10s} {'tests':>8s} {'time':>7s}  witness")
    for name, d, _ in BOUNDARY_FIXTURES:
        t0 = time.perf_counter()
        r = cross_validate(d, bounds)
        w = r.verdict.witness
        shown = f"({w.g_text()}, {w.c_text()}) [{w.case.value}]" if w else r.verdict.reason
        print(f"{name:36s} {r.verdict.status.value:8s} {'found' if r.search.found else 'exhausted':10s} "
              f"{r.search.tests:8d} {time.perf_counter() - t0:6.1f}s  {shown}")


if __name__ == "__main__":
    main()
