"""Exact sprawl (mean normalized distance between sphere points) by radius.

    python scripts/sprawl_table.py --graph ll-z --rmax 7
"""
import argparse
import time

from survival.covering import sprawl_estimate
from survival.graphs import parse_graph


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graph", default="ll-z")
    ap.add_argument("--rmin", type=int, default=1)
    ap.add_argument("--rmax", type=int, default=6)
    ap.add_argument("--samples", type=int, default=0, help="sample pairs instead of enumerating")
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()

    spec = parse_graph(a.graph)
    for r in range(a.rmin, a.rmax + 1):
        t0 = time.perf_counter()
        if a.samples:
            res = sprawl_estimate(spec, r, samples=a.samples, seed=a.seed)
        else:
            res = sprawl_estimate(spec, r, exact=True)
        print(f"r={r:>2} mean={res.mean:.6f} stderr={res.stderr:.6f} pairs={res.pairs}"
              f"  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
