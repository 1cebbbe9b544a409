"""Exact minimum sphere-cover sizes k(r) over a grid of radii and separations.

Finite radii give evidence about the survival number, never a proof.

    python scripts/probe_table.py --graph tree:3 --radii 3,5,7 --seps 1,2,3,4,5
"""
import argparse

from survival.covering import COVER, CoverInstance, min_cover
from survival.graphs import parse_graph


def ints(text):
    return [int(x) for x in text.split(",")]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graph", default="z:2:std")
    ap.add_argument("--radii", type=ints, default=[4, 6, 8, 10])
    ap.add_argument("--seps", type=ints, default=[1])
    ap.add_argument("--max-balls", type=int, default=16)
    ap.add_argument("--node-budget", type=int, default=2_000_000)
    a = ap.parse_args()

    spec = parse_graph(a.graph)
    print(f"{a.graph}  (rows: sep, columns: r)")
    print("sep " + " ".join(f"{r:>6}" for r in a.radii))
    for sep in a.seps:
        row = []
        for r in a.radii:
            res = min_cover(CoverInstance(spec, r, sep, max_balls=a.max_balls), a.node_budget)
            row.append(str(res.min_size) if res.status == COVER else res.status[:6])
        print(f"{sep:>3} " + " ".join(f"{x:>6}" for x in row))


if __name__ == "__main__":
    main()
