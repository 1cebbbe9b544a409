"""Smallest radius from which the explicit center lists cover the sphere.

Hexagonal lattice (z:2:diag) three-center list for d = 1..D, and the
lamplighter-line eight-center list (corrected and literal eighth center).

    python scripts/threshold_sweep.py --diag-d 3 --llz-d 2 --llz-rmax 14
"""
import argparse
import time

from survival.covering import CoverInstance, cover_check, ll_z_eight_cover
from survival.graphs import parse_graph


def diag_threshold(d, r_max):
    spec = parse_graph("z:2:diag")
    centers = [(d, -d), (d, 2 * d), (-2 * d, -d)]
    ok = {r: cover_check(CoverInstance(spec, r, sep=d), centers).ok for r in range(1, r_max + 1)}
    r0 = next((r for r in ok if all(ok[s] for s in range(r, r_max + 1))), None)
    return r0, ok


def llz_row(d, r_max, corrected):
    out = {}
    for r in range(1, r_max + 1):
        res = ll_z_eight_cover(d, r, corrected=corrected)
        out[r] = "ok" if res.ok else res.reason
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--diag-d", type=int, default=3)
    ap.add_argument("--diag-rmax", type=int, default=25)
    ap.add_argument("--llz-d", type=int, default=1)
    ap.add_argument("--llz-rmax", type=int, default=12)
    a = ap.parse_args()

    for d in range(1, a.diag_d + 1):
        r0, _ = diag_threshold(d, a.diag_rmax)
        print(f"z:2:diag d={d}: covers for all r in [{r0}, {a.diag_rmax}]")
    for d in range(1, a.llz_d + 1):
        for corrected in (True, False):
            t0 = time.perf_counter()
            row = llz_row(d, a.llz_rmax, corrected)
            tag = "corrected" if corrected else "literal  "
            cells = " ".join(f"{r}:{v}" for r, v in row.items())
            print(f"ll-z d={d} {tag} {cells}  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
