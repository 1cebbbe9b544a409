"""Command-line front end: ``survival {voronoi,compete,cover,witness}``.

Output is JSON lines by default (every record carries ``"v": 1``), or
``--out text`` / ``--out grid``. Exit codes: 0 success, 1 check failed,
2 usage, 3 capacity, 4 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import covering as cov
from .graphs import EncodingError, Family, encode, format_vertex, origin, parse_graph, parse_vertex
from .metric import DEFAULT_CAP, CapacityError
from .voronoi import (SiteSet, cell_degree_profile, check_growth_equivalence,
                      competition_run, growth_process, voronoi_cells)

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_CAPACITY, EXIT_BUDGET = 0, 1, 2, 3, 4
SCHEMA = 1
CELL_CHARS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


class UsageError(Exception):
    pass


def _common(p):
    p.add_argument("--graph", required=True, help="graph spec, e.g. z:2:std, ll-z, tree:3")
    p.add_argument("--out", choices=["json", "text", "grid"], default="json")
    p.add_argument("--threads", type=int, default=0,
                   help="worker threads (0 = auto); results never depend on it")
    p.add_argument("--cap-vertices", type=int, default=DEFAULT_CAP)
    p.add_argument("--cap-nodes", type=int, default=cov.DEFAULT_NODE_BUDGET)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="survival", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("voronoi", help="Voronoi cells on a ball window")
    _common(p)
    p.add_argument("--site", action="append", required=True)
    p.add_argument("-R", type=int, required=True, dest="R")
    p.add_argument("--mode", choices=["bfs", "growth"], default="bfs")
    p.add_argument("--check-equiv", action="store_true")
    p.add_argument("--profile", action="store_true")

    p = sub.add_parser("compete", help="two-species competition process")
    _common(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("-m", type=int, default=1)
    p.add_argument("-R", type=int, required=True, dest="R")
    p.add_argument("--max-steps", type=int, default=10_000)
    p.add_argument("--adapted", action="store_true", help="m=1 growth with shared ties")

    p = sub.add_parser("cover", help="sphere covers")
    _common(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--verify", action="store_true")
    mode.add_argument("--search", action="store_true")
    mode.add_argument("--probe", action="store_true")
    mode.add_argument("--eight", action="store_true")
    p.add_argument("-r", required=True, help="radius, or lo:hi for --probe")
    p.add_argument("-d", "--sep", type=int, default=1, dest="sep",
                   help="centers pairwise and from the origin at distance >= d")
    p.add_argument("--budget", type=int, default=None, help="ball radius (default r-1)")
    p.add_argument("--max-balls", type=int, default=16)
    p.add_argument("--center", action="append", default=[])
    p.add_argument("--timing", action="store_true", help="add wall_ms (breaks byte-determinism)")

    p = sub.add_parser("witness", help="far-apart sphere vertices and sprawl")
    _common(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--antipodal", action="store_true")
    mode.add_argument("--spread", action="store_true")
    mode.add_argument("--sprawl", action="store_true")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-n", type=int, default=3)
    p.add_argument("--min-pair", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", action="store_true")
    return ap


# ----------------------------------------------------------------- output

class Writer:
    def __init__(self, mode, stream):
        self.mode = mode
        self.stream = stream

    def record(self, rec: dict, text: str | None = None):
        if self.mode == "json":
            self.stream.write(json.dumps(rec, separators=(",", ":")) + "\n")
        elif self.mode == "text":
            if text is None:
                body = " ".join(f"{k}={_txt(v)}" for k, v in rec.items() if k not in ("v", "type"))
                text = f"{rec['type']}: {body}"
            self.stream.write(text + "\n")

    def raw(self, text: str):
        self.stream.write(text)


def _txt(v):
    if isinstance(v, float):
        return f"{v:.6f}"
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _hex(spec, v):
    return encode(spec, v).hex()


# --------------------------------------------------------------- commands

def cmd_voronoi(a, spec, w: Writer) -> int:
    sites = SiteSet(spec, [parse_vertex(spec, s) for s in a.site])
    cap = a.cap_vertices
    status = EXIT_OK
    if a.check_equiv:
        same, diff = check_growth_equivalence(sites, a.R, cap)
        w.record({"v": SCHEMA, "type": "equivalence", "equal": same,
                  "first_diff": None if diff is None else _hex(spec, diff)})
        if not same:
            status = EXIT_CHECK
    engine = growth_process if a.mode == "growth" else voronoi_cells
    assign = engine(sites, a.R, cap)
    if w.mode == "grid":
        grid = render_grid(assign)
        if grid is None:
            print(f"warning: no grid renderer for {spec}; writing JSON", file=sys.stderr)
            w.mode = "json"
        else:
            w.raw(grid)
    if w.mode != "grid":
        for rec, u in zip(assign.records(), assign.ordered()):
            w.record(rec, f"{format_vertex(spec, u)} d={rec['d']} cells={rec['cells']}")
    summary = {"v": SCHEMA, "type": "summary", "graph": str(spec), "R": a.R, "engine": a.mode,
               "sites": [_hex(spec, s) for s in sites.sites],
               "cell_sizes": assign.cell_sizes(), "tie_count": len(assign.ties()),
               "boundary_cells": assign.boundary_cells(), "cap_vertices": cap}
    if a.profile:
        summary["profiles"] = []
        for i in range(len(sites)):
            prof = cell_degree_profile(assign, i)
            summary["profiles"].append({
                "cell": i, "histogram": {str(k): v for k, v in prof.histogram.items()},
                "degree_one": [format_vertex(spec, u) for u in prof.degree_one]})
    if w.mode == "grid":
        print(json.dumps(summary, separators=(",", ":")), file=sys.stderr)
    else:
        w.record(summary)
    return status


def render_grid(assign) -> str | None:
    """Planar picture of the assignment: one letter per cell, ``*`` for ties,
    ``.`` outside the window."""
    spec, R = assign.spec, assign.radius
    if spec.family is Family.LATTICE and spec.dim == 2:
        rows = [[(x, y) for x in range(-R, R + 1)] for y in range(R, -R - 1, -1)]
    elif spec.family is Family.LADDER_DIAG:
        rows = [[(n, s) for n in range(-R, R + 1)] for s in (1, 0)]
    else:
        return None
    lines = []
    for row in rows:
        chars = []
        for v in row:
            idx = assign.nearest.get(v)
            if idx is None:
                chars.append(".")
            elif len(idx) > 1:
                chars.append("*")
            else:
                chars.append(CELL_CHARS[idx[0]] if idx[0] < len(CELL_CHARS) else "?")
        lines.append("".join(chars))
    return "\n".join(lines) + "\n"


def cmd_compete(a, spec, w: Writer) -> int:
    x0, y0 = parse_vertex(spec, a.x), parse_vertex(spec, a.y)
    st = competition_run(spec, x0, y0, a.m, a.R, a.max_steps, a.adapted, a.cap_vertices)
    for step, nx, ny in st.history:
        w.record({"v": SCHEMA, "type": "step", "step": step, "x": nx, "y": ny})
    w.record({"v": SCHEMA, "type": "competition", "graph": str(spec), "m": a.m, "R": a.R,
              "adapted": a.adapted, "status": st.status, "steps": st.step,
              "x_size": len(st.X), "y_size": len(st.Y), "cap_vertices": a.cap_vertices})
    return EXIT_OK


def _radii(text: str, allow_range: bool) -> list[int]:
    if ":" in text:
        if not allow_range:
            raise UsageError("a radius range is only accepted with --probe")
        lo, hi = (int(x) for x in text.split(":"))
        if lo > hi:
            raise UsageError("empty radius range")
        return list(range(lo, hi + 1))
    return [int(text)]


def _check_record(spec, res: cov.CheckResult, extra: dict) -> dict:
    rec = {"v": SCHEMA, "type": "check", **extra,
           "status": cov.COVER if res.ok else "CheckFailed", "ok": res.ok}
    if not res.ok:
        rec["reason"] = res.reason
        rec["witness"] = [_hex(spec, u) for u in res.witness]
        rec["witness_lit"] = [format_vertex(spec, u) for u in res.witness]
    rec["centers"] = [_hex(spec, c) for c in res.centers]
    return rec


def cmd_cover(a, spec, w: Writer) -> int:
    radii = _radii(a.r, a.probe)
    cap = a.cap_vertices
    if a.eight:
        if spec.family is not Family.LAMPLIGHTER_LINE:
            raise UsageError("--eight applies to --graph ll-z only")
        res = cov.ll_z_eight_cover(a.sep, radii[0], cap=cap)
        w.record(_check_record(spec, res, {"graph": str(spec), "r": radii[0], "sep": a.sep,
                                           "budget": radii[0] - 1}))
        return EXIT_OK if res.ok else EXIT_CHECK
    if a.verify:
        if not a.center:
            raise UsageError("--verify needs at least one --center")
        inst = cov.CoverInstance(spec, radii[0], a.sep, a.budget, a.max_balls)
        res = cov.cover_check(inst, [parse_vertex(spec, c) for c in a.center], cap)
        w.record(_check_record(spec, res, {"graph": str(spec), "r": inst.r, "sep": inst.sep,
                                           "budget": inst.radius_budget}))
        return EXIT_OK if res.ok else EXIT_CHECK
    results = []
    for r in radii:
        inst = cov.CoverInstance(spec, r, a.sep, a.budget, a.max_balls)
        res = cov.min_cover(inst, a.cap_nodes, cap=cap)
        results.append(res)
        rec = res.record(a.timing)
        rec["cap_nodes"] = a.cap_nodes
        w.record(rec)
    if a.probe:
        sizes = [res.min_size for res in results if res.status == cov.COVER]
        complete = len(sizes) == len(results)
        w.record({"v": SCHEMA, "type": "probe_summary", "label": "EVIDENCE",
                  "graph": str(spec), "sep": a.sep, "radii": radii,
                  "lower": min(sizes) if complete else None,
                  "upper": max(sizes) if complete else None})
    if any(res.status == cov.BUDGET_EXCEEDED for res in results):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_witness(a, spec, w: Writer) -> int:
    cap = a.cap_vertices
    if a.antipodal:
        found = cov.antipodal_witness(spec, a.r, cap)
        rec = {"v": SCHEMA, "type": "antipodal", "graph": str(spec), "r": a.r,
               "found": found is not None}
        if found:
            u, x, d = found
            rec.update(pair=[_hex(spec, u), _hex(spec, x)],
                       pair_lit=[format_vertex(spec, u), format_vertex(spec, x)], distance=d)
        w.record(rec)
        return EXIT_OK if found else EXIT_CHECK
    if a.spread:
        min_pair = 2 * a.r if a.min_pair is None else a.min_pair
        found = cov.spread_witness(spec, a.r, a.n, min_pair, cap=cap)
        rec = {"v": SCHEMA, "type": "spread", "graph": str(spec), "r": a.r, "n": a.n,
               "min_pair": min_pair, "found": found is not None}
        if found:
            verts, dists = found
            rec.update(vertices=[_hex(spec, u) for u in verts],
                       vertices_lit=[format_vertex(spec, u) for u in verts], distances=dists)
        w.record(rec)
        return EXIT_OK if found else EXIT_CHECK
    if not a.exact and not a.samples:
        raise UsageError("--sprawl needs --exact or --samples N")
    res = cov.sprawl_estimate(spec, a.r, a.samples, a.seed, a.exact, cap)
    w.record({"v": SCHEMA, "type": "sprawl", "graph": str(spec), "r": a.r, "exact": res.exact,
              "mean": res.mean, "stderr": res.stderr, "pairs": res.pairs, "seed": a.seed},
             f"sprawl: r={a.r} mean={res.mean:.6f} stderr={res.stderr:.6f} pairs={res.pairs}")
    return EXIT_OK


COMMANDS = {"voronoi": cmd_voronoi, "compete": cmd_compete, "cover": cmd_cover,
            "witness": cmd_witness}


def main(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if a.threads < 0:
        print("error: --threads must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        spec = parse_graph(a.graph)
        if a.out == "grid" and a.command != "voronoi":
            raise UsageError("--out grid is only available for voronoi")
        return COMMANDS[a.command](a, spec, Writer(a.out, stdout))
    except (UsageError, EncodingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
