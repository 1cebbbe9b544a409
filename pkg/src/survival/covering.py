"""Sphere covers by smaller balls: verification, exact minimum search,
survival-number probes, far-apart sphere witnesses and sprawl.

Separation convention: ``sep = d`` asks that centers be pairwise at distance
>= d and at distance >= d from the origin. A strict "> d" is ``sep = d + 1``.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from .graphs import (Family, GraphSpec, encode, line_pairs, neighbor_fn, origin,
                     relative)
from .metric import DEFAULT_CAP, Beyond, ball, distance, multi_ball

COVER = "Cover"
NO_COVER = "NoCover"
BUDGET_EXCEEDED = "BudgetExceeded"

DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class CoverInstance:
    spec: GraphSpec
    r: int
    sep: int = 1
    radius_budget: int | None = None
    max_balls: int = 16

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("sphere radius must be >= 1")
        if self.radius_budget is None:
            object.__setattr__(self, "radius_budget", self.r - 1)
        if not 0 <= self.radius_budget < self.r:
            raise ValueError("radius budget must satisfy 0 <= budget < r")
        if self.sep < 0:
            raise ValueError("sep must be >= 0")


@dataclass
class CheckResult:
    ok: bool
    reason: str | None = None  # "uncovered" | "separation" | "origin" | "count" | "duplicate"
    witness: tuple = ()
    centers: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass
class CoverResult:
    instance: CoverInstance
    status: str
    centers: tuple = ()
    min_size: int | None = None
    candidate_count: int = 0
    nodes_explored: int = 0
    lower_bound: int = 0
    wall_ms: float = 0.0

    def record(self, timing: bool = False) -> dict:
        inst = self.instance
        out = {"v": 1, "type": "cover", "graph": str(inst.spec), "r": inst.r,
               "sep": inst.sep, "budget": inst.radius_budget, "status": self.status}
        if self.min_size is not None:
            out["min_size"] = self.min_size
        if self.status == COVER:
            out["centers"] = [encode(inst.spec, c).hex() for c in self.centers]
        out["nodes_explored"] = self.nodes_explored
        out["candidates"] = self.candidate_count
        if timing:
            out["wall_ms"] = round(self.wall_ms, 3)
        return out


def _enc_sorted(spec, vs):
    return sorted(vs, key=lambda v: encode(spec, v))


# ------------------------------------------------------------------ check

def cover_check(instance: CoverInstance, centers, cap: int | None = None) -> CheckResult:
    """Verify coverage of the sphere and both separation constraints.

    On an uncovered sphere the witness is the uncovered vertex farthest from
    every center (ties broken by canonical encoding).
    """
    spec, r, sep = instance.spec, instance.r, instance.sep
    centers = tuple(centers)
    if len(set(centers)) != len(centers):
        return CheckResult(False, "duplicate", centers=centers)
    if len(centers) > instance.max_balls:
        return CheckResult(False, "count", centers=centers)
    o = origin(spec)
    if sep >= 1:
        for c in centers:
            if not isinstance(distance(spec, o, c, sep - 1), Beyond):
                return CheckResult(False, "origin", (c,), centers)
        for a, b in itertools.combinations(centers, 2):
            if not isinstance(distance(spec, a, b, sep - 1), Beyond):
                return CheckResult(False, "separation", (a, b), centers)
    S = ball(spec, o, r, cap).shells[r]
    covered = multi_ball(spec, centers, instance.radius_budget, cap)
    missing = [u for u in S if u not in covered]
    if not missing:
        return CheckResult(True, centers=centers)
    return CheckResult(False, "uncovered", (_farthest(spec, centers, missing, cap),), centers)


def _farthest(spec, centers, targets, cap):
    """Target maximizing the distance to the nearest center."""
    cap = DEFAULT_CAP if cap is None else cap
    nbrs = neighbor_fn(spec)
    todo = set(targets)
    seen = set(centers)
    frontier = list(seen)
    last = [t for t in targets if t in seen]
    todo -= seen
    while todo and frontier:
        nxt = []
        for v in frontier:
            for u in nbrs(v):
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        hit = [u for u in nxt if u in todo]
        if hit:
            last = hit
            todo.difference_update(hit)
        if len(seen) > cap:
            break  # too far to rank exactly; fall back to canonical order
        frontier = nxt
    pool = list(todo) if todo else last
    return _enc_sorted(spec, pool)[0]


# ------------------------------------------------------------- candidates

@dataclass
class Candidates:
    sphere: list  # canonical order; bit j of a mask is sphere[j]
    centers: list
    masks: list
    deduplicated: bool
    raw_count: int = 0

    def __len__(self):
        return len(self.centers)


def candidate_centers(spec: GraphSpec, r: int, radius_budget: int | None = None,
                      sep: int = 0, dedup: bool = False,
                      cap: int | None = None) -> Candidates:
    """All centers whose ball meets the sphere, with coverage bitsets.

    Centers within ``sep - 1`` of the origin are excluded. Every returned
    center lies in B(origin, 2r - 1). With ``dedup`` only one representative
    per coverage set is kept and strictly dominated sets are dropped; that is
    exact only when no separation beyond distinctness is imposed.
    """
    budget = r - 1 if radius_budget is None else radius_budget
    if not 0 <= budget < r:
        raise ValueError("radius budget must satisfy 0 <= budget < r")
    o = origin(spec)
    S = _enc_sorted(spec, ball(spec, o, r, cap).shells[r])
    masks: dict = {}
    for j, u in enumerate(S):
        bit = 1 << j
        for c in ball(spec, u, budget, cap).dist:
            masks[c] = masks.get(c, 0) | bit
    if sep >= 1:
        for c in ball(spec, o, sep - 1, cap).dist:
            masks.pop(c, None)
    raw = len(masks)
    items = sorted(masks.items(), key=lambda kv: (-kv[1].bit_count(), encode(spec, kv[0])))
    if dedup:
        kept: list = []
        seen_masks: set = set()
        for c, m in items:
            if m in seen_masks or any(m | k == k for _, k in kept):
                continue
            seen_masks.add(m)
            kept.append((c, m))
        items = kept
    return Candidates(S, [c for c, _ in items], [m for _, m in items], dedup, raw)


# ----------------------------------------------------------- exact search

class _Budget(Exception):
    pass


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


class _Search:
    """Branch and bound for the separated set-cover problem."""

    def __init__(self, masks, full, conflicts, node_budget):
        self.masks = masks
        self.full = full
        self.conflicts = conflicts
        self.node_budget = node_budget
        self.nodes = 0
        n_el = full.bit_length()
        self.elem_cands = [0] * n_el
        for i, m in enumerate(masks):
            for j in _bits(m):
                self.elem_cands[j] |= 1 << i
        self.cocover = [0] * n_el
        for j in range(n_el):
            acc = 0
            for i in _bits(self.elem_cands[j]):
                acc |= masks[i]
            self.cocover[j] = acc
        self.order = sorted(range(n_el), key=lambda j: (self.elem_cands[j].bit_count(), j))

    def packing_bound(self, uncovered: int) -> int:
        """Uncovered elements no two of which share a candidate."""
        blocked = 0
        count = 0
        for j in self.order:
            bit = 1 << j
            if uncovered & bit and not blocked & bit:
                count += 1
                blocked |= self.cocover[j]
        return count

    def greedy(self):
        covered, chosen = 0, []
        allowed = (1 << len(self.masks)) - 1
        while covered != self.full:
            best, gain = None, 0
            for i in _bits(allowed):
                g = (self.masks[i] & ~covered).bit_count()
                if g > gain:
                    best, gain = i, g
            if best is None:
                return None
            chosen.append(best)
            covered |= self.masks[best]
            allowed &= ~(1 << best)
            if self.conflicts is not None:
                allowed &= ~self.conflicts[best]
        return chosen

    def solve(self, k: int):
        allowed = (1 << len(self.masks)) - 1
        return self._dfs(0, [], allowed, k)

    def _dfs(self, covered, chosen, allowed, left):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _Budget
        if covered == self.full:
            return list(chosen)
        if left == 0:
            return None
        uncovered = self.full & ~covered
        if self.packing_bound(uncovered) > left:
            return None
        best_opts, best_cnt = 0, None
        for j in _bits(uncovered):
            opts = self.elem_cands[j] & allowed
            cnt = opts.bit_count()
            if cnt == 0:
                return None
            if best_cnt is None or cnt < best_cnt:
                best_opts, best_cnt = opts, cnt
                if cnt == 1:
                    break
        for i in _bits(best_opts):
            nxt = allowed & ~(1 << i)
            if self.conflicts is not None:
                nxt &= ~self.conflicts[i]
            chosen.append(i)
            res = self._dfs(covered | self.masks[i], chosen, nxt, left - 1)
            chosen.pop()
            if res is not None:
                return res
            # every cover through i from this node has been explored
            allowed &= ~(1 << i)
        return None


def min_cover(instance: CoverInstance, node_budget: int = DEFAULT_NODE_BUDGET,
              dedup: bool | None = None, cap: int | None = None) -> CoverResult:
    """Exact minimum number of separated radius-budget balls covering the sphere.

    Returns ``Cover`` with a witness, ``NoCover`` when even ``max_balls`` balls
    cannot cover (the candidate space is exhausted), or ``BudgetExceeded``.
    """
    t0 = time.perf_counter()
    spec, sep = instance.spec, instance.sep
    if dedup is None:
        dedup = sep <= 1
    elif dedup and sep > 1:
        raise ValueError("coverage deduplication is unsound with sep > 1")
    cands = candidate_centers(spec, instance.r, instance.radius_budget, sep, dedup, cap)
    full = (1 << len(cands.sphere)) - 1
    conflicts = None
    if sep >= 2:
        index = {c: i for i, c in enumerate(cands.centers)}
        conflicts = []
        for c in cands.centers:
            m = 0
            for u in ball(spec, c, sep - 1, cap).dist:
                i = index.get(u)
                if i is not None:
                    m |= 1 << i
            conflicts.append(m)
    search = _Search(cands.masks, full, conflicts, node_budget)

    def result(status, chosen=None, size=None, lb=0):
        centers = tuple(_enc_sorted(spec, [cands.centers[i] for i in chosen])) if chosen else ()
        return CoverResult(instance, status, centers, size, len(cands), search.nodes, lb,
                           (time.perf_counter() - t0) * 1000)

    union = 0
    for m in cands.masks:
        union |= m
    if union != full:
        return result(NO_COVER)
    lb = max(1, search.packing_bound(full))
    greedy = search.greedy()
    try:
        for k in range(lb, instance.max_balls + 1):
            if greedy is not None and len(greedy) <= k:
                return result(COVER, greedy, len(greedy), lb)
            sol = search.solve(k)
            if sol is not None:
                return result(COVER, sol, len(sol), lb)
    except _Budget:
        return result(BUDGET_EXCEEDED, lb=lb)
    return result(NO_COVER, lb=lb)


# ------------------------------------------------------------------ probe

@dataclass
class ProbeResult:
    spec: GraphSpec
    sep: int
    rows: list  # (r, CoverResult)
    summary: dict = field(default_factory=dict)


def survival_probe(spec: GraphSpec, sep: int, r_list, max_balls: int = 16,
                   node_budget: int = DEFAULT_NODE_BUDGET,
                   cap: int | None = None) -> ProbeResult:
    """Minimum cover size k(r) at each sampled radius.

    Finitely many radii cannot settle a statement about infinitely many, so
    the summary is labelled EVIDENCE: every sampled sphere needs at least
    min k(r) balls, and max k(r) balls sufficed at every sampled radius.
    """
    r_list = list(r_list)
    if not r_list or any(b <= a for a, b in zip(r_list, r_list[1:])):
        raise ValueError("r_list must be non-empty and increasing")
    rows = []
    for r in r_list:
        res = min_cover(CoverInstance(spec, r, sep, max_balls=max_balls), node_budget, cap=cap)
        rows.append((r, res))
    sizes = [res.min_size for _, res in rows if res.status == COVER]
    all_covered = len(sizes) == len(rows)
    summary = {
        "label": "EVIDENCE",
        "k": {r: (res.min_size if res.status == COVER else res.status) for r, res in rows},
        "lower": min(sizes) if all_covered else None,
        "upper": max(sizes) if all_covered else None,
    }
    return ProbeResult(spec, sep, rows, summary)


# -------------------------------------------------------------- witnesses

def antipodal_witness(spec: GraphSpec, r: int, cap: int | None = None):
    """Two vertices of the sphere of radius ``r`` at distance exactly ``2r``.

    Straight-line guesses are tried first, then the whole sphere is scanned;
    ``None`` means the scan was exhaustive. Every returned distance is
    confirmed by BFS.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    o = origin(spec)

    def on_sphere(v):
        return distance(spec, o, v, r, cap) == r

    for u, w in line_pairs(spec, r):
        if on_sphere(u) and on_sphere(w) and distance(spec, u, w, 2 * r, cap) == 2 * r:
            return u, w, 2 * r
    S = _enc_sorted(spec, ball(spec, o, r, cap).shells[r])
    members = set(S)
    for u in S:
        near = ball(spec, u, 2 * r - 1, cap).dist
        for w in S:
            if w not in near and w in members:
                return u, w, 2 * r
    return None


def lattice_geodesic_vertices(r: int) -> list:
    """Lamplighter-plane vertices (lamps lit along a Z^2 geodesic from 0, lamplighter at its end).

    One vertex per monotone lattice path of length ``r``.
    """
    out = set()
    for sx, sy in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        for xs in itertools.product((0, 1), repeat=r):
            x = y = 0
            path = [(0, 0)]
            for horiz in xs:
                if horiz:
                    x += sx
                else:
                    y += sy
                path.append((x, y))
            out.add((tuple(sorted(path)), (x, y)))
    return sorted(out)


def spread_witness(spec: GraphSpec, r: int, n: int, min_pair: int,
                   pool=None, cap: int | None = None):
    """``n`` vertices of the sphere of radius ``r`` pairwise at distance >= ``min_pair``.

    Backtracking over ``pool`` (default: the whole sphere, or the lit-geodesic
    vertices for the lamplighter plane). Returns the list with its exact
    pairwise distance matrix, or ``None`` if the pool is exhausted.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    o = origin(spec)
    if pool is None:
        if spec.family is Family.LAMPLIGHTER_PLANE:
            pool = lattice_geodesic_vertices(r)
        else:
            pool = ball(spec, o, r, cap).shells[r]
    pool = [v for v in _enc_sorted(spec, pool) if distance(spec, o, v, r, cap) == r]
    far_cache: dict = {}

    def far(i, j):
        key = (i, j) if i < j else (j, i)
        if key not in far_cache:
            d = distance(spec, pool[i], pool[j], min_pair - 1, cap)
            far_cache[key] = isinstance(d, Beyond)
        return far_cache[key]

    chosen: list = []

    def extend(start):
        if len(chosen) == n:
            return True
        for i in range(start, len(pool)):
            if all(far(i, j) for j in chosen):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        return None
    verts = [pool[i] for i in chosen]
    dists = [[0 if a == b else distance(spec, a, b, 2 * r, cap) for b in verts] for a in verts]
    return verts, dists


# --------------------------------------------------------- lamplighter line

def ll_z_eight_centers(d: int, corrected: bool = True) -> list:
    """The eight LL(Z) centers for separation ``d``.

    With ``corrected=False`` the last center lights the whole interval
    [-3d-1, 4d] (the literal reading of its index range).
    """
    if d < 1:
        raise ValueError("d must be >= 1")

    def span(a, b):
        return list(range(a, b + 1))

    rows = [
        (1, span(1, d)),
        (1, span(-d, -1)),
        (1, [0] + span(d + 1, 2 * d)),
        (1, [0] + span(-2 * d, -d - 1)),
        (-1, span(2 * d + 1, 3 * d)),
        (-1, span(-3 * d, -2 * d - 1)),
        (-1, [0] + span(3 * d + 1, 4 * d)),
        (-1, [0] + (span(-4 * d, -3 * d - 1) if corrected else span(-3 * d - 1, 4 * d))),
    ]
    return [(tuple(sorted(set(lamps))), pos) for pos, lamps in rows]


def ll_z_eight_cover(d: int, r: int, corrected: bool = True,
                     cap: int | None = None) -> CheckResult:
    spec = GraphSpec.simple(Family.LAMPLIGHTER_LINE)
    inst = CoverInstance(spec, r, sep=d, max_balls=8)
    return cover_check(inst, ll_z_eight_centers(d, corrected), cap)


# ----------------------------------------------------------------- sprawl

@dataclass
class SprawlResult:
    mean: float
    stderr: float
    pairs: int
    exact: bool


def sprawl_estimate(spec: GraphSpec, r: int, samples: int | None = None,
                    seed: int = 0, exact: bool = False,
                    cap: int | None = None) -> SprawlResult:
    """Mean of d(x, y) / r over ordered pairs of sphere vertices (x = y included).

    Pair distances come from one BFS table of B(origin, 2r) read through the
    automorphism sending x to the origin.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    o = origin(spec)
    table = ball(spec, o, 2 * r, cap)
    S = _enc_sorted(spec, table.shells[r])
    dist = table.dist

    def d(x, y):
        return dist[relative(spec, x, y)]

    if exact:
        total = sum(d(x, y) for x in S for y in S)
        return SprawlResult(total / (r * len(S) ** 2), 0.0, len(S) ** 2, True)
    if not samples or samples < 1:
        raise ValueError("sampled mode needs samples >= 1")
    rng = np.random.default_rng(np.uint64(seed))
    ii = rng.integers(0, len(S), size=samples)
    jj = rng.integers(0, len(S), size=samples)
    vals = np.fromiter((d(S[i], S[j]) for i, j in zip(ii, jj)), dtype=float, count=samples) / r
    se = float(vals.std(ddof=1) / np.sqrt(samples)) if samples > 1 else float("inf")
    return SprawlResult(float(vals.mean()), se, samples, False)
