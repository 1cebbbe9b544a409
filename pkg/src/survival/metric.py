"""Exact word-metric balls, spheres and distances by breadth-first search."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import GraphSpec, Vertex, neighbor_fn

DEFAULT_CAP = 50_000_000


class CapacityError(RuntimeError):
    """A search would exceed its vertex-table cap; no partial result is returned."""


@dataclass(frozen=True)
class Beyond:
    """Sentinel distance: strictly greater than ``cap``."""

    cap: int

    def __repr__(self):
        return f"Beyond({self.cap})"


@dataclass
class BallTable:
    spec: GraphSpec
    center: Vertex
    radius: int
    dist: dict
    shells: list = field(repr=False, default_factory=list)

    def __len__(self):
        return len(self.dist)

    def __contains__(self, v):
        return v in self.dist

    def sphere(self, t: int) -> list:
        return list(self.shells[t]) if 0 <= t < len(self.shells) else []


def _bfs(spec: GraphSpec, sources, r: int, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    nbrs = neighbor_fn(spec)
    dist = {s: 0 for s in sources}
    shells = [list(dist)]
    frontier = shells[0]
    for t in range(1, r + 1):
        nxt = []
        for v in frontier:
            for u in nbrs(v):
                if u not in dist:
                    dist[u] = t
                    nxt.append(u)
        if len(dist) > cap:
            raise CapacityError(f"ball exceeds {cap} vertices at radius {t}")
        shells.append(nxt)
        frontier = nxt
    return dist, shells


def ball(spec: GraphSpec, center: Vertex, r: int, cap: int | None = None) -> BallTable:
    if r < 0:
        raise ValueError("radius must be non-negative")
    dist, shells = _bfs(spec, [center], r, cap)
    return BallTable(spec, center, r, dist, shells)


def sphere(spec: GraphSpec, center: Vertex, r: int, cap: int | None = None) -> set:
    return set(ball(spec, center, r, cap).shells[r])


def multi_ball(spec: GraphSpec, centers, r: int, cap: int | None = None) -> dict:
    """Union of B(c, r) over ``centers``, mapped to distance from the nearest."""
    return _bfs(spec, list(dict.fromkeys(centers)), r, cap)[0]


def distance(spec: GraphSpec, u: Vertex, v: Vertex, cap: int,
             max_vertices: int | None = None):
    """Exact d(u, v) if it is at most ``cap``, else ``Beyond(cap)``.

    Bidirectional BFS; the smaller frontier is expanded a full layer at a time.
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if u == v:
        return 0
    limit = DEFAULT_CAP if max_vertices is None else max_vertices
    nbrs = neighbor_fn(spec)
    da, db = {u: 0}, {v: 0}
    fa, fb = [u], [v]
    a = b = 0
    while a + b < cap:
        if len(fa) <= len(fb):
            a += 1
            fa, hit = _expand(nbrs, fa, da, db, a)
        else:
            b += 1
            fb, hit = _expand(nbrs, fb, db, da, b)
        if hit is not None:
            return hit
        if not fa or not fb:
            break
        if len(da) + len(db) > limit:
            raise CapacityError(f"distance search exceeds {limit} vertices")
    return Beyond(cap)


def _expand(nbrs, frontier, mine, other, t):
    nxt = []
    best = None
    for x in frontier:
        for y in nbrs(x):
            if y not in mine:
                mine[y] = t
                nxt.append(y)
                if y in other:
                    d = t + other[y]
                    if best is None or d < best:
                        best = d
    return nxt, best
