"""Graph Voronoi cells, the simultaneous-growth process and two-species competition.

Ties follow the non-strict definition: a vertex equidistant from several
nearest sites belongs to each of their cells.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graphs import GraphSpec, Vertex, encode, neighbor_fn, origin
from .metric import DEFAULT_CAP, Beyond, CapacityError, ball, distance


@dataclass(frozen=True)
class SiteSet:
    spec: GraphSpec
    sites: tuple

    def __post_init__(self):
        object.__setattr__(self, "sites", tuple(self.sites))
        if not self.sites:
            raise ValueError("site set must be non-empty")
        if len(set(self.sites)) != len(self.sites):
            raise ValueError("sites must be pairwise distinct")

    def __len__(self):
        return len(self.sites)


@dataclass
class VoronoiAssignment:
    """Nearest-site data on the window B(origin, radius).

    ``dist[v]`` is the distance to the nearest site and ``nearest[v]`` the
    sorted tuple of indices of all sites attaining it.
    """

    siteset: SiteSet
    radius: int
    window: dict  # v -> d(origin, v)
    dist: dict
    nearest: dict

    @property
    def spec(self):
        return self.siteset.spec

    def cell(self, i: int) -> set:
        return {v for v, idx in self.nearest.items() if i in idx}

    def ties(self) -> list:
        return [v for v, idx in self.nearest.items() if len(idx) > 1]

    def cell_sizes(self) -> list[int]:
        c = Counter(i for idx in self.nearest.values() for i in idx)
        return [c[i] for i in range(len(self.siteset))]

    def boundary_cells(self) -> list[int]:
        """Indices of cells containing a vertex on the window boundary."""
        touched = set()
        for v, d in self.window.items():
            if d == self.radius:
                touched.update(self.nearest[v])
        return sorted(touched)

    def ordered(self) -> list:
        key = lambda v: encode(self.spec, v)
        return sorted(self.nearest, key=key)

    def records(self) -> list[dict]:
        return [
            {"v": 1, "type": "vertex", "vertex": encode(self.spec, u).hex(),
             "d": self.dist[u], "cells": list(self.nearest[u])}
            for u in self.ordered()
        ]


def _window(siteset: SiteSet, R: int, cap):
    spec = siteset.spec
    win = ball(spec, origin(spec), R, cap).dist
    for s in siteset.sites:
        if s not in win:
            raise ValueError(f"site {s!r} lies outside B(origin, {R})")
    return win


def voronoi_cells(siteset: SiteSet, R: int, cap: int | None = None) -> VoronoiAssignment:
    """Exact metric Voronoi assignment on B(origin, R) by multi-source BFS.

    The search is not confined to the window, so distances are true graph
    distances; it stops once every window vertex is settled.
    """
    spec = siteset.spec
    win = _window(siteset, R, cap)
    cap = DEFAULT_CAP if cap is None else cap
    nbrs = neighbor_fn(spec)
    dist = {s: 0 for s in siteset.sites}
    label = {s: 1 << i for i, s in enumerate(siteset.sites)}
    frontier = list(siteset.sites)
    remaining = len(win) - sum(1 for s in frontier if s in win)
    t = 0
    while remaining:
        t += 1
        nxt = []
        for v in frontier:
            lv = label[v]
            for u in nbrs(v):
                du = dist.get(u)
                if du is None:
                    dist[u] = t
                    label[u] = lv
                    nxt.append(u)
                elif du == t:
                    label[u] |= lv
        if len(dist) > cap:
            raise CapacityError(f"voronoi search exceeds {cap} vertices")
        remaining -= sum(1 for u in nxt if u in win)
        frontier = nxt
    nearest = {v: _bits(label[v]) for v in win}
    return VoronoiAssignment(siteset, R, win, {v: dist[v] for v in win}, nearest)


def _bits(mask: int) -> tuple:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def growth_process(siteset: SiteSet, R: int, cap: int | None = None) -> VoronoiAssignment:
    """Unit-speed simultaneous growth of one cluster per site.

    At each step every unclaimed vertex adjacent to a cluster joins it; a
    vertex reached by several clusters in the same step joins all of them.
    Runs on the whole graph until the window is fully claimed.
    """
    spec = siteset.spec
    win = _window(siteset, R, cap)
    cap = DEFAULT_CAP if cap is None else cap
    nbrs = neighbor_fn(spec)
    k = len(siteset)
    claimed = {s: (0, {i}) for i, s in enumerate(siteset.sites)}
    # only the newest layer of a cluster can have unclaimed neighbours
    fresh = [{s} for s in siteset.sites]
    unclaimed_in_window = set(win) - set(siteset.sites)
    step = 0
    while unclaimed_in_window:
        step += 1
        reached: dict = {}
        for i in range(k):
            for v in fresh[i]:
                for u in nbrs(v):
                    if u not in claimed:
                        reached.setdefault(u, set()).add(i)
        fresh = [set() for _ in range(k)]
        for u, owners in reached.items():
            claimed[u] = (step, owners)
            for i in owners:
                fresh[i].add(u)
        unclaimed_in_window.difference_update(reached)
        if len(claimed) > cap:
            raise CapacityError(f"growth process exceeds {cap} vertices")
        if not reached:
            raise RuntimeError("growth stalled before claiming the window")
    dist = {v: claimed[v][0] for v in win}
    nearest = {v: tuple(sorted(claimed[v][1])) for v in win}
    return VoronoiAssignment(siteset, R, win, dist, nearest)


def check_growth_equivalence(siteset: SiteSet, R: int, cap: int | None = None):
    """Compare growth_process and voronoi_cells vertexwise.

    Returns ``(True, None)`` or ``(False, first differing vertex)`` with
    vertices scanned in canonical order.
    """
    a = voronoi_cells(siteset, R, cap)
    b = growth_process(siteset, R, cap)
    for v in a.ordered():
        if a.nearest[v] != b.nearest[v] or a.dist[v] != b.dist[v]:
            return False, v
    return True, None


def min_pairwise_distance(siteset: SiteSet, cap: int):
    if len(siteset) < 2:
        raise ValueError("need at least two sites")
    best = None
    s = siteset.sites
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            d = distance(siteset.spec, s[i], s[j], cap if best is None else min(cap, best))
            if not isinstance(d, Beyond) and (best is None or d < best):
                best = d
    return Beyond(cap) if best is None else best


# ------------------------------------------------------------ competition

RUNNING = "running"
Y_TRAPPED = "y_trapped"
X_TRAPPED = "x_trapped"
BOTH_ESCAPING = "both_escaping"


@dataclass
class CompetitionState:
    X: set
    Y: set
    m: int
    step: int
    window_radius: int
    status: str = RUNNING
    history: list = field(default_factory=list)  # (step, |X|, |Y|)


def _expand(nbrs, src, steps, blocked, win):
    """Vertices within ``steps`` of ``src`` along paths avoiding ``blocked``,
    clipped to the window."""
    seen = set(src)
    frontier = [v for v in src if any(u not in seen for u in nbrs(v))]
    for _ in range(steps):
        nxt = []
        for v in frontier:
            for u in nbrs(v):
                if u not in seen and u not in blocked and u in win:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def competition_run(spec: GraphSpec, x0: Vertex, y0: Vertex, m: int, R: int,
                    max_steps: int = 10_000, adapted: bool = False,
                    cap: int | None = None) -> CompetitionState:
    """Two-species competition: X grows by ``m`` avoiding Y, then Y by 1
    avoiding the updated X.

    With ``adapted=True`` (``m`` must be 1) both grow simultaneously and a
    vertex reached by both joins both. Statuses are evidence labels from a
    finite window: a trap is exact (the trapped set's neighbourhood lies
    inside the window and is blocked), escaping means touching the boundary.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if adapted and m != 1:
        raise ValueError("the adapted process is defined for m = 1")
    if x0 == y0:
        raise ValueError("x0 and y0 must differ")
    win = ball(spec, origin(spec), R, cap).dist
    if x0 not in win or y0 not in win:
        raise ValueError("starting vertices must lie in the window")
    nbrs = neighbor_fn(spec)
    st = CompetitionState({x0}, {y0}, m, 0, R)
    st.history.append((0, 1, 1))

    def touches(S):
        return any(win[v] == R for v in S)

    for step in range(1, max_steps + 1):
        X, Y = st.X, st.Y
        if adapted:
            gx = _expand(nbrs, X, 1, X | Y, win) - X
            gy = _expand(nbrs, Y, 1, X | Y, win) - Y
            newX, newY = X | gx, Y | gy
        else:
            newX = _expand(nbrs, X, m, Y, win)
            newY = _expand(nbrs, Y, 1, newX, win)
            gx, gy = newX - X, newY - Y
        st.X, st.Y, st.step = newX, newY, step
        st.history.append((step, len(newX), len(newY)))
        tx, ty = touches(newX), touches(newY)
        if not gy and not ty and gx:
            st.status = Y_TRAPPED
            break
        if not gx and not tx and gy:
            st.status = X_TRAPPED
            break
        if tx and ty:
            st.status = BOTH_ESCAPING
            break
    return st


# --------------------------------------------------------- cell statistics

@dataclass
class DegreeProfile:
    histogram: dict  # within-cell degree -> count, interior vertices only
    degree_one: list


def cell_degree_profile(assign: VoronoiAssignment, i: int) -> DegreeProfile:
    """Within-cell degrees of the interior vertices of cell ``i``.

    Vertices on the window boundary are skipped since part of their
    neighbourhood lies outside the window.
    """
    nbrs = neighbor_fn(assign.spec)
    cell = assign.cell(i)
    hist: Counter = Counter()
    ones = []
    for v in cell:
        if assign.window[v] >= assign.radius:
            continue
        deg = sum(1 for u in nbrs(v) if u in cell)
        hist[deg] += 1
        if deg == 1:
            ones.append(v)
    key = lambda v: encode(assign.spec, v)
    return DegreeProfile(dict(sorted(hist.items())), sorted(ones, key=key))
