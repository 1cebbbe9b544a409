"""Implicit vertex-transitive graph families.

Vertices are plain hashable tuples/strings, one shape per family:

* ``Lattice``: tuple of ints.
* ``LamplighterLine``: ``(lamps, pos)`` with ``lamps`` a sorted tuple of ints.
* ``LamplighterPlane``: ``(lamps, pos)`` with ``pos`` an ``(x, y)`` pair and
  ``lamps`` a sorted tuple of such pairs.
* ``FreeProduct23``: reduced word over ``a``, ``b``, ``B`` (``B`` = b^-1), ``""`` is e.
* ``RegularTree``: tuple of letters in ``1..k``, no two consecutive equal.
* ``LadderDiag``: ``(n, side)`` with side in {0, 1}.

Cayley edges follow g ~ s*g (generator multiplied on the left), so right
multiplication is a graph automorphism.
"""
from __future__ import annotations

import enum
import re
import struct
from bisect import insort
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterable

Vertex = Hashable


class EncodingError(ValueError):
    """Raised for malformed or non-canonical vertices, encodings and literals."""


class Family(str, enum.Enum):
    LATTICE = "z"
    LAMPLIGHTER_LINE = "ll-z"
    LAMPLIGHTER_PLANE = "ll-z2"
    FREE_PRODUCT_23 = "free23"
    REGULAR_TREE = "tree"
    LADDER_DIAG = "ladder"


STD = "std"
DIAG = "diag"

_TAGS = {
    Family.LATTICE: 1,
    Family.LAMPLIGHTER_LINE: 2,
    Family.LAMPLIGHTER_PLANE: 3,
    Family.FREE_PRODUCT_23: 4,
    Family.REGULAR_TREE: 5,
    Family.LADDER_DIAG: 6,
}


def std_gens(d: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for i in range(d):
        for s in (1, -1):
            e = [0] * d
            e[i] = s
            out.append(tuple(e))
    return tuple(sorted(out))


DIAG_GENS = tuple(sorted([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]))


@dataclass(frozen=True)
class GraphSpec:
    family: Family
    dim: int = 0
    gens: tuple[tuple[int, ...], ...] = ()
    gen_name: str = ""
    degree: int = 0

    def __post_init__(self):
        if self.family is Family.LATTICE:
            if self.dim < 1:
                raise ValueError("lattice dimension must be >= 1")
            if not self.gens:
                raise ValueError("lattice generator set must be non-empty")
            gs = set(self.gens)
            for g in self.gens:
                if len(g) != self.dim:
                    raise ValueError(f"generator {g} has wrong dimension")
                if not any(g):
                    raise ValueError("generator set must exclude the zero vector")
                if tuple(-x for x in g) not in gs:
                    raise ValueError(f"generator set is not symmetric: missing -{g}")
            if len(gs) != len(self.gens):
                raise ValueError("duplicate generators")
        elif self.family is Family.REGULAR_TREE:
            if self.degree < 3:
                raise ValueError("tree degree must be >= 3")

    @classmethod
    def lattice(cls, dim: int, gens: str | Iterable[Iterable[int]] = STD) -> "GraphSpec":
        if gens == STD:
            return cls(Family.LATTICE, dim, std_gens(dim), STD)
        if gens == DIAG:
            if dim != 2:
                raise ValueError("diag generators exist only for d=2")
            return cls(Family.LATTICE, 2, DIAG_GENS, DIAG)
        gl = tuple(sorted(tuple(int(x) for x in g) for g in gens))
        return cls(Family.LATTICE, dim, gl, "custom")

    @classmethod
    def tree(cls, k: int) -> "GraphSpec":
        return cls(Family.REGULAR_TREE, degree=k)

    @classmethod
    def simple(cls, family: Family) -> "GraphSpec":
        return cls(family)

    def __str__(self):
        f = self.family
        if f is Family.LATTICE:
            if self.gen_name in (STD, DIAG):
                return f"z:{self.dim}:{self.gen_name}"
            body = ";".join("(" + ",".join(map(str, g)) + ")" for g in self.gens)
            return f"z:{self.dim}:custom={body}"
        if f is Family.REGULAR_TREE:
            return f"tree:{self.degree}"
        return f.value


def parse_graph(text: str) -> GraphSpec:
    """Parse ``z:<d>[:std|diag|custom=...]``, ``ll-z``, ``ll-z2``, ``free23``,
    ``tree:<k>`` or ``ladder``."""
    t = text.strip()
    simple = {
        "ll-z": Family.LAMPLIGHTER_LINE,
        "ll-z2": Family.LAMPLIGHTER_PLANE,
        "free23": Family.FREE_PRODUCT_23,
        "ladder": Family.LADDER_DIAG,
    }
    if t in simple:
        return GraphSpec.simple(simple[t])
    m = re.fullmatch(r"tree:(\d+)", t)
    if m:
        return GraphSpec.tree(int(m.group(1)))
    m = re.fullmatch(r"z:(\d+)(?::(.*))?", t)
    if m:
        d = int(m.group(1))
        rest = m.group(2) or STD
        if rest in (STD, DIAG):
            return GraphSpec.lattice(d, rest)
        if rest.startswith("custom="):
            gens = []
            for part in rest[len("custom="):].split(";"):
                pm = re.fullmatch(r"\s*\(([-\d,\s]+)\)\s*", part)
                if not pm:
                    raise ValueError(f"bad generator {part!r}")
                gens.append(tuple(int(x) for x in pm.group(1).split(",")))
            return GraphSpec.lattice(d, gens)
    raise ValueError(f"unrecognized graph spec {text!r}")


# ---------------------------------------------------------------- origin

def origin(spec: GraphSpec) -> Vertex:
    f = spec.family
    if f is Family.LATTICE:
        return (0,) * spec.dim
    if f is Family.LAMPLIGHTER_LINE:
        return ((), 0)
    if f is Family.LAMPLIGHTER_PLANE:
        return ((), (0, 0))
    if f is Family.FREE_PRODUCT_23:
        return ""
    if f is Family.REGULAR_TREE:
        return ()
    return (0, 0)


# ------------------------------------------------------------- neighbors

def _lamp_states(lamps, p, q):
    """All configurations agreeing with ``lamps`` off {p, q}."""
    base = tuple(x for x in lamps if x != p and x != q)
    out = [base]
    for extra in ((p,), (q,), (p, q)):
        lst = list(base)
        for x in extra:
            insort(lst, x)
        out.append(tuple(lst))
    return out


def _ll_line_nbrs(v):
    lamps, p = v
    return [(cfg, q) for q in (p - 1, p + 1) for cfg in _lamp_states(lamps, p, q)]


def _ll_plane_nbrs(v):
    lamps, p = v
    x, y = p
    out = []
    for q in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
        out.extend((cfg, q) for cfg in _lamp_states(lamps, p, q))
    return out


_B_MUL = {("b", "b"): "B", ("B", "B"): "b", ("b", "B"): "", ("B", "b"): ""}


def _free23_mul(s: str, w: str) -> str:
    """Reduced form of the product s*w for a single letter s."""
    if s == "a":
        return w[1:] if w[:1] == "a" else "a" + w
    if w[:1] in ("b", "B"):
        return _B_MUL[s, w[0]] + w[1:]
    return s + w


def _free23_nbrs(w):
    return [_free23_mul(s, w) for s in ("a", "b", "B")]


def _ladder_nbrs(v):
    n, s = v
    t = 1 - s
    return [(n, t), (n - 1, s), (n + 1, s), (n - 1, t), (n + 1, t)]


@lru_cache(maxsize=None)
def neighbor_fn(spec: GraphSpec) -> Callable[[Vertex], list]:
    """Unchecked fast neighbor function used by all search routines."""
    f = spec.family
    if f is Family.LATTICE:
        gens = spec.gens
        if spec.dim == 1:
            steps = [g[0] for g in gens]
            return lambda v: [(v[0] + g,) for g in steps]
        if spec.dim == 2:
            return lambda v: [(v[0] + a, v[1] + b) for a, b in gens]
        return lambda v: [tuple(x + y for x, y in zip(v, g)) for g in gens]
    if f is Family.LAMPLIGHTER_LINE:
        return _ll_line_nbrs
    if f is Family.LAMPLIGHTER_PLANE:
        return _ll_plane_nbrs
    if f is Family.FREE_PRODUCT_23:
        return _free23_nbrs
    if f is Family.REGULAR_TREE:
        letters = range(1, spec.degree + 1)

        def tree_nbrs(w):
            return [w[1:] if w[:1] == (g,) else (g,) + w for g in letters]

        return tree_nbrs
    return _ladder_nbrs


def neighbors(spec: GraphSpec, v: Vertex) -> set:
    check_vertex(spec, v)
    return set(neighbor_fn(spec)(v))


def degree(spec: GraphSpec) -> int:
    return len(neighbors(spec, origin(spec)))


# ------------------------------------------------- automorphism to origin

def _free23_inverse(w: str) -> str:
    return w[::-1].translate(str.maketrans("bB", "Bb"))


def relative(spec: GraphSpec, u: Vertex, v: Vertex) -> Vertex:
    """Image of ``v`` under a graph automorphism sending ``u`` to the origin.

    Hence d(u, v) = d(origin, relative(u, v)).
    """
    f = spec.family
    if f is Family.LATTICE:
        return tuple(b - a for a, b in zip(u, v))
    if f is Family.LAMPLIGHTER_LINE:
        (lu, pu), (lv, pv) = u, v
        diff = set(lu).symmetric_difference(lv)
        return (tuple(sorted(x - pu for x in diff)), pv - pu)
    if f is Family.LAMPLIGHTER_PLANE:
        (lu, (ux, uy)), (lv, (vx, vy)) = u, v
        diff = set(lu).symmetric_difference(lv)
        return (tuple(sorted((x - ux, y - uy) for x, y in diff)), (vx - ux, vy - uy))
    if f is Family.FREE_PRODUCT_23:
        # right multiplication by u^-1
        return _free23_product_right(v, _free23_inverse(u))
    if f is Family.REGULAR_TREE:
        return _tree_product_right(v, tuple(reversed(u)))
    (nu, su), (nv, sv) = u, v
    return (nv - nu, sv ^ su)


def _free23_product_right(v: str, w: str) -> str:
    out = v
    for s in w:
        # right-multiply by a single letter
        if s == "a":
            out = out[:-1] if out[-1:] == "a" else out + "a"
        elif out[-1:] in ("b", "B"):
            out = out[:-1] + _B_MUL[out[-1], s]
        else:
            out = out + s
    return out


def _tree_product_right(v: tuple, w: tuple) -> tuple:
    out = v
    for s in w:
        out = out[:-1] if out[-1:] == (s,) else out + (s,)
    return out


# --------------------------------------------------------- validation

def check_vertex(spec: GraphSpec, v: Vertex) -> None:
    """Raise EncodingError unless ``v`` is a canonical vertex of ``spec``."""
    f = spec.family
    try:
        if f is Family.LATTICE:
            ok = isinstance(v, tuple) and len(v) == spec.dim and all(type(x) is int for x in v)
            if not ok:
                raise EncodingError(f"lattice vertex must be a {spec.dim}-tuple of ints: {v!r}")
        elif f in (Family.LAMPLIGHTER_LINE, Family.LAMPLIGHTER_PLANE):
            lamps, pos = v
            if not isinstance(lamps, tuple):
                raise EncodingError("lamps must be a tuple")
            coord_ok = _is_int if f is Family.LAMPLIGHTER_LINE else _is_pair
            if not coord_ok(pos) or not all(coord_ok(x) for x in lamps):
                raise EncodingError(f"bad lamplighter coordinates: {v!r}")
            if any(a >= b for a, b in zip(lamps, lamps[1:])):
                raise EncodingError("lamps must be strictly sorted and duplicate-free")
        elif f is Family.FREE_PRODUCT_23:
            if not isinstance(v, str) or set(v) - set("abB"):
                raise EncodingError(f"free23 word must use letters a, b, B: {v!r}")
            for x, y in zip(v, v[1:]):
                if (x == "a") == (y == "a"):
                    raise EncodingError(f"free23 word {v!r} is not reduced at {x}{y}")
        elif f is Family.REGULAR_TREE:
            if not isinstance(v, tuple) or not all(type(x) is int and 1 <= x <= spec.degree for x in v):
                raise EncodingError(f"tree word must use letters 1..{spec.degree}: {v!r}")
            if any(x == y for x, y in zip(v, v[1:])):
                raise EncodingError(f"tree word {v!r} has a repeated consecutive letter")
        else:
            n, s = v
            if not _is_int(n) or s not in (0, 1) or type(s) is not int:
                raise EncodingError(f"ladder vertex must be (int, 0|1): {v!r}")
    except (TypeError, ValueError) as exc:
        if isinstance(exc, EncodingError):
            raise
        raise EncodingError(f"malformed vertex {v!r}") from exc


def _is_int(x) -> bool:
    return type(x) is int


def _is_pair(x) -> bool:
    return isinstance(x, tuple) and len(x) == 2 and all(type(c) is int for c in x)


# ---------------------------------------------------------- byte encoding

def encode(spec: GraphSpec, v: Vertex) -> bytes:
    """Canonical byte form: family tag, then little-endian int32 fields."""
    f = spec.family
    tag = bytes([_TAGS[f]])
    if f is Family.LATTICE:
        return tag + struct.pack(f"<{len(v)}i", *v)
    if f is Family.LAMPLIGHTER_LINE:
        lamps, pos = v
        return tag + struct.pack(f"<iI{len(lamps)}i", pos, len(lamps), *lamps)
    if f is Family.LAMPLIGHTER_PLANE:
        lamps, pos = v
        flat = [c for p in lamps for c in p]
        return tag + struct.pack(f"<2iI{len(flat)}i", *pos, len(lamps), *flat)
    if f is Family.FREE_PRODUCT_23:
        return tag + v.encode("ascii")
    if f is Family.REGULAR_TREE:
        return tag + bytes(v)
    return tag + struct.pack("<iB", *v)


def decode(spec: GraphSpec, data: bytes) -> Vertex:
    f = spec.family
    if not data or data[0] != _TAGS[f]:
        raise EncodingError("wrong family tag")
    body = data[1:]
    try:
        if f is Family.LATTICE:
            if len(body) != 4 * spec.dim:
                raise EncodingError("wrong lattice encoding length")
            v = struct.unpack(f"<{spec.dim}i", body)
        elif f is Family.LAMPLIGHTER_LINE:
            pos, n = struct.unpack_from("<iI", body)
            if len(body) != 8 + 4 * n:
                raise EncodingError("wrong lamplighter encoding length")
            v = (struct.unpack_from(f"<{n}i", body, 8), pos)
        elif f is Family.LAMPLIGHTER_PLANE:
            x, y, n = struct.unpack_from("<2iI", body)
            if len(body) != 12 + 8 * n:
                raise EncodingError("wrong lamplighter encoding length")
            flat = struct.unpack_from(f"<{2 * n}i", body, 12)
            v = (tuple(zip(flat[::2], flat[1::2])), (x, y))
        elif f is Family.FREE_PRODUCT_23:
            v = body.decode("ascii")
        elif f is Family.REGULAR_TREE:
            v = tuple(body)
        else:
            if len(body) != 5:
                raise EncodingError("wrong ladder encoding length")
            v = struct.unpack("<iB", body)
    except (struct.error, UnicodeDecodeError) as exc:
        raise EncodingError(f"malformed encoding: {exc}") from exc
    check_vertex(spec, v)
    return v


def sort_key(spec: GraphSpec) -> Callable[[Vertex], bytes]:
    """Key ordering vertices by canonical encoding."""
    return lambda v: encode(spec, v)


# ------------------------------------------------------------- literals

def parse_vertex(spec: GraphSpec, text: str) -> Vertex:
    """Parse a family-native literal, or ``hex:<encoding>``."""
    t = text.strip()
    if t.startswith("hex:"):
        try:
            return decode(spec, bytes.fromhex(t[4:]))
        except ValueError as exc:
            raise EncodingError(str(exc)) from exc
    f = spec.family
    try:
        if f is Family.LATTICE:
            v = tuple(int(x) for x in t.split(","))
        elif f is Family.LADDER_DIAG:
            n, s = (int(x) for x in t.split(","))
            v = (n, s)
        elif f in (Family.LAMPLIGHTER_LINE, Family.LAMPLIGHTER_PLANE):
            m = re.fullmatch(r"pos=([^;]*);lamps=(.*)", t)
            if not m:
                raise EncodingError(f"lamplighter literal must look like pos=..;lamps=..: {t!r}")
            if f is Family.LAMPLIGHTER_LINE:
                pos = int(m.group(1))
                lamps = tuple(int(x) for x in m.group(2).split(",") if x.strip())
            else:
                pos = tuple(int(x) for x in m.group(1).split(","))
                pair = r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)"
                body = m.group(2).strip()
                if body and not re.fullmatch(rf"{pair}(\s*,\s*{pair})*", body):
                    raise EncodingError(f"plane lamps must look like (x,y),(x,y): {body!r}")
                pairs = re.findall(pair, body)
                lamps = tuple((int(a), int(b)) for a, b in pairs)
            v = (lamps, pos)
        elif f is Family.FREE_PRODUCT_23:
            v = "" if t == "e" else t
        else:
            if t == "e":
                v = ()
            else:
                parts = re.fullmatch(r"(g\d+)+", t) and re.findall(r"g(\d+)", t)
                if not parts:
                    raise EncodingError(f"tree literal must look like g1g2...: {t!r}")
                v = tuple(int(x) for x in parts)
    except ValueError as exc:
        if isinstance(exc, EncodingError):
            raise
        raise EncodingError(f"cannot parse vertex literal {t!r}") from exc
    check_vertex(spec, v)
    return v


def format_vertex(spec: GraphSpec, v: Vertex) -> str:
    f = spec.family
    if f in (Family.LATTICE, Family.LADDER_DIAG):
        return ",".join(map(str, v))
    if f is Family.LAMPLIGHTER_LINE:
        return f"pos={v[1]};lamps=" + ",".join(map(str, v[0]))
    if f is Family.LAMPLIGHTER_PLANE:
        return f"pos={v[1][0]},{v[1][1]};lamps=" + ",".join(f"({a},{b})" for a, b in v[0])
    if f is Family.FREE_PRODUCT_23:
        return v or "e"
    return "".join(f"g{x}" for x in v) or "e"


# --------------------------------------------------------- straight lines

def line_pairs(spec: GraphSpec, r: int) -> list[tuple[Vertex, Vertex]]:
    """Candidate endpoint pairs of a straight line through the origin at
    radius ``r`` (unverified guesses for antipodal searches)."""
    f = spec.family
    if f is Family.LATTICE:
        return [(tuple(r * x for x in g), tuple(-r * x for x in g)) for g in spec.gens]
    if f is Family.LAMPLIGHTER_LINE:
        return [(((), r), ((), -r))]
    if f is Family.LAMPLIGHTER_PLANE:
        return [(((), (r, 0)), ((), (-r, 0))), (((), (0, r)), ((), (0, -r)))]
    if f is Family.LADDER_DIAG:
        return [((r, 0), (-r, 0))]
    if f is Family.REGULAR_TREE:
        u = tuple(1 + i % 2 for i in range(r))
        # w^-1 starts with a letter other than u's last, so u*w^-1 is reduced
        w_inv = tuple(3 if i % 2 == 0 else 1 for i in range(r))
        return [(u, tuple(reversed(w_inv)))]
    u = "".join("ab"[i % 2] for i in range(r))
    w_inv = "".join(("ba" if u[-1] == "a" else "ab")[i % 2] for i in range(r))
    return [(u, _free23_inverse(w_inv))]
