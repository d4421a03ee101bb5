"""Generation and ingestion of the graph instances the experiments run on."""

from __future__ import annotations

import functools
import json
import os
import random
from dataclasses import dataclass

from .errors import (
    BadHeader,
    BudgetExceeded,
    FilterUnsatisfiableTimeout,
    HamforgeError,
    TooSmall,
    TruncatedRecord,
    ValidationFailed,
)
from .plane_graph import (
    PlaneGraph,
    build,
    canonical_code,
    edge_key,
    is_k_connected,
    plane_graph_from_faces,
)

PLANAR_CODE_HEADER = b">>planar_code<<"


@dataclass(frozen=True)
class GeneratorBudgets:
    """Resource limits for the generators; overridable via a JSON config file."""

    max_n: int = 14
    flip_burn_in: int = 0  # 0 means the default of 10*n*n flips
    timeout_ms: int = 60_000


def load_budgets(path=None) -> GeneratorBudgets:
    """Budgets from a JSON config file (documented keys: max_n, flip_burn_in,
    timeout_ms).  Falls back to HAMFORGE_GENERATOR_CONFIG, then defaults."""
    path = path or os.environ.get("HAMFORGE_GENERATOR_CONFIG")
    if path and os.path.exists(path):
        with open(path) as fh:
            raw = json.load(fh)
        return GeneratorBudgets(**{k: raw[k] for k in raw
                                   if k in ("max_n", "flip_burn_in", "timeout_ms")})
    return GeneratorBudgets()


@dataclass(frozen=True)
class CorpusFilter:
    """Predicate describing which triangulations a run should keep."""

    min_connectivity: int = 3
    min_degree: int = 3
    max_separating_4cycles: int | None = None
    n_range: tuple[int, int] | None = None

    def __post_init__(self):
        if self.min_connectivity not in (3, 4, 5):
            raise ValueError("min_connectivity must be 3, 4 or 5")
        if self.n_range is not None and self.n_range[0] > self.n_range[1]:
            raise ValueError("empty n_range")

    def matches(self, g: PlaneGraph) -> bool:
        if self.n_range is not None and not (self.n_range[0] <= g.n <= self.n_range[1]):
            return False
        if g.min_degree() < self.min_degree:
            return False
        if not is_k_connected(g, self.min_connectivity):
            return False
        if self.max_separating_4cycles is not None:
            from .structures import separating_cycles
            if len(separating_cycles(g, 4)) > self.max_separating_4cycles:
                return False
        return True


# ---------------------------------------------------------------------------
# named instances
# ---------------------------------------------------------------------------

def double_wheel(n: int) -> PlaneGraph:
    """Cycle of length n-2 plus two apexes joined to every rim vertex.

    Rim vertices are 0..n-3, the apexes are n-2 and n-1.
    """
    if n < 6:
        raise TooSmall(f"double wheel needs n >= 6, got {n}")
    m = n - 2
    a, b = m, m + 1
    faces = []
    for i in range(m):
        j = (i + 1) % m
        faces.append((a, i, j))
        faces.append((b, j, i))
    return plane_graph_from_faces(faces)


def octahedron() -> PlaneGraph:
    return double_wheel(6)


def k4() -> PlaneGraph:
    return plane_graph_from_faces([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])


def icosahedron() -> PlaneGraph:
    """The unique 4-connected triangulation on 12 vertices with min degree 5."""
    top, bottom = 0, 11
    up = [1, 2, 3, 4, 5]
    lo = [6, 7, 8, 9, 10]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append((top, up[i], up[j]))
        faces.append((bottom, lo[j], lo[i]))
        faces.append((up[i], lo[i], up[j]))
        faces.append((up[j], lo[i], lo[j]))
    return plane_graph_from_faces(faces)


def cycle_graph(k: int) -> PlaneGraph:
    if k < 3:
        raise TooSmall("cycle needs k >= 3")
    rotation = [((v - 1) % k, (v + 1) % k) for v in range(k)]
    return build(rotation)


def wheel(k: int) -> PlaneGraph:
    """Hub k joined to a rim cycle 0..k-1; the rim bounds the outer face."""
    if k < 3:
        raise TooSmall("wheel rim needs k >= 3")
    hub = k
    faces = [(hub, i, (i + 1) % k) for i in range(k)]
    faces.append(tuple(reversed(range(k))))
    return plane_graph_from_faces(faces, outer=tuple(range(k)))


# ---------------------------------------------------------------------------
# planar_code
# ---------------------------------------------------------------------------

def write_planar_code(graphs, stream, header: bool = True) -> None:
    """Write graphs in planar_code (1-based, byte-per-value, 0-terminated)."""
    if header:
        stream.write(PLANAR_CODE_HEADER)
    for g in graphs:
        if g.n > 255:
            raise ValueError("planar_code byte encoding needs n <= 255")
        rec = bytearray([g.n])
        for v in range(g.n):
            rec.extend(w + 1 for w in g.rotation[v])
            rec.append(0)
        stream.write(bytes(rec))


def graph_to_planar_code(g: PlaneGraph) -> bytes:
    import io
    buf = io.BytesIO()
    write_planar_code([g], buf)
    return buf.getvalue()


def read_planar_code(stream):
    """Stream plane graphs from planar_code; constant memory per graph.

    The ASCII header is optional.  Raises BadHeader, TruncatedRecord, or
    ValidationFailed(index) wrapping the underlying build error.
    """
    first = stream.read(1)
    if first == b"":
        return
    if first == b">":
        rest = stream.read(len(PLANAR_CODE_HEADER) - 1)
        if first + rest != PLANAR_CODE_HEADER:
            raise BadHeader(f"unrecognized header {first + rest!r}")
        first = None
    index = 0
    while True:
        if first is not None:
            head, first = first, None
        else:
            head = stream.read(1)
        if head == b"":
            return
        n = head[0]
        if n == 0:
            raise ValidationFailed(index, "record with 0 vertices")
        rotation = []
        for _v in range(n):
            nbrs = []
            while True:
                byte = stream.read(1)
                if byte == b"":
                    raise TruncatedRecord(f"record {index} ended mid-rotation")
                val = byte[0]
                if val == 0:
                    break
                nbrs.append(val - 1)
            rotation.append(tuple(nbrs))
        try:
            g = build(rotation)
        except HamforgeError as exc:
            raise ValidationFailed(index, exc) from exc
        yield g
        index += 1


# ---------------------------------------------------------------------------
# exhaustive generation by vertex splitting
# ---------------------------------------------------------------------------

def split_vertex(g: PlaneGraph, v: int, i: int, j: int) -> PlaneGraph:
    """Split v into an adjacent pair, pivoting at rotation positions i < j.

    The neighbors from position i to j (clockwise) go to the reused id v, the
    rest to a new vertex n; both keep the two pivots.  Faces stay triangles.
    """
    rot = g.rotation[v]
    d = len(rot)
    if not (0 <= i < j < d):
        raise ValueError("need 0 <= i < j < deg(v)")
    w_i, w_j = rot[i], rot[j]
    new = g.n
    old_faces = [f for f in g.faces if v not in f]
    arc_a = [rot[k] for k in range(i, j + 1)]              # v keeps these
    arc_b = [rot[k % d] for k in range(j, i + d + 1)]      # new vertex gets these
    new_faces = list(old_faces)
    for a, b in zip(arc_a, arc_a[1:]):
        new_faces.append((v, a, b))
    for a, b in zip(arc_b, arc_b[1:]):
        new_faces.append((new, a, b))
    new_faces.append((v, new, w_i))
    new_faces.append((new, v, w_j))
    return plane_graph_from_faces(new_faces)


def _all_splits(g: PlaneGraph):
    for v in range(g.n):
        d = g.degrees[v]
        for i in range(d):
            for j in range(i + 1, d):
                yield v, i, j


@functools.lru_cache(maxsize=None)
def _triangulation_level(n: int) -> tuple[PlaneGraph, ...]:
    """All planar triangulations on n vertices up to isomorphism."""
    if n < 4:
        raise TooSmall("triangulations start at n = 4")
    if n == 4:
        return (k4(),)
    out = {}
    for parent in _triangulation_level(n - 1):
        for v, i, j in _all_splits(parent):
            child = split_vertex(parent, v, i, j)
            key = canonical_code(child)
            if key not in out:
                out[key] = child
    return tuple(out[k] for k in sorted(out))


def enumerate_triangulations(n: int, flt: CorpusFilter | None = None,
                             budgets: GeneratorBudgets | None = None):
    """All planar triangulations on n vertices up to isomorphism, filtered.

    Exhaustive by repeated vertex splitting from K4 with canonical-form
    rejection; deterministic order (sorted by canonical code).
    """
    budgets = budgets or load_budgets()
    if n > budgets.max_n:
        raise BudgetExceeded(f"n={n} exceeds max_n={budgets.max_n}")
    for g in _triangulation_level(n):
        if flt is None or flt.matches(g):
            yield g


# ---------------------------------------------------------------------------
# random generation by diagonal flips
# ---------------------------------------------------------------------------

def flippable_edges(g: PlaneGraph) -> list[tuple[int, int]]:
    out = []
    for u, v in sorted(g.edge_set):
        if g.degrees[u] <= 3 or g.degrees[v] <= 3:
            continue
        x, y = _flip_partners(g, u, v)
        if x != y and not g.has_edge(x, y):
            out.append((u, v))
    return out


def _flip_partners(g: PlaneGraph, u: int, v: int):
    f1 = g.faces[g.face_of(u, v)]
    f2 = g.faces[g.face_of(v, u)]
    x = next(w for w in f1 if w not in (u, v))
    y = next(w for w in f2 if w not in (u, v))
    return x, y


def flip_edge(g: PlaneGraph, u: int, v: int) -> PlaneGraph:
    """Replace diagonal uv of its surrounding quadrilateral by the other one."""
    x, y = _flip_partners(g, u, v)
    if x == y or g.has_edge(x, y):
        raise ValueError(f"edge {u}-{v} is not flippable")
    keep = [f for f in g.faces
            if set(f) != {u, v, x} and set(f) != {u, v, y}]
    keep += [(u, x, y), (v, y, x)]
    return plane_graph_from_faces(keep)


def random_triangulation(n: int, seed: int, flt: CorpusFilter | None = None,
                         budgets: GeneratorBudgets | None = None) -> PlaneGraph:
    """Seeded random triangulation: burn-in flips from the double wheel, then
    rejection until the filter passes."""
    budgets = budgets or load_budgets()
    rng = random.Random(seed)
    g = double_wheel(n) if n >= 6 else next(enumerate_triangulations(n))
    burn = budgets.flip_burn_in or 10 * n * n
    attempts = max(200, burn)

    def step(g):
        cand = flippable_edges(g)
        if not cand:
            return g
        u, v = rng.choice(cand)
        return flip_edge(g, u, v)

    for _ in range(burn):
        g = step(g)
    for _ in range(attempts):
        if flt is None or flt.matches(g):
            return g
        g = step(g)
    raise FilterUnsatisfiableTimeout(
        f"no triangulation matching {flt} after {attempts} proposals")


# ---------------------------------------------------------------------------
# engineered fixtures: pockets behind separating 4-cycles at minimum degree 5
# ---------------------------------------------------------------------------

def _banana_plug_faces(square, ids):
    """Triangulated disc on a square boundary whose 8 interior vertices all
    have degree 5: a hexagon ring around two adjacent center vertices."""
    a, b, c, d = square
    r1, r2, r3, r4, r5, r6, z1, z2 = ids
    return [
        (a, b, r1), (b, c, r2), (c, d, r4), (d, a, r5),
        (a, r5, r6), (a, r6, r1), (b, r1, r2), (c, r2, r3), (c, r3, r4),
        (d, r4, r5),
        (z1, r6, r1), (z1, r1, r2), (z1, r2, r3), (z1, r3, z2),
        (z2, r3, r4), (z2, r4, r5), (z2, r5, r6), (z2, r6, z1),
    ]


def _annulus_with_y_faces(outer, inner, y):
    """Square-to-square annulus carrying one extra vertex adjacent to three
    outer corners: the diamond seed of the tower."""
    a, b, c, d = outer
    a2, b2, c2, d2 = inner
    return [
        (y, d, a), (y, a, b),
        (y, b, a2), (b, b2, a2), (b, c, b2), (c, c2, b2),
        (c, d, c2), (d, d2, c2), (d, y, d2), (y, a2, d2),
    ]


def _antiprism_faces(outer, inner):
    a, b, c, d = outer
    a2, b2, c2, d2 = inner
    return [
        (a, b, a2), (b, b2, a2), (b, c, b2), (c, c2, b2),
        (c, d, c2), (d, d2, c2), (d, a, d2), (a, a2, d2),
    ]


def telescope_tower(levels: int = 3):
    """A minimum-degree-5 4-connected triangulation with ``levels`` nested
    separating 4-cycles, each with a vertex adjacent to exactly three of its
    vertices.

    Returns (graph, star, squares): ``star[j]`` is the seed vertex of level
    j and ``squares[j]`` its 4-cycle, ordered outermost first.
    """
    if levels < 1:
        raise TooSmall("tower needs at least one level")
    counter = [0]

    def take(k):
        out = list(range(counter[0], counter[0] + k))
        counter[0] += k
        return out

    squares = [tuple(take(4))]
    faces = _banana_plug_faces(squares[0], take(8))
    star = []
    for _ in range(levels):
        y = take(1)[0]
        inner = tuple(take(4))
        faces += _annulus_with_y_faces(squares[-1], inner, y)
        star.append(y)
        squares.append(inner)
    faces += _banana_plug_faces(squares[-1], take(8))
    g = plane_graph_from_faces(faces)
    return g, star, squares


def two_pocket_worm():
    """A minimum-degree-5 4-connected triangulation with two separating
    4-cycles whose diamond pockets have disjoint interiors.

    Returns (graph, star, squares) with one seed vertex per pocket.
    """
    counter = [0]

    def take(k):
        out = list(range(counter[0], counter[0] + k))
        counter[0] += k
        return out

    q_a, q_b = tuple(take(4)), tuple(take(4))
    faces = list(_antiprism_faces(q_a, q_b))
    star = []
    squares = []
    for q in (q_a, q_b):
        y = take(1)[0]
        inner = tuple(take(4))
        faces += _annulus_with_y_faces(q, inner, y)
        faces += _banana_plug_faces(inner, take(8))
        star.append(y)
        squares.append(q)
    g = plane_graph_from_faces(faces)
    return g, star, squares
