"""Certified independent sets and the edge-deletion families built from them.

The pipeline: largest color class of an exact 4-coloring of the low-degree
vertices, then greedy saturation filters (4-cycles, 5-cycles,
diamond-6-cycles), then removal of vertices on or 3-adjacent to separating
4-cycles.  Every flag on a certificate is re-verifiable by a fresh scan;
nothing trusts incremental bookkeeping.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import (
    ColoringTimeout,
    FourConnectivityLost,
    HypothesisViolated,
    MinDegreeViolated,
    SearchExhausted,
    SNotIndependent,
)
from .ham_enum import HamFamily, first_ham_cycle, search_budget
from .plane_graph import PlaneGraph, edge_key, is_k_connected
from .structures import (
    Cycle,
    DiamondCert,
    PairCert,
    check_independent,
    enumerate_cycles,
    find_diamonds,
    max_common_neighborhood_pair,
    separating_cycles,
)

FLAG_NO_SAT_4CYCLE = "no_sat_4cycle"
FLAG_NO_SAT_5CYCLE = "no_sat_5cycle"
FLAG_NO_SAT_DIAMOND6 = "no_sat_diamond6"
FLAG_NO_VERTEX_ON_SEP4 = "no_vertex_on_sep4cycle"
FLAG_NO_VERTEX_3ADJ_SEP4 = "no_vertex_3adj_sep4cycle"
ALL_FLAGS = (FLAG_NO_SAT_4CYCLE, FLAG_NO_SAT_5CYCLE, FLAG_NO_SAT_DIAMOND6,
             FLAG_NO_VERTEX_ON_SEP4, FLAG_NO_VERTEX_3ADJ_SEP4)


@dataclass(frozen=True)
class Thresholds:
    """The constants of the counting machinery, kept exact as rationals."""

    five_cycle_divisor: int = 541
    diamond_divisor: int = 301
    four_cycle_divisor: int = 108
    common_neighborhood_divisor: int = 9
    color_class_divisor: int = 12
    t: int | None = None

    @property
    def c1(self) -> Fraction:
        return Fraction(1, 108 * 16 * 541 * 301 * 2)

    @staticmethod
    def log_threshold(n: int) -> int:
        """floor(16 * log2 n), the common-neighborhood cut in the few-
        separating-4-cycles regime."""
        return math.floor(16 * math.log2(n))


@dataclass(frozen=True)
class IndSetCert:
    """An independent set with its verified properties.

    ``flags`` holds only property names that have been established; every
    one can be re-checked against the graph by :func:`verify_cert`.
    """

    vertices: tuple[int, ...]
    max_degree: int
    flags: frozenset[str] = frozenset()
    provenance: tuple[str, ...] = ()
    stats: tuple[tuple[str, str], ...] = ()

    def __len__(self):
        return len(self.vertices)

    def with_stage(self, vertices, flag, stage, ratio=None):
        stats = self.stats
        if ratio is not None:
            stats = stats + ((stage + "_ratio", ratio),)
        return IndSetCert(
            vertices=tuple(sorted(vertices)),
            max_degree=self.max_degree,
            flags=self.flags | {flag},
            provenance=self.provenance + (stage,),
            stats=stats,
        )

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "max_degree": self.max_degree,
            "flags": sorted(self.flags),
            "provenance": list(self.provenance),
            "stats": dict(self.stats),
        }


# ---------------------------------------------------------------------------
# verification (fresh scans, no bookkeeping)
# ---------------------------------------------------------------------------

def sat_pairs_4cycle(g: PlaneGraph) -> set[tuple[int, int]]:
    """Non-adjacent pairs lying together on some 4-cycle."""
    out = set()
    for c in enumerate_cycles(g, 4):
        for u, v in itertools.combinations(sorted(c.vertices), 2):
            if not g.has_edge(u, v):
                out.add((u, v))
    return out


def sat_pairs_5cycle(g: PlaneGraph) -> set[tuple[int, int]]:
    out = set()
    for c in enumerate_cycles(g, 5):
        for u, v in itertools.combinations(sorted(c.vertices), 2):
            if not g.has_edge(u, v):
                out.add((u, v))
    return out


def flag_holds(g: PlaneGraph, s, flag: str) -> bool:
    """Re-verify one certificate flag by scanning all relevant objects."""
    s = set(s)
    if flag == FLAG_NO_SAT_4CYCLE:
        return all(len(s & set(c.vertices)) != 2 for c in enumerate_cycles(g, 4))
    if flag == FLAG_NO_SAT_5CYCLE:
        return all(len(s & set(c.vertices)) != 2 for c in enumerate_cycles(g, 5))
    if flag == FLAG_NO_SAT_DIAMOND6:
        return all(len(s & set(d.crucial)) < 3 for d in find_diamonds(g, "diamond6"))
    if flag == FLAG_NO_VERTEX_ON_SEP4:
        return all(not (s & set(c.vertices)) for c in separating_cycles(g, 4))
    if flag == FLAG_NO_VERTEX_3ADJ_SEP4:
        return all(
            all(len(g.adj[v] & set(c.vertices)) < 3 for v in s - set(c.vertices))
            for c in separating_cycles(g, 4))
    raise ValueError(f"unknown flag {flag!r}")


def verify_cert(g: PlaneGraph, cert: IndSetCert) -> None:
    """Raise unless the set is independent and every claimed flag holds."""
    check_independent(g, cert.vertices)
    if cert.vertices and max(g.degrees[v] for v in cert.vertices) > cert.max_degree:
        raise SNotIndependent("recorded max_degree is wrong")
    for flag in cert.flags:
        if not flag_holds(g, cert.vertices, flag):
            raise HypothesisViolated(flag, "claimed flag fails a fresh scan")


# ---------------------------------------------------------------------------
# exact four-coloring (DSATUR-ordered backtracking)
# ---------------------------------------------------------------------------

def four_color(g: PlaneGraph, vertices, budget: int = 2_000_000) -> dict[int, int]:
    """Proper 4-coloring of the induced subgraph on ``vertices``.

    Feasible for any planar input; a budget overrun is therefore an
    operational failure (ColoringTimeout), never a certification.
    """
    verts = sorted(vertices)
    vset = set(verts)
    nbrs = {v: sorted(g.adj[v] & vset) for v in verts}
    color: dict[int, int] = {}
    nodes = 0

    def pick():
        best = None
        for v in verts:
            if v in color:
                continue
            sat = len({color[w] for w in nbrs[v] if w in color})
            key = (-sat, -len(nbrs[v]), v)
            if best is None or key < best[0]:
                best = (key, v)
        return best[1]

    def solve():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ColoringTimeout(f"4-coloring exceeded {budget} nodes")
        if len(color) == len(verts):
            return True
        v = pick()
        used = {color[w] for w in nbrs[v] if w in color}
        for c in range(4):
            if c in used:
                continue
            color[v] = c
            if solve():
                return True
            del color[v]
        return False

    if not solve():
        raise AssertionError("planar subgraph refused a 4-coloring")
    return color


def low_degree_independent_set(g: PlaneGraph, budget: int = 2_000_000) -> IndSetCert:
    """Largest color class of an exact 4-coloring of the degree<=6 vertices.

    For a 4-connected triangulation at least n/3 vertices have degree at
    most 6, so the class has size >= n/12.
    """
    if not g.is_triangulation or not is_k_connected(g, 4):
        raise HypothesisViolated("four_connected_triangulation")
    low = [v for v in range(g.n) if g.degrees[v] <= 6]
    coloring = four_color(g, low, budget)
    classes: dict[int, list[int]] = {}
    for v, c in coloring.items():
        classes.setdefault(c, []).append(v)
    best = max(classes.values(), key=lambda vs: (len(vs), [-v for v in sorted(vs)]),
               default=[])
    best = tuple(sorted(best))
    if 12 * len(best) < g.n:
        raise AssertionError("four-color class below the n/12 floor")
    return IndSetCert(vertices=best,
                      max_degree=max((g.degrees[v] for v in best), default=0),
                      provenance=("low_degree_four_coloring",))


# ---------------------------------------------------------------------------
# saturation filters
# ---------------------------------------------------------------------------

def filter_saturation(g: PlaneGraph, cert: IndSetCert, kind: str) -> IndSetCert:
    """Greedy maximal subset saturating no object of the kind.

    Vertices are processed in ascending id; a vertex is kept iff it creates
    no saturated object together with the kept ones.  Reports the achieved
    ratio; the published 1/541 and 1/301 extraction ratios are reported,
    never asserted.
    """
    check_independent(g, cert.vertices)
    if kind == "4cycle":
        pairs = sat_pairs_4cycle(g)
        flag = FLAG_NO_SAT_4CYCLE
    elif kind == "5cycle":
        pairs = sat_pairs_5cycle(g)
        flag = FLAG_NO_SAT_5CYCLE
    elif kind == "diamond6":
        return _filter_diamond6(g, cert)
    else:
        raise ValueError(f"unknown saturation kind {kind!r}")
    kept: list[int] = []
    for v in cert.vertices:
        if all(edge_key(u, v) not in pairs for u in kept):
            kept.append(v)
    ratio = f"{len(kept)}/{len(cert.vertices)}" if cert.vertices else "1/1"
    return cert.with_stage(kept, flag, f"greedy_no_sat_{kind}", ratio)


def _filter_diamond6(g: PlaneGraph, cert: IndSetCert) -> IndSetCert:
    diamonds = find_diamonds(g, "diamond6")
    kept: list[int] = []
    for v in cert.vertices:
        trial = set(kept) | {v}
        if all(len(trial & set(d.crucial)) < 3 for d in diamonds):
            kept.append(v)
    ratio = f"{len(kept)}/{len(cert.vertices)}" if cert.vertices else "1/1"
    return cert.with_stage(kept, FLAG_NO_SAT_DIAMOND6, "greedy_no_sat_diamond6", ratio)


# ---------------------------------------------------------------------------
# the special-set pipelines
# ---------------------------------------------------------------------------

def _strip_separating_4cycles(g: PlaneGraph, cert: IndSetCert) -> IndSetCert:
    """Drop vertices on, or 3-adjacent to, any separating 4-cycle."""
    seps = separating_cycles(g, 4)
    bad = set()
    for c in seps:
        cv = set(c.vertices)
        bad |= set(cert.vertices) & cv
        bad |= {v for v in cert.vertices
                if v not in cv and len(g.adj[v] & cv) >= 3}
    kept = [v for v in cert.vertices if v not in bad]
    out = cert.with_stage(kept, FLAG_NO_VERTEX_ON_SEP4, "strip_sep4",
                          f"{len(kept)}/{len(cert.vertices)}" if cert.vertices else "1/1")
    return replace(out, flags=out.flags | {FLAG_NO_VERTEX_3ADJ_SEP4})


def special_set(g: PlaneGraph, t: int | None = None):
    """Either a high-common-neighborhood pair or a fully filtered set.

    Branch (i) fires when some non-adjacent pair has more than t common
    neighbors (default t = floor(16 log2 n)); otherwise the full pipeline
    runs and all five flags are set (vacuously on an empty set).  Size
    guarantees are reported, never asserted: the constants are vacuous at
    this scale.
    """
    if t is None:
        t = Thresholds.log_threshold(g.n)
    pair = max_common_neighborhood_pair(g)
    if pair is not None and pair.size() > t:
        return pair
    cert = low_degree_independent_set(g)
    cert = filter_saturation(g, cert, "4cycle")
    cert = filter_saturation(g, cert, "5cycle")
    cert = filter_saturation(g, cert, "diamond6")
    cert = _strip_separating_4cycles(g, cert)
    verify_cert(g, cert)
    return cert


def special_set_mindeg5(g: PlaneGraph, t: int):
    """The minimum-degree-5 variant: saturation filters only, parameter t.

    Vertices on separating 4-cycles stay in: downstream machinery grows
    diamonds from exactly those.
    """
    if g.min_degree() < 5:
        raise MinDegreeViolated(f"min degree {g.min_degree()} < 5")
    if t < 2:
        raise ValueError("t must be >= 2")
    pair = max_common_neighborhood_pair(g)
    if pair is not None and pair.size() > t:
        return pair
    cert = low_degree_independent_set(g)
    cert = filter_saturation(g, cert, "4cycle")
    cert = filter_saturation(g, cert, "5cycle")
    cert = filter_saturation(g, cert, "diamond6")
    verify_cert(g, cert)
    return cert


# ---------------------------------------------------------------------------
# edge-deletion families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeFamily:
    """One choice of exactly one incident edge per certified vertex."""

    cert: IndSetCert
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if len(self.edges) != len(self.cert.vertices):
            raise ValueError("family must have exactly one edge per vertex")


def check_family_hypotheses(g: PlaneGraph, cert: IndSetCert) -> None:
    """The hypotheses under which G-F stays 4-connected, freshly verified."""
    check_independent(g, cert.vertices)
    if g.n < 6:
        raise HypothesisViolated("n_at_least_6")
    if any(g.degrees[v] > 6 for v in cert.vertices):
        raise HypothesisViolated("degree_at_most_6")
    for flag in (FLAG_NO_SAT_4CYCLE, FLAG_NO_SAT_5CYCLE, FLAG_NO_SAT_DIAMOND6):
        if not flag_holds(g, cert.vertices, flag):
            raise HypothesisViolated(flag)
    if g.min_degree() < 5 and not flag_holds(g, cert.vertices, FLAG_NO_VERTEX_ON_SEP4):
        raise HypothesisViolated(FLAG_NO_VERTEX_ON_SEP4)
    if not flag_holds(g, cert.vertices, FLAG_NO_VERTEX_3ADJ_SEP4):
        raise HypothesisViolated(FLAG_NO_VERTEX_3ADJ_SEP4)


def edge_families(g: PlaneGraph, cert: IndSetCert):
    """All prod(deg(v)) edge families in deterministic order."""
    check_family_hypotheses(g, cert)
    choice_lists = [[edge_key(v, w) for w in g.rotation[v] if True]
                    for v in cert.vertices]
    choice_lists = [sorted(set(c)) for c in choice_lists]
    for combo in itertools.product(*choice_lists):
        yield EdgeFamily(cert=cert, edges=frozenset(combo))


def family_count(g: PlaneGraph, cert: IndSetCert) -> int:
    out = 1
    for v in cert.vertices:
        out *= g.degrees[v]
    return out


def guaranteed_family_floor(k: int) -> int:
    """ceil((3/2)^k), the promised number of distinct Hamiltonian cycles."""
    return -((-3 ** k) // 2 ** k)


def ham_family_from_edge_families(g: PlaneGraph, cert: IndSetCert,
                                  cap: int | None = None,
                                  budget=None) -> HamFamily:
    """One Hamiltonian cycle per family F, after checking G-F is 4-connected.

    A connectivity failure is a counterexample event: it aborts with the
    offending family serialized in the exception.  Uncapped runs assert the
    ceil((3/2)^|S|) floor on the deduplicated family size.
    """
    budget = search_budget(budget)
    fam = HamFamily(g)
    processed = 0
    for family in edge_families(g, cert):
        if cap is not None and processed >= cap:
            break
        processed += 1
        reduced = g.delete_edges(family.edges)
        if not is_k_connected(reduced, 4):
            raise FourConnectivityLost(family.edges)
        cycle = first_ham_cycle(reduced, budget=budget)
        if cycle is None:
            raise SearchExhausted(
                f"4-connected planar graph without a Hamiltonian cycle: F={sorted(family.edges)}")
        fam.add(cycle, f"edge_family:{sorted(family.edges)}")
    if cap is None and len(fam) < guaranteed_family_floor(len(cert.vertices)):
        raise AssertionError(
            f"family size {len(fam)} below the (3/2)^{len(cert.vertices)} floor")
    fam.log.append({"branch": "edge_families", "families": processed,
                    "distinct": len(fam), "floor": guaranteed_family_floor(len(cert.vertices))})
    return fam
