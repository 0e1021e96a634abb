"""Recognition of the target shapes: wheels, (thickened) K_{3,m}, concrete
generalised wheels, and the three 4-connectivity grades."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .connectivity import is_k_connected
from .graph import Graph
from .triseps import _is_3con, _mask_flags, analyze


def is_cycle_graph(g):
    return (
        g.n >= 3
        and g.m == g.n
        and all(g.degree(v) == 2 for v in g.vertices)
        and kernels.is_connected(g.adj_masks, g.full_mask)
    )


def is_complete(g):
    return g.m == g.n * (g.n - 1) // 2


def recognize_wheel(g):
    """(True, hub, rim cycle) if g is a wheel: a vertex adjacent to all
    others whose removal leaves a cycle."""
    for v in g.vertices:
        if g.degree(v) != g.n - 1:
            continue
        rest = g.without_vertices([v])
        if is_cycle_graph(rest):
            return True, v, _cycle_order(rest)
    return False, None, None


def _cycle_order(g):
    start = g.vertices[0]
    order = [start]
    prev = None
    cur = start
    while True:
        nxts = [w for w in sorted(g.neighbors(cur)) if w != prev]
        nxt = nxts[0]
        if nxt == start:
            return tuple(order)
        order.append(nxt)
        prev, cur = cur, nxt


def recognize_thickened_k3m(g):
    """(True, m, triangle) if g is K_{3,m} with the 3-class made complete."""
    if g.n < 3:
        return False, None, None
    for tri in combinations(sorted(g.vertices), 3):
        a, b, c = tri
        if not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
            continue
        rest = set(g.vertices) - set(tri)
        if all(g.neighbors(v) == frozenset(tri) for v in rest):
            return True, len(rest), tri
    return False, None, None


def recognize_k3m(g):
    """(True, m, class3) if g is the complete bipartite graph K_{3,m}."""
    if g.n < 3:
        return False, None, None
    for tri in combinations(sorted(g.vertices), 3):
        a, b, c = tri
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            continue
        rest = set(g.vertices) - set(tri)
        if all(g.neighbors(v) == frozenset(tri) for v in rest) and all(
            g.neighbors(t) == frozenset(rest) for t in tri
        ):
            return True, len(rest), tri
    return False, None, None


@dataclass(frozen=True)
class GeneralisedWheel:
    centre: int
    rim: tuple
    spokes: frozenset
    y_vertices: frozenset


def recognize_generalised_wheel(g):
    """Concrete generalised-wheel recognition.

    Searches for a centre v, a rim cycle on the non-Y vertices, and one
    optional Y-vertex per rim edge (degree 3, attached to both ends of the
    edge and to v), with minimum degree three.  Returns (True, data) or
    (False, None).
    """
    if g.n < 4 or any(g.degree(v) < 3 for v in g.vertices):
        return False, None
    for v in sorted(g.vertices):
        cands = [
            w
            for w in g.vertices
            if w != v
            and g.degree(w) == 3
            and v in g.neighbors(w)
            and g.has_edge(*sorted(g.neighbors(w) - {v}))
        ]
        # Y-candidates may also be rim vertices on a short rim; try subsets,
        # largest first (genuine Y-vertices are never on the rim).
        for r in range(len(cands), -1, -1):
            for ys in combinations(cands, r):
                data = _check_genwheel(g, v, frozenset(ys))
                if data is not None:
                    return True, data
    return False, None


def _check_genwheel(g, v, ys):
    rim_vertices = set(g.vertices) - {v} - ys
    if len(rim_vertices) < 3:
        return None
    rim_graph = g.subgraph(rim_vertices)
    rim_edges = {e for e in rim_graph.edges}
    # rim must be an induced cycle once Y-attachment chords are kept:
    # in a concrete generalised wheel the rim edge under a Y exists in g.
    if not is_cycle_graph(rim_graph):
        return None
    rim = _cycle_order(rim_graph)
    rim_edge_set = set()
    for i, x in enumerate(rim):
        y = rim[(i + 1) % len(rim)]
        rim_edge_set.add((min(x, y), max(x, y)))
    if rim_edge_set != rim_edges:
        return None
    used_edges = set()
    for w in ys:
        att = sorted(g.neighbors(w) - {v})
        e = (att[0], att[1])
        if e not in rim_edge_set or e in used_edges:
            return None
        used_edges.add(e)
    spokes = frozenset(w for w in rim if g.has_edge(v, w))
    expected = set(rim_edge_set)
    expected |= {(min(v, w), max(v, w)) for w in spokes}
    for w in ys:
        for u in sorted(g.neighbors(w)):
            expected.add((min(w, u), max(w, u)))
    if expected != set(g.edges):
        return None
    return GeneralisedWheel(centre=v, rim=rim, spokes=spokes, y_vertices=ys)


def _three_separations(g):
    """Mask pairs of the genuine (vertex-separator) 3-separations."""
    ana = analyze(g)
    return [p for p in ana.pairs if (p[0] & p[1]).bit_count() == 3]


def _is_claw(g, vertices):
    if len(vertices) != 4:
        return False
    sub = g.subgraph(vertices)
    return sub.m == 3 and sorted(sub.degree(v) for v in sub.vertices) == [1, 1, 1, 3]


@dataclass(frozen=True)
class ConnectivityGrades:
    internally_4: bool
    quasi_4: bool
    essentially_4: bool


def is_quasi_4_connected(g):
    """3-connected, more than four vertices, and every 3-separation has a
    side with at most four vertices."""
    if g.n <= 4 or not _is_3con(g):
        return False
    for a, b in _three_separations(g):
        if a.bit_count() > 4 and b.bit_count() > 4:
            return False
    return True


def is_internally_4_connected(g):
    """3-connected, every 3-separation has a claw-inducing side, and g is
    neither K4 nor K_{3,3}."""
    if not _is_3con(g):
        return False
    if is_complete(g) and g.n == 4:
        return False
    if recognize_k3m(g)[0] and g.n == 6:
        return False
    for a, b in _three_separations(g):
        if not _is_claw(g, g.set_of(a)) and not _is_claw(g, g.set_of(b)):
            return False
    return True


def is_essentially_4_connected(g):
    """3-connected, not K4, and every nontrivial strong tri-separation has a
    3-edge separator with a side inducing a triangle."""
    if not _is_3con(g):
        return False
    if is_complete(g) and g.n == 4:
        return False
    ana = analyze(g)
    for i, (a, b) in enumerate(ana.pairs):
        if not (ana.tri[i] and ana.strong[i] and ana.nontrivial[i]):
            continue
        if (a & b) != 0:
            return False
        side_a = g.set_of(a)
        side_b = g.set_of(b)
        ok = False
        for side in (side_a, side_b):
            if len(side) == 3:
                sub = g.subgraph(side)
                if sub.m == 3:
                    ok = True
        if not ok:
            return False
    return True


def connectivity_grades(g):
    """The three 4-connectivity grades; all false for non-3-connected input."""
    if not _is_3con(g):
        return ConnectivityGrades(False, False, False)
    return ConnectivityGrades(
        internally_4=is_internally_4_connected(g),
        quasi_4=is_quasi_4_connected(g),
        essentially_4=is_essentially_4_connected(g),
    )
