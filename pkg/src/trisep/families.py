"""Generators for the named graph families.

Every builder validates the structural promises it is used for (3-regularity,
3-connectivity, cut shapes), so a misconstruction fails at generation time.
README sketches each family.
"""

from __future__ import annotations

from .connectivity import is_k_connected
from .errors import TriSepError
from .graph import Graph, components


def wheel(rim):
    """Hub 0 joined to a rim cycle 1..rim of length `rim` >= 3."""
    if rim < 3:
        raise TriSepError("wheel needs rim length >= 3")
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph(range(rim + 1), edges)


def k3m(m):
    """Complete bipartite K_{3,m}; left class is {0,1,2}."""
    if m < 0:
        raise TriSepError("m must be >= 0")
    return Graph(range(3 + m), [(i, 3 + j) for i in range(3) for j in range(m)])


def thickened_k3m(m):
    """K_{3,m} with the left class completed to a triangle (m=0: triangle)."""
    g = k3m(m)
    return g.with_edges([(0, 1), (0, 2), (1, 2)])


def hexgrid(p, q):
    """Toroidal hexagonal grid with q rows of p vertices (p >= 4, q even >= 4).

    Row cycles plus one vertical edge per vertex, alternating by parity;
    asserts 3-regularity and 3-connectivity.
    """
    if p < 4 or q < 4 or q % 2:
        raise TriSepError("hexgrid needs p >= 4 and even q >= 4")
    idx = lambda i, j: j * p + i
    edges = set()
    for j in range(q):
        for i in range(p):
            edges.add((idx(i, j), idx((i + 1) % p, j)))
            if (i + j) % 2 == 0:
                edges.add((idx(i, j), idx(i, (j + 1) % q)))
    g = Graph(range(p * q), edges)
    if any(g.degree(v) != 3 for v in g.vertices):
        raise TriSepError("hexgrid construction is not 3-regular")
    if not is_k_connected(g, 3):
        raise TriSepError("hexgrid construction is not 3-connected")
    return g


def grid3k(k):
    """3 x k grid with both end columns completed to triangles.

    The k-1 inter-column edge triples are non-atomic 3-edge-cuts; the builder
    asserts 3-connectivity and that each of those cuts is non-atomic.
    """
    if k < 3:
        raise TriSepError("grid3k needs k >= 3")
    idx = lambda i, j: j * 3 + i
    edges = []
    for j in range(k):
        edges += [(idx(0, j), idx(1, j)), (idx(1, j), idx(2, j))]
        if j + 1 < k:
            edges += [(idx(i, j), idx(i, j + 1)) for i in range(3)]
    edges += [(idx(0, 0), idx(2, 0)), (idx(0, k - 1), idx(2, k - 1))]
    g = Graph(range(3 * k), edges)
    if not is_k_connected(g, 3):
        raise TriSepError("grid3k construction is not 3-connected")
    for j in range(k - 1):
        cut = [(idx(i, j), idx(i, j + 1)) for i in range(3)]
        sides = components(g, removed_edges=cut)
        if len(sides) != 2 or min(len(s) for s in sides) < 2:
            raise TriSepError("inter-column cut is not a non-atomic 2-sided cut")
    return g


def grid3k_cuts(k):
    """The inter-column 3-edge-cuts of grid3k(k) as (edge-triple, left-side)."""
    idx = lambda i, j: j * 3 + i
    cuts = []
    for j in range(k - 1):
        triple = tuple((idx(i, j), idx(i, j + 1)) for i in range(3))
        left = frozenset(idx(i, jj) for i in range(3) for jj in range(j + 1))
        cuts.append((triple, left))
    return cuts


def necklace(t=3):
    """Chain of t K5's glued on shared vertex pairs, plus two degree-3 tops.

    Top vertex u attaches to two non-shared vertices of the first clique, top
    vertex w to two non-shared vertices of the last, and the edge uw closes
    the necklace.
    """
    if t < 2:
        raise TriSepError("necklace needs at least 2 cliques")
    cliques = []
    nxt = 0
    prev_pair = None
    for _ in range(t):
        fresh = 5 - (2 if prev_pair else 0)
        verts = (list(prev_pair) if prev_pair else []) + list(range(nxt, nxt + fresh))
        nxt += fresh
        cliques.append(verts)
        prev_pair = verts[-2:]
    edges = []
    for verts in cliques:
        edges += [(a, b) for i, a in enumerate(verts) for b in verts[i + 1 :]]
    u, w = nxt, nxt + 1
    first_free = [v for v in cliques[0] if v not in cliques[1]][:2]
    last_free = [v for v in cliques[-1] if v not in cliques[-2]][:2]
    edges += [(u, w), (u, first_free[0]), (u, first_free[1])]
    edges += [(w, last_free[0]), (w, last_free[1])]
    g = Graph(range(nxt + 2), edges)
    if not is_k_connected(g, 3):
        raise TriSepError("necklace construction is not 3-connected")
    return g


def figord(n):
    """K_n with three degree-3 attachments whose neighbourhoods are made
    independent, except for a single surviving edge at the first attachment.

    Needs n >= 9 so the three neighbourhoods {0,1,2}, {3,4,5}, {6,7,8} are
    disjoint.  Asserts 3-connectivity.
    """
    if n < 9:
        raise TriSepError("figord needs n >= 9 (three disjoint attachments)")
    edges = {(i, j) for i in range(n) for j in range(i + 1, n)}
    edges -= {(0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (6, 7), (6, 8), (7, 8)}
    v1, v2, v3 = n, n + 1, n + 2
    edges |= {(0, v1), (1, v1), (2, v1)}
    edges |= {(3, v2), (4, v2), (5, v2)}
    edges |= {(6, v3), (7, v3), (8, v3)}
    g = Graph(range(n + 3), edges)
    if not is_k_connected(g, 3):
        raise TriSepError("figord construction is not 3-connected")
    return g


def k10prism():
    """K10 with a fresh triangle matched onto a chosen triangle whose own
    edges are removed; the matching is a non-atomic 3-edge-cut."""
    edges = {(i, j) for i in range(10) for j in range(i + 1, 10)}
    edges -= {(0, 1), (0, 2), (1, 2)}
    edges |= {(10, 11), (10, 12), (11, 12), (0, 10), (1, 11), (2, 12)}
    g = Graph(range(13), edges)
    if not is_k_connected(g, 3):
        raise TriSepError("k10prism construction is not 3-connected")
    return g


def genwheel(rim, spokes=(), ys=()):
    """Concrete generalised wheel: rim cycle 1..rim, centre 0, optional
    spokes (rim positions joined to the centre) and optional Y-vertices
    (one per listed rim-edge index i, attached to rim edge (i, i+1) and the
    centre).  Validates minimum degree 3 and 3-connectivity.
    """
    if rim < 3:
        raise TriSepError("genwheel needs rim length >= 3")
    spokes = sorted(set(spokes))
    ys = sorted(set(ys))
    if any(not 0 <= i < rim for i in spokes) or any(not 0 <= i < rim for i in ys):
        raise TriSepError("spoke and Y indices must be rim positions")
    rimv = lambda i: 1 + (i % rim)
    edges = [(rimv(i), rimv(i + 1)) for i in range(rim)]
    edges += [(0, rimv(i)) for i in spokes]
    nxt = rim + 1
    for i in ys:
        edges += [(nxt, rimv(i)), (nxt, rimv(i + 1)), (nxt, 0)]
        nxt += 1
    g = Graph(range(nxt), edges)
    if any(g.degree(v) < 3 for v in g.vertices):
        raise TriSepError("generalised wheel must have minimum degree 3")
    if not is_k_connected(g, 3):
        raise TriSepError("genwheel construction is not 3-connected")
    return g


def k3m_with_triangles(m):
    """K_{3,m} on (X, Y) plus four triangles, each matched to Y.

    Y = {0,1,2}; X = {3..m+2}; triangles occupy the remaining ids.
    """
    if m < 0:
        raise TriSepError("m must be >= 0")
    edges = [(y, 3 + j) for y in range(3) for j in range(m)]
    nxt = 3 + m
    for _ in range(4):
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [(a, b), (a, c), (b, c), (a, 0), (b, 1), (c, 2)]
    g = Graph(range(nxt), edges)
    if not is_k_connected(g, 3):
        raise TriSepError("construction is not 3-connected")
    return g


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(range(10), outer + inner + spokes)


def cube():
    edges = []
    for v in range(8):
        for bit in range(3):
            w = v ^ (1 << bit)
            if v < w:
                edges.append((v, w))
    return Graph(range(8), edges)


def cycle(n):
    if n < 3:
        raise TriSepError("cycle needs n >= 3")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def complement(g):
    vs = list(g.vertices)
    edges = [
        (u, v)
        for i, u in enumerate(vs)
        for v in vs[i + 1 :]
        if not g.has_edge(u, v)
    ]
    return Graph(vs, edges)


def rook33():
    """K3 box K3, the 3x3 rook's graph (vertex-transitive, not a circulant)."""
    idx = lambda i, j: 3 * i + j
    edges = []
    for i in range(3):
        for j in range(3):
            for jj in range(j + 1, 3):
                edges.append((idx(i, j), idx(i, jj)))
                edges.append((idx(j, i), idx(jj, i)))
    return Graph(range(9), edges)


def circulant(n, connections):
    """Circulant graph C_n(S) for a set S of step sizes."""
    edges = set()
    for s in connections:
        s %= n
        if s == 0:
            continue
        for i in range(n):
            edges.add(tuple(sorted((i, (i + s) % n))))
    return Graph(range(n), edges)


_FAMILIES = {
    "wheel": (wheel, ("rim",)),
    "k3m": (k3m, ("m",)),
    "thickened-k3m": (thickened_k3m, ("m",)),
    "hexgrid": (hexgrid, ("p", "q")),
    "grid3k": (grid3k, ("k",)),
    "necklace": (necklace, ("t",)),
    "figord": (figord, ("n",)),
    "k10prism": (k10prism, ()),
    "genwheel": (genwheel, ("rim", "spokes", "ys")),
    "k3m-with-triangles": (k3m_with_triangles, ("m",)),
    "petersen": (petersen, ()),
    "cube": (cube, ()),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
}


def generate(family, *args, **kwargs):
    """Build a named family member, e.g. generate("wheel", rim=4)."""
    if family not in _FAMILIES:
        raise TriSepError(
            f"unknown family {family!r}; known: {', '.join(sorted(_FAMILIES))}"
        )
    fn, _ = _FAMILIES[family]
    return fn(*args, **kwargs)


def family_names():
    return sorted(_FAMILIES)


def family_params(family):
    return _FAMILIES[family][1]
