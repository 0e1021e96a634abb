"""Tri-separation calculus: classification flags, reduction, strengthening,
external tri-connectivity, the crossing dichotomy, and the canonical set of
totally-nested nontrivial tri-separations.

Everything here presumes a 3-connected host graph (asserted); exhaustive
enumeration is the decision procedure for total nestedness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .connectivity import count_disjoint_paths, internally_disjoint_paths, is_k_connected
from .errors import (
    ClassificationError,
    InvalidSeparationError,
    NotConnectedEnoughError,
    TriSepError,
)
from .separations import (
    MixedSeparation,
    enum_budget,
    separation_sort_key,
    separator_of,
    corner_diagram,
)


@lru_cache(maxsize=200000)
def _is_3con(g):
    return is_k_connected(g, 3)


def require_three_connected(g):
    if not _is_3con(g):
        raise NotConnectedEnoughError("operation requires a 3-connected graph")


@dataclass(frozen=True)
class TriFlags:
    is_tri: bool
    is_trivial: bool
    is_nontrivial: bool
    is_strong: bool
    is_half_connected: bool


def _mask_flags(g, a, b):
    """(tri, nontrivial, strong, half_connected) for the mask pair (a, b)."""
    adj = g.adj_masks
    sepv = a & b
    tri = True
    m = sepv
    while m:
        bit = m & -m
        m ^= bit
        av = adj[bit.bit_length() - 1]
        if (av & a).bit_count() < 2 or (av & b).bit_count() < 2:
            tri = False
            break
    nontrivial = kernels.has_cycle(adj, a) and kernels.has_cycle(adj, b)
    strong = True
    m = sepv
    while m:
        bit = m & -m
        m ^= bit
        if adj[bit.bit_length() - 1].bit_count() < 4:
            strong = False
            break
    half = kernels.is_connected(adj, a & ~b) or kernels.is_connected(adj, b & ~a)
    return tri, nontrivial, strong, half


def tri_flags(g, s):
    """All five flags of a mixed 3-separation of a 3-connected graph."""
    require_three_connected(g)
    sep = separator_of(g, s)
    if sep.order != 3:
        raise InvalidSeparationError("tri_flags expects a separation of order 3")
    a, b = g.mask_of(s.side_a), g.mask_of(s.side_b)
    tri, nontrivial, strong, half = _mask_flags(g, a, b)
    return TriFlags(
        is_tri=tri,
        is_trivial=not nontrivial,
        is_nontrivial=nontrivial,
        is_strong=strong,
        is_half_connected=half,
    )


def reduction(g, s):
    """The reduction of a mixed 3-separation: every separator vertex with a
    deficient side is deleted from that side, turning it into an edge of the
    separator."""
    require_three_connected(g)
    sep = separator_of(g, s)
    if sep.order != 3:
        raise InvalidSeparationError("reduction expects a separation of order 3")
    drop_a, drop_b = set(), set()
    for v in sep.vertices:
        in_a = len(g.neighbors(v) & s.side_a)
        in_b = len(g.neighbors(v) & s.side_b)
        if in_a < 2:
            drop_a.add(v)
        elif in_b < 2:
            drop_b.add(v)
    out = MixedSeparation(s.side_a - drop_a, s.side_b - drop_b)
    flags = tri_flags(g, out)
    if not flags.is_tri:
        raise TriSepError("reduction did not produce a tri-separation")
    return out


def strengthening(g, s, keep_edge=None):
    """A strengthening: delete from side A the degree-3 separator vertices
    with a unique strict-A neighbour, then reduce.  The result is a strong
    tri-separation; with keep_edge (ends in the separator) both ends land
    in side B of the result."""
    require_three_connected(g)
    sep = separator_of(g, s)
    if sep.order != 3:
        raise InvalidSeparationError("strengthening expects order 3")
    if keep_edge is not None:
        u, v = keep_edge
        if not g.has_edge(u, v) or u not in sep.vertices or v not in sep.vertices:
            raise InvalidSeparationError(
                "keep_edge must be a graph edge with both ends in the separator"
            )
    strict_a = s.side_a - s.side_b
    drop = {
        v
        for v in sep.vertices
        if g.degree(v) == 3 and len(g.neighbors(v) & strict_a) == 1
    }
    out = reduction(g, MixedSeparation(s.side_a - drop, s.side_b))
    flags = tri_flags(g, out)
    if not (flags.is_tri and flags.is_strong):
        raise TriSepError("strengthening did not produce a strong tri-separation")
    if keep_edge is not None:
        u, v = keep_edge
        if u not in out.side_b or v not in out.side_b:
            raise TriSepError("keep_edge ends did not survive into side B")
    return out


@dataclass(frozen=True)
class AroundReport:
    criterion: str  # "colon" | "dotminus" | "equals" | "failed"
    witness_paths: tuple


@dataclass(frozen=True)
class ExternalTriConnReport:
    around: dict  # separator vertex -> AroundReport
    satisfied: bool


def _free(g, w, x):
    """w is x-free: not adjacent to x, or of degree at most three."""
    return x not in g.neighbors(w) or g.degree(w) <= 3


def externally_tri_connected(g, s):
    """Per-vertex path criteria certifying external tri-connectivity."""
    require_three_connected(g)
    sep = separator_of(g, s)
    if sep.order != 3:
        raise InvalidSeparationError("externally_tri_connected expects order 3")
    elements = list(sep.vertices) + list(sep.edges)
    around = {}
    for x in sorted(sep.vertices):
        others = [e for e in elements if e != x]
        verts = [e for e in others if not isinstance(e, tuple)]
        edges = [e for e in others if isinstance(e, tuple)]
        report = AroundReport("failed", ())
        if len(verts) == 2:
            y, z = verts
            if g.has_edge(y, z):
                report = AroundReport("colon", ((y, z),))
            else:
                cnt, paths = internally_disjoint_paths(
                    g, y, z, forbidden_vertices=[x]
                )
                if cnt >= 3:
                    report = AroundReport("colon", tuple(paths[:3]))
        elif len(verts) == 1:
            y = verts[0]
            e = edges[0]
            for w in e:
                if w == y or not _free(g, w, x):
                    continue
                cnt, paths = internally_disjoint_paths(
                    g, y, w, forbidden_vertices=[x], forbidden_edges=[e]
                )
                if cnt >= 2:
                    report = AroundReport("dotminus", tuple(paths[:2]))
                    break
        else:
            e, f = edges
            done = False
            for w1 in e:
                for w2 in f:
                    if w1 == w2 or not _free(g, w1, x) or not _free(g, w2, x):
                        continue
                    cnt, paths = internally_disjoint_paths(
                        g, w1, w2, forbidden_vertices=[x], forbidden_edges=[e, f]
                    )
                    if cnt >= 2:
                        report = AroundReport("equals", tuple(paths[:2]))
                        done = True
                        break
                if done:
                    break
        around[x] = report
    return ExternalTriConnReport(
        around=around,
        satisfied=all(r.criterion != "failed" for r in around.values()),
    )


CROSSING_CASE_LINKS = "links-one-centre-one"
CROSSING_CASE_CENTRE = "links-empty-centre-three"
CROSSING_CASE_K4 = "k4-exception"


def crossing_case(g, s1, s2):
    """The crossing dichotomy for two crossing nontrivial tri-separations."""
    require_three_connected(g)
    for s in (s1, s2):
        f = tri_flags(g, s)
        if not f.is_tri or not f.is_nontrivial:
            raise InvalidSeparationError(
                "crossing_case expects nontrivial tri-separations"
            )
    dia = corner_diagram(g, s1, s2)
    if dia.is_nested():
        raise InvalidSeparationError("crossing_case expects crossing inputs")
    link_sizes = sorted(dia.links[k].size for k in "ABCD")
    centre_size = dia.centre.size
    if dia.jumping_edges:
        if g.n == 4 and g.m == 6:
            return CROSSING_CASE_K4
        raise ClassificationError(
            "jumping edges outside K4",
            report={"links": dia.links, "jumping": dia.jumping_edges},
        )
    if link_sizes == [1, 1, 1, 1] and centre_size == 1 and not dia.centre.edges:
        return CROSSING_CASE_LINKS
    if link_sizes == [0, 0, 0, 0] and centre_size == 3 and not dia.centre.edges:
        return CROSSING_CASE_CENTRE
    raise ClassificationError(
        "crossing pair fits neither dichotomy case",
        report={"links": link_sizes, "centre": centre_size},
    )


class TriAnalysis:
    """Mask-level analysis of all mixed 3-separations of one graph."""

    __slots__ = (
        "graph",
        "pairs",
        "tri",
        "nontrivial",
        "strong",
        "half",
        "totally_nested",
    )

    def __init__(self, graph, pairs, tri, nontrivial, strong, half, totally_nested):
        self.graph = graph
        self.pairs = pairs
        self.tri = tri
        self.nontrivial = nontrivial
        self.strong = strong
        self.half = half
        self.totally_nested = totally_nested

    def tri_pairs(self):
        return [p for i, p in enumerate(self.pairs) if self.tri[i]]

    def strong_nontrivial_tri_pairs(self):
        return [
            p
            for i, p in enumerate(self.pairs)
            if self.tri[i] and self.strong[i] and self.nontrivial[i]
        ]

    def n_pairs(self):
        """Mask pairs of the totally-nested nontrivial tri-separations."""
        return [
            p
            for i, p in enumerate(self.pairs)
            if self.tri[i] and self.nontrivial[i] and self.totally_nested[i]
        ]

    def separation(self, pair):
        g = self.graph
        return MixedSeparation(g.set_of(pair[0]), g.set_of(pair[1]))


@lru_cache(maxsize=None)
def analyze(g):
    """Enumerate and flag every mixed 3-separation of a 3-connected graph."""
    require_three_connected(g)
    adj = g.adj_masks
    try:
        pairs = kernels.enumerate_mixed(adj, g.mask_size, 3, enum_budget())
    except ValueError as exc:
        if "budget" in str(exc):
            raise TriSepError("tri-separation enumeration exceeded budget") from exc
        raise
    pairs.sort()
    flags_by_pair = {}
    tri = []
    nontrivial = []
    strong = []
    half = []
    for a, b in pairs:
        key = (a, b) if a <= b else (b, a)
        cached = flags_by_pair.get(key)
        if cached is None:
            cached = _mask_flags(g, a, b)
            flags_by_pair[key] = cached
        t, nt, st, hf = cached
        tri.append(t)
        nontrivial.append(nt)
        strong.append(st)
        half.append(hf)
    tri_a = [p[0] for i, p in enumerate(pairs) if tri[i]]
    tri_b = [p[1] for i, p in enumerate(pairs) if tri[i]]
    nested_flags = kernels.nested_with_all(
        [p[0] for p in pairs], [p[1] for p in pairs], tri_a, tri_b
    )
    return TriAnalysis(
        graph=g,
        pairs=tuple(pairs),
        tri=tuple(tri),
        nontrivial=tuple(nontrivial),
        strong=tuple(strong),
        half=tuple(half),
        totally_nested=tuple(nested_flags),
    )


@dataclass(frozen=True)
class TotalNestedResult:
    all_tri: tuple
    n_family: tuple


def compute_total_nested(g):
    """All tri-separations and the canonical set of totally-nested
    nontrivial ones, both orientations, deterministically sorted."""
    ana = analyze(g)
    all_tri = [ana.separation(p) for p in ana.tri_pairs()]
    n_family = [ana.separation(p) for p in ana.n_pairs()]
    all_tri.sort(key=lambda s: separation_sort_key(g, s))
    n_family.sort(key=lambda s: separation_sort_key(g, s))
    return TotalNestedResult(all_tri=tuple(all_tri), n_family=tuple(n_family))


def is_totally_nested(g, s):
    """Nested with every tri-separation of g (exhaustive ground truth)."""
    ana = analyze(g)
    a, b = g.mask_of(s.side_a), g.mask_of(s.side_b)
    return kernels.nested_with_all(
        [a],
        [b],
        [p[0] for i, p in enumerate(ana.pairs) if ana.tri[i]],
        [p[1] for i, p in enumerate(ana.pairs) if ana.tri[i]],
    )[0]


def clear_caches():
    analyze.cache_clear()
    _is_3con.cache_clear()
