"""Simple finite undirected graphs with stable small-integer vertex ids.

Graphs are immutable and hashable; edits return new graphs together with a
:class:`MergeMap` recording vertex identifications (only contraction merges
ids).  Bitmask adjacency keyed directly by vertex id backs the kernel layer,
so ids should stay small (they are dense for all built-in constructions).
"""

from __future__ import annotations

from functools import cached_property

from . import kernels
from .errors import TriSepError


def _norm_edge(e):
    u, v = e
    if u == v:
        raise TriSepError(f"loop at vertex {u} not allowed")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on nonnegative integer vertex ids."""

    __slots__ = ("vertices", "edges", "_hash", "__dict__")

    def __init__(self, vertices=(), edges=()):
        es = frozenset(_norm_edge(e) for e in edges)
        vs = set(vertices)
        for u, v in es:
            vs.add(u)
            vs.add(v)
        if any(v < 0 for v in vs):
            raise TriSepError("vertex ids must be nonnegative")
        self.vertices = tuple(sorted(vs))
        self.edges = es
        self._hash = hash((self.vertices, self.edges))

    # -- basics ---------------------------------------------------------
    @property
    def n(self):
        return len(self.vertices)

    @property
    def m(self):
        return len(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __contains__(self, v):
        return v in self._vset

    @cached_property
    def _vset(self):
        return frozenset(self.vertices)

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    @cached_property
    def _adj(self):
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nb) for v, nb in adj.items()}

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    # -- bitmask view (masks keyed by vertex id) ------------------------
    @cached_property
    def full_mask(self):
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    @cached_property
    def adj_masks(self):
        """Adjacency masks indexed by vertex id (gaps hold 0)."""
        size = (self.vertices[-1] + 1) if self.vertices else 0
        adj = [0] * size
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    @property
    def mask_size(self):
        return (self.vertices[-1] + 1) if self.vertices else 0

    def mask_of(self, vs):
        m = 0
        for v in vs:
            m |= 1 << v
        return m

    @staticmethod
    def set_of(mask):
        out = []
        while mask:
            b = mask & -mask
            mask ^= b
            out.append(b.bit_length() - 1)
        return frozenset(out)

    # -- derived graphs -------------------------------------------------
    def subgraph(self, vs):
        vs = set(vs)
        return Graph(vs, (e for e in self.edges if e[0] in vs and e[1] in vs))

    def without_vertices(self, vs):
        vs = set(vs)
        return self.subgraph(set(self.vertices) - vs)

    def without_edges(self, es):
        drop = {_norm_edge(e) for e in es}
        return Graph(self.vertices, self.edges - drop)

    def with_edges(self, es):
        return Graph(self.vertices, set(self.edges) | {_norm_edge(e) for e in es})

    def relabel(self, mapping):
        """Apply an injective vertex relabeling."""
        if len(set(mapping[v] for v in self.vertices)) != self.n:
            raise TriSepError("relabeling must be injective")
        return Graph(
            (mapping[v] for v in self.vertices),
            ((mapping[u], mapping[v]) for u, v in self.edges),
        )

    def edge_list(self):
        return sorted(self.edges)


class MergeMap:
    """Map from original vertex ids to surviving ids after contractions."""

    def __init__(self, mapping=None):
        self._map = dict(mapping or {})
        self._close()

    def _close(self):
        # idempotent under composition closure
        changed = True
        while changed:
            changed = False
            for k, v in list(self._map.items()):
                w = self._map.get(v, v)
                if w != v:
                    self._map[k] = w
                    changed = True

    def resolve(self, v):
        return self._map.get(v, v)

    def compose(self, later):
        """Mapping equal to applying self first, then `later`."""
        keys = set(self._map) | set(later._map)
        return MergeMap({k: later.resolve(self.resolve(k)) for k in keys})

    def as_dict(self):
        return dict(self._map)

    def __eq__(self, other):
        return isinstance(other, MergeMap) and self._map == other._map

    def __repr__(self):
        return f"MergeMap({self._map})"


def components(g, removed_vertices=(), removed_edges=()):
    """Connected components after removing the given vertices and edges.

    Returns a list of frozensets, sorted by minimum vertex id.
    """
    removed_vertices = set(removed_vertices)
    if not removed_vertices <= set(g.vertices):
        raise TriSepError("removed vertices must belong to the graph")
    drop = {_norm_edge(e) for e in removed_edges}
    if not drop <= g.edges:
        raise TriSepError("removed edges must belong to the graph")
    adj = list(g.adj_masks)
    for u, v in drop:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    active = g.full_mask & ~g.mask_of(removed_vertices)
    return [Graph.set_of(c) for c in kernels.components(adj, active)]


def is_connected(g):
    return g.n > 0 and kernels.is_connected(g.adj_masks, g.full_mask)


def edit(g, action, target):
    """Apply a single edit; returns (graph, merge_map).

    Actions: ``delete-edge``, ``contract-edge``, ``subdivide-edge``,
    ``delete-vertex``.  Contraction simplifies parallel edges and merges the
    larger id into the smaller; subdivision introduces a fresh id.
    """
    if action == "delete-vertex":
        if target not in g:
            raise TriSepError(f"no vertex {target}")
        return g.without_vertices([target]), MergeMap()
    e = _norm_edge(target)
    if e not in g.edges:
        raise TriSepError(f"no edge {target}")
    u, v = e
    if action == "delete-edge":
        return g.without_edges([e]), MergeMap()
    if action == "subdivide-edge":
        w = g.vertices[-1] + 1
        return (
            Graph(g.vertices + (w,), (g.edges - {e}) | {(u, w), (v, w)}),
            MergeMap(),
        )
    if action == "contract-edge":
        keep, gone = (u, v) if u < v else (v, u)
        edges = set()
        for a, b in g.edges - {e}:
            a = keep if a == gone else a
            b = keep if b == gone else b
            if a != b:
                edges.add(_norm_edge((a, b)))
        vs = set(g.vertices) - {gone}
        return Graph(vs, edges), MergeMap({gone: keep})
    raise TriSepError(f"unknown edit action {action!r}")


def contract_edges(g, es):
    """Contract a set of edges one by one, composing the merge maps."""
    mm = MergeMap()
    h = g
    for e in es:
        a, b = mm.resolve(e[0]), mm.resolve(e[1])
        if a == b:
            continue
        h, step = edit(h, "contract-edge", (a, b))
        mm = mm.compose(step)
    return h, mm
