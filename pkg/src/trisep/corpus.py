"""Exhaustive small-graph corpora and the vertex-transitive collection.

Graphs on n vertices are generated up to isomorphism by extending every
(n-1)-vertex graph with one new vertex over all 2^(n-1) neighbourhoods and
deduplicating by canonical code.  Completeness is cross-checked in the test
suite against the labeled-graph count identity sum(n!/|Aut|) = 2^C(n,2).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .automorphisms import canonical_code, find_isomorphism, is_vertex_transitive
from .connectivity import is_k_connected
from .families import circulant, complement, cube, petersen, rook33
from .graph import Graph, is_connected


@lru_cache(maxsize=16)
def graphs_exactly(n):
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n == 0:
        return (Graph(),)
    out = {}
    for parent in graphs_exactly(n - 1):
        base_edges = list(parent.edges)
        new = n - 1
        for bits in range(1 << (n - 1)):
            edges = base_edges + [
                (i, new) for i in range(n - 1) if (bits >> i) & 1
            ]
            g = Graph(range(n), edges)
            out.setdefault(canonical_code(g), g)
    return tuple(out[c] for c in sorted(out))


@lru_cache(maxsize=16)
def all_graphs(max_n):
    """All graphs on at most max_n vertices, one per isomorphism class."""
    out = []
    for n in range(max_n + 1):
        out.extend(graphs_exactly(n))
    return tuple(out)


@lru_cache(maxsize=16)
def three_connected_graphs(max_n):
    """All 3-connected graphs on at most max_n vertices.

    For n <= 7 this filters the full corpus; n = 8 is generated from the
    2-connected 7-vertex graphs (deleting any vertex of a 3-connected graph
    leaves a 2-connected one), which keeps the candidate pool small.
    """
    out = [g for g in all_graphs(min(max_n, 7)) if is_k_connected(g, 3)]
    if max_n >= 9:
        raise ValueError("exhaustive 3-connected corpus is limited to n <= 8")
    if max_n == 8:
        seen = {}
        for parent in two_connected_graphs(7):
            if parent.n != 7:
                continue
            base_edges = list(parent.edges)
            for bits in range(1 << 7):
                if bin(bits).count("1") < 3:
                    continue
                g = Graph(range(8), base_edges + [(i, 7) for i in range(7) if (bits >> i) & 1])
                if min(g.degree(v) for v in g.vertices) < 3:
                    continue
                if not is_k_connected(g, 3):
                    continue
                seen.setdefault(canonical_code(g), g)
        out.extend(seen[c] for c in sorted(seen))
    return tuple(out)


@lru_cache(maxsize=16)
def two_connected_graphs(max_n):
    if max_n > 7:
        raise ValueError("exhaustive 2-connected corpus is limited to n <= 7")
    return tuple(g for g in all_graphs(max_n) if is_k_connected(g, 2))


def _distinct_up_to_iso(graphs):
    by_key = {}
    for g in graphs:
        key = (g.n, g.m, tuple(sorted(g.degree(v) for v in g.vertices)))
        bucket = by_key.setdefault(key, [])
        if not any(find_isomorphism(g, h) is not None for h in bucket):
            bucket.append(g)
    out = []
    for key in sorted(by_key):
        out.extend(by_key[key])
    return out


@lru_cache(maxsize=4)
def vertex_transitive_graphs(max_n=10):
    """Connected vertex-transitive graphs on <= max_n vertices.

    Circulants, the vertex-transitive members of the exhaustive corpus
    (<= 7 vertices), the known non-circulant examples in range (3-cube,
    3x3 rook graph, Petersen graph), and complements of all of these.
    """
    cands = []
    for n in range(1, max_n + 1):
        steps = list(range(1, n // 2 + 1))
        for r in range(1, len(steps) + 1):
            for conn in combinations(steps, r):
                cands.append(circulant(n, conn))
    for g in all_graphs(min(max_n, 7)):
        if g.n >= 1 and is_connected(g) and is_vertex_transitive(g):
            cands.append(g)
    if max_n >= 8:
        cands.append(cube())
    if max_n >= 9:
        cands.append(rook33())
    if max_n >= 10:
        cands.append(petersen())
    cands = cands + [complement(g) for g in cands]
    cands = [g for g in cands if is_connected(g) and is_vertex_transitive(g)]
    return tuple(_distinct_up_to_iso(cands))
