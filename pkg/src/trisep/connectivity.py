"""Connectivity primitives: disjoint paths (Menger) and k-connectivity."""

from __future__ import annotations

from . import kernels
from .errors import TriSepError
from .graph import _norm_edge


def _filtered_masks(g, forbidden_edges):
    adj = list(g.adj_masks)
    for e in forbidden_edges:
        u, v = _norm_edge(e)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return adj


def count_disjoint_paths(g, u, v, forbidden_vertices=(), forbidden_edges=()):
    """Maximum number of internally disjoint u-v paths (count only)."""
    if u == v:
        raise TriSepError("endpoints must differ")
    fv = set(forbidden_vertices)
    if u in fv or v in fv:
        raise TriSepError("endpoints may not be forbidden")
    adj = _filtered_masks(g, forbidden_edges)
    return kernels.max_disjoint_paths(adj, g.mask_size, u, v, g.mask_of(fv))


def internally_disjoint_paths(g, u, v, forbidden_vertices=(), forbidden_edges=()):
    """Maximum set of internally disjoint u-v paths, with the paths realized.

    Unit-capacity max-flow on the vertex-split graph; an unfixed direct edge
    uv counts as one path.  Returns (count, [paths]) where each path is a
    vertex tuple from u to v.
    """
    if u == v:
        raise TriSepError("endpoints must differ")
    fv = set(forbidden_vertices)
    if u in fv or v in fv:
        raise TriSepError("endpoints may not be forbidden")
    if u not in g or v not in g:
        raise TriSepError("endpoints must belong to the graph")
    adj = _filtered_masks(g, forbidden_edges)
    active = g.full_mask & ~g.mask_of(fv)

    # max-flow with per-arc flow bookkeeping so paths can be read back
    cap = {}
    out = {}

    def arc(a, b, c):
        if (a, b) not in cap:
            cap[(a, b)] = 0
            out.setdefault(a, []).append(b)
        if (b, a) not in cap:
            cap[(b, a)] = 0
            out.setdefault(b, []).append(a)
        cap[(a, b)] += c

    n = g.mask_size
    mv = active
    while mv:
        bb = mv & -mv
        mv ^= bb
        w = bb.bit_length() - 1
        arc(2 * w, 2 * w + 1, n if w in (u, v) else 1)
        nb = adj[w] & active
        while nb:
            wb = nb & -nb
            nb ^= wb
            arc(2 * w + 1, 2 * (wb.bit_length() - 1), 1)

    src, sink = 2 * u + 1, 2 * v
    flow = {}
    value = 0
    while True:
        prev = {src: None}
        queue = [src]
        qi = 0
        while qi < len(queue):
            a = queue[qi]
            qi += 1
            if a == sink:
                break
            for b in out.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != src:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            flow[(a, b)] = flow.get((a, b), 0) + 1
            flow[(b, a)] = flow.get((b, a), 0) - 1
            b = a
        value += 1

    paths = []
    for _ in range(value):
        path = [u]
        node = src
        while node != sink:
            for b in out.get(node, ()):
                if flow.get((node, b), 0) > 0:
                    flow[(node, b)] -= 1
                    node = b
                    break
            else:
                raise AssertionError("flow decomposition failed")
            if node % 2 == 0:
                path.append(node // 2)
        paths.append(tuple(path))
    return value, paths


def is_k_connected(g, k):
    """True iff |V| > k and fewer than k vertices never disconnect g."""
    if k < 1:
        raise TriSepError("k must be at least 1")
    if g.n <= k:
        return False
    if any(g.degree(v) < k for v in g.vertices):
        return False
    adj = g.adj_masks
    n = g.mask_size
    for i, u in enumerate(g.vertices):
        for v in g.vertices[i + 1 :]:
            if v in g.neighbors(u):
                continue
            if kernels.max_disjoint_paths(adj, n, u, v, 0) < k:
                return False
    return True


def min_vertex_cut_size(g, u, v):
    """Size of a minimum u-v vertex cut (u, v non-adjacent)."""
    if g.has_edge(u, v):
        raise TriSepError("no vertex cut separates adjacent vertices")
    return kernels.max_disjoint_paths(g.adj_masks, g.mask_size, u, v, 0)
