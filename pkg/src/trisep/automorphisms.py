"""Canonical labeling and automorphisms via partition refinement.

The canonical code is the minimal column-major upper-triangle adjacency
bitstring over all leaf labelings of an equitable-refinement search tree;
equal codes characterize isomorphism.  The same search enumerates the full
automorphism group (every automorphism appears as a map between two
minimal-code leaves).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BoundExceededError, TriSepError

DEFAULT_EXHAUSTIVE_BOUND = 12


def _refine(adj, cells):
    """Equitable refinement; cells and their order depend only on invariants."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups = {}
            for v in cell:
                sig = tuple((adj[v] & cm).bit_count() for cm in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _code_of_labeling(adj, labeling):
    code = 0
    for j in range(1, len(labeling)):
        aj = adj[labeling[j]]
        for i in range(j):
            code = (code << 1) | ((aj >> labeling[i]) & 1)
    return code


@lru_cache(maxsize=200000)
def _canon(g):
    """Returns (code, labeling, min_leaf_labelings) for graph g."""
    n = g.n
    if n == 0:
        return (0, 0), (), ((),)
    adj = g.adj_masks
    verts = list(g.vertices)
    if g.m == 0 or g.m == n * (n - 1) // 2:
        # complete/empty fast path: every labeling is minimal
        lab = tuple(verts)
        return (n, _code_of_labeling(adj, lab)), lab, None

    best = {"code": None, "leaves": []}

    def search(cells):
        cells = _refine(adj, cells)
        pivot = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                pivot = idx
                break
        if pivot is None:
            lab = tuple(c[0] for c in cells)
            code = _code_of_labeling(adj, lab)
            if best["code"] is None or code < best["code"]:
                best["code"] = code
                best["leaves"] = [lab]
            elif code == best["code"]:
                best["leaves"].append(lab)
            return
        cell = cells[pivot]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:pivot] + [[v], rest] + cells[pivot + 1 :])

    search([sorted(verts)])
    leaves = tuple(best["leaves"])
    return (n, best["code"]), leaves[0], leaves


def canonical_code(g):
    """Hashable code equal for exactly the isomorphic relabelings of g."""
    return _canon(g)[0]


def canonical_labeling(g):
    """Map vertex id -> canonical position in 0..n-1."""
    lab = _canon(g)[1]
    return {v: i for i, v in enumerate(lab)}


def automorphisms(g, bound=DEFAULT_EXHAUSTIVE_BOUND):
    """All automorphisms of g as vertex->vertex dicts (exhaustive)."""
    if g.n > bound:
        raise BoundExceededError(
            f"automorphism enumeration limited to {bound} vertices; "
            "pass a larger bound to override"
        )
    _, lab0, leaves = _canon(g)
    if leaves is None:
        # complete or empty graph: the full symmetric group
        from itertools import permutations

        verts = list(g.vertices)
        return [dict(zip(verts, p)) for p in permutations(verts)]
    return [{lab0[i]: leaf[i] for i in range(g.n)} for leaf in leaves]


def automorphism_group(g, bound=DEFAULT_EXHAUSTIVE_BOUND):
    """(automorphism list, canonical code); exhaustive backtracking."""
    return automorphisms(g, bound=bound), canonical_code(g)


def find_isomorphism(g, h, seed=None):
    """One isomorphism g -> h as a dict, or None.

    `seed` optionally fixes some assignments, e.g. {u: v}.  First-solution
    backtracking with degree pruning; suited to transitivity orbit checks
    where full group enumeration would be wasteful.
    """
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(
        h.degree(v) for v in h.vertices
    ):
        return None
    gv = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    if seed:
        for u in seed:
            if u not in g or seed[u] not in h:
                raise TriSepError("seed references unknown vertices")
        gv = sorted(gv, key=lambda v: v not in seed)
        # order the rest to stay near already-assigned vertices
    hv = list(h.vertices)
    assign = dict(seed or {})
    used = set(assign.values())
    if len(used) != len(assign):
        return None

    def consistent(u, x):
        if g.degree(u) != h.degree(x):
            return False
        for w, y in assign.items():
            if (w in g.neighbors(u)) != (y in h.neighbors(x)):
                return False
        return True

    for u, x in list(assign.items()):
        del assign[u]
        ok = consistent(u, x)
        assign[u] = x
        if not ok:
            return None

    order = [v for v in gv if v not in assign]

    def backtrack(i):
        if i == len(order):
            return True
        u = order[i]
        for x in hv:
            if x in used:
                continue
            if consistent(u, x):
                assign[u] = x
                used.add(x)
                if backtrack(i + 1):
                    return True
                del assign[u]
                used.discard(x)
        return False

    if backtrack(0):
        return dict(assign)
    return None


def are_isomorphic(g, h):
    return find_isomorphism(g, h) is not None


def is_vertex_transitive(g):
    """True iff the automorphism group acts transitively on vertices."""
    if g.n <= 1:
        return True
    verts = list(g.vertices)
    v0 = verts[0]
    for v in verts[1:]:
        if find_isomorphism(g, g, seed={v0: v}) is None:
            return False
    return True
