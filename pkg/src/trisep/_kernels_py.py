"""Pure-Python kernel routines over bitmask adjacency.

All functions work on graphs given as a list ``adj`` of integer bitmasks,
where bit ``j`` of ``adj[i]`` is set iff vertices at positions ``i`` and ``j``
are adjacent.  Vertex sets are plain integers used as bitmasks.  This module
is the fallback backend; ``trisep._kernels_c`` implements the same interface
compiled.
"""

BACKEND = "python"


def components(adj, active):
    """Connected components of the subgraph induced on `active`.

    Returns component masks ordered by their lowest set bit.
    """
    comps = []
    remaining = active
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & active & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def component_count(adj, active):
    count = 0
    remaining = active
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & active & ~comp
            comp |= frontier
        count += 1
        remaining &= ~comp
    return count


def is_connected(adj, active):
    if active == 0:
        return False
    return component_count(adj, active) == 1


def has_cycle(adj, active):
    """True iff the subgraph induced on `active` contains a cycle."""
    edges2 = 0
    m = active
    while m:
        b = m & -m
        m ^= b
        edges2 += (adj[b.bit_length() - 1] & active).bit_count()
    return edges2 // 2 >= active.bit_count() - component_count(adj, active) + 1


def max_disjoint_paths(adj, n, s, t, forbidden):
    """Maximum number of internally vertex-disjoint s-t paths.

    ``forbidden`` is a mask of vertices that may not appear on any path
    (s and t must not be in it).  Edge exclusions are handled by the caller
    editing ``adj``.  Unit-capacity max-flow on the vertex-split graph; a
    direct s-t edge counts as one path.
    """
    active = ((1 << n) - 1) & ~forbidden
    if not (active >> s) & 1 or not (active >> t) & 1 or s == t:
        return 0
    # node 2v = in(v), 2v+1 = out(v); forward arcs carry capacity, every arc
    # gets a residual partner of capacity 0
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

    mv = active
    while mv:
        bb = mv & -mv
        mv ^= bb
        v = bb.bit_length() - 1
        arc(2 * v, 2 * v + 1, n if v in (s, t) else 1)
        nb = adj[v] & active
        while nb:
            wb = nb & -nb
            nb ^= wb
            arc(2 * v + 1, 2 * (wb.bit_length() - 1), 1)

    src, sink = 2 * s + 1, 2 * t
    flow = 0
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
            return flow
        b = sink
        while b != src:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def _colorings(comp_masks, constraints, ncomps):
    """Yield 2-colorings (mask of comps colored 1) satisfying constraint pairs.

    Each constraint (i, j) forces comps i and j to take opposite colors.
    Components are clustered by constraints; each cluster contributes a free
    flip, so the yield count is 2**clusters (or 0 if a cluster is odd).
    """
    color = [-1] * ncomps
    cluster_of = [-1] * ncomps
    adjc = [[] for _ in range(ncomps)]
    for i, j in constraints:
        adjc[i].append(j)
        adjc[j].append(i)
    clusters = []
    for seed in range(ncomps):
        if cluster_of[seed] >= 0:
            continue
        cid = len(clusters)
        members = [seed]
        cluster_of[seed] = cid
        color[seed] = 0
        stack = [seed]
        ok = True
        while stack:
            a = stack.pop()
            for b in adjc[a]:
                if cluster_of[b] < 0:
                    cluster_of[b] = cid
                    color[b] = color[a] ^ 1
                    members.append(b)
                    stack.append(b)
                elif color[b] == color[a]:
                    ok = False
        if not ok:
            return
        clusters.append(members)
    k = len(clusters)
    for bits in range(1 << k):
        mask1 = 0
        for cid, members in enumerate(clusters):
            flip = (bits >> cid) & 1
            for c in members:
                if color[c] ^ flip:
                    mask1 |= comp_masks[c]
        yield mask1


def enumerate_mixed(adj, n, k, budget, vmask=None):
    """All oriented mixed k-separations as (sideA, sideB) mask pairs.

    For each candidate separator (X vertices, F edges with |X|+|F| = k),
    the components of G - X - F are 2-colored so that every F-edge crosses
    and both color classes are nonempty; X joins both sides.  ``vmask``
    restricts the vertex set (ids may have gaps).  Raises
    ValueError("budget") if the candidate count times colorings would exceed
    ``budget``.
    """
    full = (1 << n) - 1 if vmask is None else vmask
    verts = [i for i in range(n) if (full >> i) & 1]
    edges = []
    for u in range(n):
        m = adj[u] >> (u + 1)
        while m:
            b = m & -m
            m ^= b
            edges.append((u, u + 1 + b.bit_length() - 1))
    out = []
    steps = 0

    from itertools import combinations

    for nv in range(k + 1):
        ne = k - nv
        for xs in combinations(verts, nv):
            xmask = 0
            for v in xs:
                xmask |= 1 << v
            active = full & ~xmask
            avail = [e for e in edges if not ((1 << e[0]) | (1 << e[1])) & xmask]
            if len(avail) < ne:
                continue
            for fs in combinations(avail, ne):
                steps += 1
                if steps > budget:
                    raise ValueError("budget")
                adj2 = adj
                if ne:
                    adj2 = list(adj)
                    for (u, v) in fs:
                        adj2[u] &= ~(1 << v)
                        adj2[v] &= ~(1 << u)
                comp_masks = components(adj2, active)
                ncomps = len(comp_masks)
                if ncomps == 0:
                    continue
                # locate the component of each F-edge endpoint
                constraints = []
                feasible = True
                for (u, v) in fs:
                    cu = cv = -1
                    ub, vb = 1 << u, 1 << v
                    for ci, cm in enumerate(comp_masks):
                        if cm & ub:
                            cu = ci
                        if cm & vb:
                            cv = ci
                    if cu == cv:
                        feasible = False
                        break
                    constraints.append((cu, cv))
                if not feasible:
                    continue
                steps += 1 << max(0, ncomps - 1)
                if steps > budget:
                    raise ValueError("budget")
                for mask1 in _colorings(comp_masks, constraints, ncomps):
                    mask0 = active & ~mask1
                    if mask0 == 0 or mask1 == 0:
                        continue
                    a = xmask | mask0
                    b = xmask | mask1
                    # recompute the separator; discard on mismatch
                    if a & b != xmask:
                        continue
                    cross = 0
                    mm = mask0
                    ok = True
                    while mm:
                        bb = mm & -mm
                        mm ^= bb
                        cross += (adj[bb.bit_length() - 1] & mask1).bit_count()
                    if cross != ne:
                        ok = False
                    if ok:
                        out.append((a, b))
    return out


def le_pair(a1, b1, a2, b2):
    return (a1 & ~a2) == 0 and (b2 & ~b1) == 0


def nested_pair(a1, b1, a2, b2):
    return (
        ((a1 & ~a2) == 0 and (b2 & ~b1) == 0)
        or ((a1 & ~b2) == 0 and (a2 & ~b1) == 0)
        or ((b1 & ~a2) == 0 and (b2 & ~a1) == 0)
        or ((b1 & ~b2) == 0 and (a2 & ~a1) == 0)
    )


def nested_with_all(ca, cb, ctx_a, ctx_b):
    """For each candidate i: is (ca[i], cb[i]) nested with every context pair?"""
    flags = []
    m = len(ctx_a)
    for a1, b1 in zip(ca, cb):
        ok = True
        for j in range(m):
            a2 = ctx_a[j]
            b2 = ctx_b[j]
            if not (
                ((a1 & ~a2) == 0 and (b2 & ~b1) == 0)
                or ((a1 & ~b2) == 0 and (a2 & ~b1) == 0)
                or ((b1 & ~a2) == 0 and (b2 & ~a1) == 0)
                or ((b1 & ~b2) == 0 and (a2 & ~a1) == 0)
            ):
                ok = False
                break
        flags.append(ok)
    return flags
