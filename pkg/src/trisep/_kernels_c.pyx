# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel routines over 64-bit bitmask adjacency.

Same interface and semantics as ``trisep._kernels_py``; limited to graphs
whose largest vertex id is below 64 (the dispatcher routes bigger inputs to
the pure backend).
"""

from libc.stdint cimport uint64_t, int64_t

BACKEND = "c"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int ts_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int ts_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    #else
    static inline int ts_popcount(unsigned long long x) {
        int c = 0; while (x) { x &= x - 1; ++c; } return c;
    }
    static inline int ts_ctz(unsigned long long x) {
        int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c;
    }
    #endif
    """
    int ts_popcount(unsigned long long x) nogil
    int ts_ctz(unsigned long long x) nogil


cdef int _load(object adj, uint64_t* buf) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertex ids")
    for i in range(n):
        buf[i] = <uint64_t> adj[i]
    return n


cdef uint64_t _flood(uint64_t* adj, int n, uint64_t active, uint64_t seed) nogil:
    cdef uint64_t comp = seed
    cdef uint64_t frontier = seed
    cdef uint64_t nxt, f, b
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & (~f + 1)
            f ^= b
            nxt |= adj[ts_ctz(b)]
        frontier = nxt & active & ~comp
        comp |= frontier
    return comp


def components(object adj_obj, object active_obj):
    cdef uint64_t adj[64]
    cdef int n = _load(adj_obj, adj)
    cdef uint64_t active = <uint64_t> active_obj
    cdef uint64_t remaining = active
    cdef uint64_t comp
    out = []
    while remaining:
        comp = _flood(adj, n, active, remaining & (~remaining + 1))
        out.append(comp)
        remaining &= ~comp
    return out


def component_count(object adj_obj, object active_obj):
    cdef uint64_t adj[64]
    cdef int n = _load(adj_obj, adj)
    cdef uint64_t active = <uint64_t> active_obj
    cdef uint64_t remaining = active
    cdef uint64_t comp
    cdef int count = 0
    while remaining:
        comp = _flood(adj, n, active, remaining & (~remaining + 1))
        count += 1
        remaining &= ~comp
    return count


def is_connected(object adj_obj, object active_obj):
    cdef uint64_t adj[64]
    cdef int n = _load(adj_obj, adj)
    cdef uint64_t active = <uint64_t> active_obj
    if active == 0:
        return False
    return _flood(adj, n, active, active & (~active + 1)) == active


cdef bint _has_cycle(uint64_t* adj, int n, uint64_t active) nogil:
    cdef int edges2 = 0
    cdef int comps = 0
    cdef uint64_t m = active, b, comp, remaining
    while m:
        b = m & (~m + 1)
        m ^= b
        edges2 += ts_popcount(adj[ts_ctz(b)] & active)
    remaining = active
    while remaining:
        comp = _flood(adj, n, active, remaining & (~remaining + 1))
        comps += 1
        remaining &= ~comp
    return edges2 / 2 >= ts_popcount(active) - comps + 1


def has_cycle(object adj_obj, object active_obj):
    cdef uint64_t adj[64]
    cdef int n = _load(adj_obj, adj)
    return bool(_has_cycle(adj, n, <uint64_t> active_obj))


def max_disjoint_paths(object adj_obj, object n_obj, object s_obj, object t_obj, object forbidden_obj):
    """Internally vertex-disjoint s-t path count via unit-capacity max-flow.

    Vertex-split graph on nodes 0..2n-1 with in(v)=2v, out(v)=2v+1; capacities
    in a dense matrix (n <= 64 keeps this tiny).
    """
    cdef uint64_t adj[64]
    cdef int n = _load(adj_obj, adj)
    cdef int s = <int> s_obj
    cdef int t = <int> t_obj
    cdef uint64_t forbidden = <uint64_t> forbidden_obj
    cdef uint64_t active = (((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0 - 1) & ~forbidden
    if not (active >> s) & 1 or not (active >> t) & 1 or s == t:
        return 0

    cdef int size = 2 * n
    # capacity matrix, int8 would do but int keeps it simple
    cdef int cap[128][128]
    cdef int prev[128]
    cdef int queue[128]
    cdef int i, j, qh, qt, a, b, v, w, flow
    cdef uint64_t mv, bb, nb, wb
    for i in range(size):
        for j in range(size):
            cap[i][j] = 0
    mv = active
    while mv:
        bb = mv & (~mv + 1)
        mv ^= bb
        v = ts_ctz(bb)
        cap[2 * v][2 * v + 1] = n if (v == s or v == t) else 1
        nb = adj[v] & active
        while nb:
            wb = nb & (~nb + 1)
            nb ^= wb
            w = ts_ctz(wb)
            cap[2 * v + 1][2 * w] = 1

    cdef int src = 2 * s + 1
    cdef int sink = 2 * t
    flow = 0
    while True:
        for i in range(size):
            prev[i] = -1
        prev[src] = src
        queue[0] = src
        qh = 0
        qt = 1
        while qh < qt and prev[sink] < 0:
            a = queue[qh]
            qh += 1
            for b in range(size):
                if prev[b] < 0 and cap[a][b] > 0:
                    prev[b] = a
                    queue[qt] = b
                    qt += 1
        if prev[sink] < 0:
            return flow
        b = sink
        while b != src:
            a = prev[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1


def le_pair(object a1, object b1, object a2, object b2):
    return (a1 & ~a2) == 0 and (b2 & ~b1) == 0


def nested_pair(object a1o, object b1o, object a2o, object b2o):
    cdef uint64_t a1 = <uint64_t> a1o, b1 = <uint64_t> b1o
    cdef uint64_t a2 = <uint64_t> a2o, b2 = <uint64_t> b2o
    return bool(
        ((a1 & ~a2) == 0 and (b2 & ~b1) == 0)
        or ((a1 & ~b2) == 0 and (a2 & ~b1) == 0)
        or ((b1 & ~a2) == 0 and (b2 & ~a1) == 0)
        or ((b1 & ~b2) == 0 and (a2 & ~a1) == 0)
    )


def nested_with_all(object ca, object cb, object ctx_a, object ctx_b):
    cdef int m = len(ctx_a)
    cdef int nc = len(ca)
    cdef uint64_t stack_a[4096]
    cdef uint64_t stack_b[4096]
    cdef uint64_t a1, b1, a2, b2
    cdef int i, j
    cdef bint ok
    out = []
    if m <= 4096:
        for j in range(m):
            stack_a[j] = <uint64_t> ctx_a[j]
            stack_b[j] = <uint64_t> ctx_b[j]
        for i in range(nc):
            a1 = <uint64_t> ca[i]
            b1 = <uint64_t> cb[i]
            ok = True
            for j in range(m):
                a2 = stack_a[j]
                b2 = stack_b[j]
                if not (
                    ((a1 & ~a2) == 0 and (b2 & ~b1) == 0)
                    or ((a1 & ~b2) == 0 and (a2 & ~b1) == 0)
                    or ((b1 & ~a2) == 0 and (b2 & ~a1) == 0)
                    or ((b1 & ~b2) == 0 and (a2 & ~a1) == 0)
                ):
                    ok = False
                    break
            out.append(bool(ok))
        return out
    # context too large for the stack buffer: fall back to object loop
    for i in range(nc):
        a1 = <uint64_t> ca[i]
        b1 = <uint64_t> cb[i]
        ok = True
        for j in range(m):
            a2 = <uint64_t> ctx_a[j]
            b2 = <uint64_t> ctx_b[j]
            if not (
                ((a1 & ~a2) == 0 and (b2 & ~b1) == 0)
                or ((a1 & ~b2) == 0 and (a2 & ~b1) == 0)
                or ((b1 & ~a2) == 0 and (b2 & ~a1) == 0)
                or ((b1 & ~b2) == 0 and (a2 & ~a1) == 0)
            ):
                ok = False
                break
        out.append(bool(ok))
    return out


def enumerate_mixed(object adj_obj, object n_obj, object k_obj, object budget_obj, object vmask_obj=None):
    """All oriented mixed k-separations as (sideA, sideB) mask pairs."""
    cdef uint64_t adj[64]
    cdef uint64_t adj2[64]
    cdef int n = _load(adj_obj, adj)
    cdef int k = <int> k_obj
    cdef int64_t budget = <int64_t> budget_obj
    cdef int64_t steps = 0
    cdef uint64_t full
    if vmask_obj is None:
        full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0 - 1
    else:
        full = <uint64_t> vmask_obj

    # vertex list (ids may have gaps)
    cdef int verts[64]
    cdef int nverts = 0
    cdef uint64_t vm = full
    while vm:
        verts[nverts] = ts_ctz(vm & (~vm + 1))
        vm &= vm - 1
        nverts += 1

    # edge list
    cdef int eu[2080]
    cdef int ev[2080]
    cdef int ne_total = 0
    cdef int u, v, i, j
    cdef uint64_t m, b
    for u in range(n):
        m = adj[u] >> (u + 1)
        while m:
            b = m & (~m + 1)
            m ^= b
            eu[ne_total] = u
            ev[ne_total] = u + 1 + ts_ctz(b)
            ne_total += 1

    cdef list out = []
    cdef int nv, ne
    cdef int xs[3]
    cdef int fs[3]
    cdef int avail[2080]
    cdef int na
    cdef uint64_t xmask, active
    cdef uint64_t comp_masks[64]
    cdef int comp_of[64]
    cdef int ncomps
    cdef int cu, cv
    cdef int cons_a[3]
    cdef int cons_b[3]
    cdef int ncons
    cdef bint feasible
    # cluster bookkeeping
    cdef int cluster_of[64]
    cdef int color[64]
    cdef int stack[64]
    cdef int sp
    cdef int cid, nclusters
    cdef uint64_t cluster_mask0[64]
    cdef uint64_t cluster_mask1[64]
    cdef uint64_t mask0, mask1, remaining, comp
    cdef int bits, a_idx, e_idx, cross
    cdef uint64_t aa, bbm, mm

    for nv in range(k + 1):
        ne = k - nv
        # iterate over nv-subsets of vertices via manual odometer
        for i in range(nv):
            xs[i] = i
        while True:
            if nv and xs[nv - 1] >= nverts:
                break
            xmask = 0
            for i in range(nv):
                xmask |= (<uint64_t>1) << verts[xs[i]]
            active = full & ~xmask
            # available edges avoiding X
            na = 0
            for i in range(ne_total):
                if not ((xmask >> eu[i]) & 1) and not ((xmask >> ev[i]) & 1):
                    avail[na] = i
                    na += 1
            if na >= ne:
                for i in range(ne):
                    fs[i] = i
                while True:
                    if ne and fs[ne - 1] >= na:
                        break
                    steps += 1
                    if steps > budget:
                        raise ValueError("budget")
                    for i in range(n):
                        adj2[i] = adj[i]
                    for i in range(ne):
                        e_idx = avail[fs[i]]
                        adj2[eu[e_idx]] &= ~((<uint64_t>1) << ev[e_idx])
                        adj2[ev[e_idx]] &= ~((<uint64_t>1) << eu[e_idx])
                    # components of G - X - F
                    ncomps = 0
                    remaining = active
                    while remaining:
                        comp = _flood(adj2, n, active, remaining & (~remaining + 1))
                        comp_masks[ncomps] = comp
                        mm = comp
                        while mm:
                            b = mm & (~mm + 1)
                            mm ^= b
                            comp_of[ts_ctz(b)] = ncomps
                        ncomps += 1
                        remaining &= ~comp
                    if ncomps == 0:
                        if not _advance(fs, ne, na):
                            break
                        continue
                    # F-edge constraints between components
                    feasible = True
                    ncons = 0
                    for i in range(ne):
                        e_idx = avail[fs[i]]
                        cu = comp_of[eu[e_idx]]
                        cv = comp_of[ev[e_idx]]
                        if cu == cv:
                            feasible = False
                            break
                        cons_a[ncons] = cu
                        cons_b[ncons] = cv
                        ncons += 1
                    if feasible:
                        # cluster components under constraints, 2-coloring each
                        for i in range(ncomps):
                            cluster_of[i] = -1
                        nclusters = 0
                        for i in range(ncomps):
                            if cluster_of[i] >= 0:
                                continue
                            cid = nclusters
                            nclusters += 1
                            cluster_of[i] = cid
                            color[i] = 0
                            stack[0] = i
                            sp = 1
                            while sp and feasible:
                                a_idx = stack[sp - 1]
                                sp -= 1
                                for j in range(ncons):
                                    cu = cons_a[j]
                                    cv = cons_b[j]
                                    if cu == a_idx or cv == a_idx:
                                        v = cv if cu == a_idx else cu
                                        if cluster_of[v] < 0:
                                            cluster_of[v] = cid
                                            color[v] = color[a_idx] ^ 1
                                            stack[sp] = v
                                            sp += 1
                                        elif color[v] == color[a_idx]:
                                            feasible = False
                            if not feasible:
                                break
                        if feasible:
                            steps += (<int64_t>1) << (nclusters - 1 if nclusters > 0 else 0)
                            if steps > budget:
                                raise ValueError("budget")
                            for i in range(nclusters):
                                cluster_mask0[i] = 0
                                cluster_mask1[i] = 0
                            for i in range(ncomps):
                                if color[i]:
                                    cluster_mask1[cluster_of[i]] |= comp_masks[i]
                                else:
                                    cluster_mask0[cluster_of[i]] |= comp_masks[i]
                            if nclusters <= 30:
                                for bits in range(1 << nclusters):
                                    mask1 = 0
                                    for i in range(nclusters):
                                        if (bits >> i) & 1:
                                            mask1 |= cluster_mask0[i]
                                        else:
                                            mask1 |= cluster_mask1[i]
                                    mask0 = active & ~mask1
                                    if mask0 == 0 or mask1 == 0:
                                        continue
                                    # verify separator equals the candidate
                                    cross = 0
                                    mm = mask0
                                    while mm:
                                        b = mm & (~mm + 1)
                                        mm ^= b
                                        cross += ts_popcount(adj[ts_ctz(b)] & mask1)
                                    if cross != ne:
                                        continue
                                    aa = xmask | mask0
                                    bbm = xmask | mask1
                                    out.append((int(aa), int(bbm)))
                            else:
                                raise ValueError("budget")
                    if not _advance(fs, ne, na):
                        break
            if not _advance(xs, nv, n):
                break
    return out


cdef bint _advance(int* idx, int k, int n):
    """Advance a k-combination odometer over range(n); False when done."""
    cdef int i, j
    if k == 0:
        return False
    i = k - 1
    while i >= 0:
        idx[i] += 1
        if idx[i] <= n - (k - i):
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
            return True
        i -= 1
    return False
