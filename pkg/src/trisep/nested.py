"""Stars of mixed separations: splitting stars, interlacing, bags, torsos
(expanded and compressed, linked by the subdivision graph), principal stars,
and hyper-lifts back to the host graph."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from . import kernels
from .connectivity import count_disjoint_paths
from .errors import InvalidSeparationError, TriSepError
from .graph import Graph, MergeMap, components
from .separations import (
    MixedSeparation,
    le,
    lt,
    is_nested,
    separator_of,
    validate_mixed_separation,
)
from .triseps import require_three_connected, tri_flags, reduction, analyze


def _member_key(s):
    return (sorted(s.side_a), sorted(s.side_b))


class OrientedStar:
    """A set of oriented mixed separations with (Ai,Bi) <= (Bj,Aj) pairwise."""

    __slots__ = ("members",)

    def __init__(self, members, validate=True):
        members = tuple(sorted(set(members), key=_member_key))
        if validate:
            for i, si in enumerate(members):
                for j, sj in enumerate(members):
                    if i == j:
                        continue
                    if si == sj.flip():
                        raise InvalidSeparationError(
                            "a star may not contain both orientations of a separation"
                        )
                    if not le(si, sj.flip()):
                        raise InvalidSeparationError(
                            "star members must satisfy (Ai,Bi) <= (Bj,Aj)"
                        )
        self.members = members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        return isinstance(other, OrientedStar) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"OrientedStar({list(self.members)})"

    def leaf_sides(self):
        return [s.side_a for s in self.members]


class NestedFamily:
    """A symmetric, pairwise-nested set of mixed separations."""

    __slots__ = ("members",)

    def __init__(self, members, validate=True):
        members = set(members)
        if validate:
            for s in members:
                if s.flip() not in members:
                    raise InvalidSeparationError("family must be symmetric")
            ms = sorted(members, key=_member_key)
            for i, si in enumerate(ms):
                for sj in ms[i + 1 :]:
                    if not is_nested(si, sj):
                        raise InvalidSeparationError("family must be pairwise nested")
        self.members = tuple(sorted(members, key=_member_key))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def is_splitting_star(star, family):
    """Definition check: every family member sits below some star member."""
    members = list(family)
    for s in members:
        if not any(le(s, t) or le(s.flip(), t) for t in star.members):
            return False
    return True


def splitting_stars(family):
    """All splitting stars of a nested symmetric family.

    Oriented members pointing at a common tree node form one star: s and t
    share a node iff s <= flip(t) with no family member strictly between.
    The empty family yields the single empty star.  Every output is verified
    against the splitting-star definition.
    """
    if isinstance(family, NestedFamily):
        members = list(family.members)
    else:
        members = sorted(set(family), key=_member_key)
        NestedFamily(members)  # validates symmetry and nestedness
    if not members:
        return [OrientedStar(())]
    idx = {s: i for i, s in enumerate(members)}
    parent = list(range(len(members)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri

    for i, s in enumerate(members):
        for j, t in enumerate(members):
            if i >= j or t == s.flip():
                continue
            if not le(s, t.flip()):
                continue
            if any(lt(s, r) and lt(r, t.flip()) for r in members):
                continue
            union(i, j)
    classes = {}
    for i, s in enumerate(members):
        classes.setdefault(find(i), []).append(s)
    stars = [OrientedStar(cls) for cls in classes.values()]
    for star in stars:
        if not is_splitting_star(star, members):
            raise TriSepError("computed star fails the splitting definition")
    stars.sort(key=lambda st: [_member_key(s) for s in st.members])
    return stars


def bag_of(g, star):
    """Intersection of the non-leaf sides; the empty star has bag V(G)."""
    bag = set(g.vertices)
    for s in star.members:
        bag &= s.side_b
    return frozenset(bag)


def interlace_kind(g, s, star, context=None):
    """How a separation meets a star: none, light, heavy, or not-applicable.

    Only strong nontrivial tri-separations interlace lightly or heavily;
    light means both strict sides induce at least two components.
    """
    flags = tri_flags(g, s)
    if not (flags.is_tri and flags.is_strong and flags.is_nontrivial):
        return "not-applicable"
    for t in star.members:
        if not (lt(t, s) or lt(t, s.flip())):
            return "none"
    adj = g.adj_masks
    comps_a = kernels.component_count(adj, g.mask_of(s.side_a - s.side_b))
    comps_b = kernels.component_count(adj, g.mask_of(s.side_b - s.side_a))
    if comps_a >= 2 and comps_b >= 2:
        return "light"
    return "heavy"


@dataclass
class TorsoBundle:
    star: OrientedStar
    bag: frozenset
    dot_graph: Graph
    subdivision_map: dict  # separator edge -> subdividing vertex of the dot graph
    iota: dict  # compressed-torso vertex -> dot-graph vertex
    expanded: Graph
    compressed: Graph
    merge: MergeMap  # original vertex -> compressed-torso vertex


def _validated_star_edges(g, star):
    """Separator data per member; asserts matching separators and that no
    edge lies in three or more separators."""
    seps = []
    edge_count = {}
    for s in star.members:
        validate_mixed_separation(g, s, plus=True)
        sep = separator_of(g, s, plus=True)
        seps.append(sep)
        for e in sep.edges:
            edge_count[e] = edge_count.get(e, 0) + 1
    for e, c in edge_count.items():
        if c > 2:
            raise TriSepError(f"edge {e} lies in {c} separators; at most two possible")
    return seps, edge_count


def torsos(g, star):
    """Bag, dot graph, iota, and both torsos of a star of mixed separations+.

    The compressed torso is built by contracting all separator edges and
    taking the torso of the contracted star; it is asserted to equal the
    expanded torso after contracting the same edges, and to be isomorphic
    (via iota) to the torso of the subdivided star in the dot graph.
    """
    seps, edge_count = _validated_star_edges(g, star)
    bag = bag_of(g, star)

    # dot graph: subdivide each edge lying in exactly two separators
    fresh = (max(g.vertices) + 1) if g.vertices else 0
    subdivision_map = {}
    dot_edges = set(g.edges)
    dot_vertices = set(g.vertices)
    for e, c in sorted(edge_count.items()):
        if c == 2:
            w = fresh
            fresh += 1
            subdivision_map[e] = w
            dot_edges.discard(e)
            dot_edges.add((e[0], w))
            dot_edges.add((e[1], w))
            dot_vertices.add(w)
    dot_graph = Graph(dot_vertices, dot_edges)

    # expanded torso
    expanded_sides = []
    for s, sep in zip(star.members, seps):
        extra = {v for e in sep.edges for v in e}
        expanded_sides.append(
            MixedSeparation(s.side_a, frozenset(s.side_b) | extra)
        )
    beta = set(g.vertices)
    for s in expanded_sides:
        beta &= s.side_b
    exp_edges = {e for e in g.edges if e[0] in beta and e[1] in beta}
    for s in expanded_sides:
        sep_set = sorted(s.side_a & s.side_b)
        for i, u in enumerate(sep_set):
            for v in sep_set[i + 1 :]:
                exp_edges.add((u, v))
    expanded = Graph(beta, exp_edges)

    # compressed torso: contract separator edges in g, then take the torso
    merge = {}
    for e, c in sorted(edge_count.items()):
        u, v = e
        keep = v if v in bag else (u if u in bag else min(u, v))
        gone = u if keep == v else v
        merge[gone] = keep
    mm = MergeMap(merge)
    contracted_edges = set()
    for a, b in g.edges:
        ra, rb = mm.resolve(a), mm.resolve(b)
        if ra != rb:
            contracted_edges.add((min(ra, rb), max(ra, rb)))
    contracted = Graph({mm.resolve(v) for v in g.vertices}, contracted_edges)
    cbag = {mm.resolve(v) for v in bag} | {
        mm.resolve(e[0]) for e in edge_count
    }
    comp_edges = {e for e in contracted.edges if e[0] in cbag and e[1] in cbag}
    for s, sep in zip(star.members, seps):
        sep_set = sorted(
            {mm.resolve(v) for v in sep.vertices}
            | {mm.resolve(e[0]) for e in sep.edges}
        )
        for i, u in enumerate(sep_set):
            for v in sep_set[i + 1 :]:
                comp_edges.add((u, v))
    compressed = Graph(cbag, comp_edges)

    # cross-check: contracting the separator edges inside the expanded torso
    # yields the compressed torso
    exp_contract_edges = set()
    for a, b in expanded.edges:
        ra, rb = mm.resolve(a), mm.resolve(b)
        if ra != rb:
            exp_contract_edges.add((min(ra, rb), max(ra, rb)))
    alt = Graph({mm.resolve(v) for v in expanded.vertices}, exp_contract_edges)
    if alt != compressed:
        raise TriSepError("compressed torso mismatch between constructions")

    # iota into the dot graph
    iota = {}
    branch_of = {}
    for e, c in edge_count.items():
        u, v = e
        keep = mm.resolve(u)
        branch_of.setdefault(keep, set()).update(e)
    for x in compressed.vertices:
        if x not in branch_of:
            iota[x] = x
        else:
            branch = branch_of[x]
            doubled = [
                e
                for e in edge_count
                if edge_count[e] == 2 and set(e) <= branch
            ]
            in_bag = branch & bag
            if len(branch) == 2 and doubled:
                iota[x] = subdivision_map[doubled[0]]
            elif len(in_bag) == 1:
                iota[x] = next(iter(in_bag))
            else:
                raise TriSepError("contraction branch has no canonical image")

    bundle = TorsoBundle(
        star=star,
        bag=bag,
        dot_graph=dot_graph,
        subdivision_map=subdivision_map,
        iota=iota,
        expanded=expanded,
        compressed=compressed,
        merge=mm,
    )
    _assert_dot_star_isomorphism(g, bundle)
    return bundle


def dotted_star(g, star, subdivision_map):
    """The star in the dot graph: subdividing vertices join both sides of
    their edge's separations; otherwise the B-endpoint extends the A side."""
    out = []
    for s in star.members:
        sep = separator_of(g, s, plus=True)
        add_a, add_b = set(), set()
        for e in sep.edges:
            if e in subdivision_map:
                w = subdivision_map[e]
                add_a.add(w)
                add_b.add(w)
            else:
                u, v = e
                add_a.add(v if v in s.side_b else u)
        out.append(
            MixedSeparation(s.side_a | add_a, s.side_b | add_b)
        )
    return out


def _assert_dot_star_isomorphism(g, bundle):
    """iota must be a graph isomorphism from the compressed torso onto the
    torso of the dotted star in the dot graph."""
    dstar = dotted_star(g, bundle.star, bundle.subdivision_map)
    dot = bundle.dot_graph
    beta = set(dot.vertices)
    for s in dstar:
        beta &= s.side_b
    edges = {e for e in dot.edges if e[0] in beta and e[1] in beta}
    for s in dstar:
        sep_set = sorted(s.side_a & s.side_b)
        for i, u in enumerate(sep_set):
            for v in sep_set[i + 1 :]:
                edges.add((min(u, v), max(u, v)))
    dot_torso = Graph(beta, edges)
    iota = bundle.iota
    if set(iota.keys()) != set(bundle.compressed.vertices):
        raise TriSepError("iota domain mismatch")
    if set(iota.values()) != set(dot_torso.vertices):
        raise TriSepError("iota image mismatch")
    for u, v in bundle.compressed.edges:
        if not dot_torso.has_edge(iota[u], iota[v]):
            raise TriSepError("iota does not preserve edges")
    if bundle.compressed.m != dot_torso.m:
        raise TriSepError("iota is not onto the dot-torso edges")


def principal_star_raw(g, u_set):
    """The star of 3-separations induced by a 3-vertex set: one leaf per
    component of G - U."""
    u_set = frozenset(u_set)
    if len(u_set) != 3:
        raise TriSepError("principal star needs a 3-vertex set")
    comps = components(g, removed_vertices=u_set)
    if len(comps) < 3:
        raise TriSepError("G - U must have at least three components")
    members = []
    for comp in comps:
        members.append(
            MixedSeparation(comp | u_set, frozenset(g.vertices) - comp)
        )
    return OrientedStar(members)


@dataclass(frozen=True)
class PrincipalTriStar:
    principal_3seps: OrientedStar
    reduced: OrientedStar
    nontrivial_reduced: OrientedStar


def principal_tri_star(g, u_set, verify=True):
    """Principal 3-separations of U, their reductions, and the nontrivial
    ones; when U is pairwise 4-linked the latter is asserted to be a
    splitting star of the totally-nested nontrivial tri-separations."""
    require_three_connected(g)
    raw = principal_star_raw(g, u_set)
    reduced = OrientedStar([reduction(g, s) for s in raw.members])
    nontrivial = OrientedStar(
        [s for s in reduced.members if tri_flags(g, s).is_nontrivial]
    )
    u_list = sorted(u_set)
    four_linked = all(
        count_disjoint_paths(g, u_list[i], u_list[j]) >= 4
        for i in range(3)
        for j in range(i + 1, 3)
    )
    if verify and four_linked:
        ana = analyze(g)
        n_family = [ana.separation(p) for p in ana.n_pairs()]
        if not is_splitting_star(nontrivial, n_family):
            raise TriSepError(
                "principal tri-star of a 4-linked set must split the nested family"
            )
        for s in nontrivial.members:
            if s not in n_family:
                raise TriSepError("principal tri-star member not totally nested")
    return PrincipalTriStar(raw, reduced, nontrivial)


def lift_separation(star_members, vertex_set, side_a, side_b):
    """Lifting: extend a torso separation to the whole graph.

    star_members are separations+ (vertex separators) of the host graph;
    (side_a, side_b) is a separation of their torso.  Strict leaf sides
    join side_a exactly when their separator lies inside side_a.
    """
    a, b = set(side_a), set(side_b)
    for s in star_members:
        sep = s.side_a & s.side_b
        strict = s.side_a - s.side_b
        if sep <= a:
            a |= strict
        else:
            b |= strict
    return frozenset(a), frozenset(b)


def hyper_lift(g, star, t):
    """Transfer a separation of the compressed torso back to g.

    Composes iota, the lifting of the dotted star in the dot graph, and the
    restriction to V(g)."""
    bundle = torsos(g, star)
    return hyper_lift_from_bundle(g, bundle, t)


def hyper_lift_from_bundle(g, bundle, t):
    iota = bundle.iota
    c0 = {iota[v] for v in t.side_a}
    d0 = {iota[v] for v in t.side_b}
    dstar = dotted_star(g, bundle.star, bundle.subdivision_map)
    chat, dhat = lift_separation(dstar, set(bundle.dot_graph.vertices), c0, d0)
    vg = set(g.vertices)
    return MixedSeparation(chat & vg, dhat & vg)
