"""Mixed separations: separators, order, nestedness, corner diagrams,
and exhaustive enumeration of mixed k-separations (k <= 3).

A mixed separation of G is an oriented pair (A, B) of vertex sets with
A u B = V(G) and both strict sides nonempty; its separator is the disjoint
union of A n B and the edge set E(A \\ B, B \\ A).  The relaxed "plus"
variant drops the nonemptiness requirement and instead asks the separator
edges to form a matching.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import total_ordering

from . import kernels
from .errors import BudgetExceededError, InvalidSeparationError

DEFAULT_ENUM_BUDGET = 10_000_000


def enum_budget():
    val = os.environ.get("TRISEP_BUDGET")
    return int(val) if val else DEFAULT_ENUM_BUDGET


@total_ordering
class MixedSeparation:
    """Oriented pair of sides; (A, B) and (B, A) are distinct values."""

    __slots__ = ("side_a", "side_b", "_hash")

    def __init__(self, side_a, side_b):
        self.side_a = frozenset(side_a)
        self.side_b = frozenset(side_b)
        self._hash = hash((self.side_a, self.side_b))

    def flip(self):
        return MixedSeparation(self.side_b, self.side_a)

    def __eq__(self, other):
        return (
            isinstance(other, MixedSeparation)
            and self.side_a == other.side_a
            and self.side_b == other.side_b
        )

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (sorted(self.side_a), sorted(self.side_b)) < (
            sorted(other.side_a),
            sorted(other.side_b),
        )

    def __repr__(self):
        return f"MixedSeparation({sorted(self.side_a)}, {sorted(self.side_b)})"


@dataclass(frozen=True)
class Separator:
    vertices: frozenset
    edges: frozenset

    @property
    def order(self):
        return len(self.vertices) + len(self.edges)

    def elements(self):
        """Separator elements, vertices then edges, each sorted.

        Vertices are encoded as 1-tuples so the encoding orders uniformly.
        """
        return tuple((v,) for v in sorted(self.vertices)) + tuple(sorted(self.edges))


def _cross_edges(g, strict_a, strict_b):
    return frozenset(
        e
        for e in g.edges
        if (e[0] in strict_a and e[1] in strict_b)
        or (e[0] in strict_b and e[1] in strict_a)
    )


def validate_mixed_separation(g, s, plus=False):
    if (s.side_a | s.side_b) != frozenset(g.vertices):
        raise InvalidSeparationError("sides must cover exactly the vertex set")
    strict_a = s.side_a - s.side_b
    strict_b = s.side_b - s.side_a
    if plus:
        ends = []
        for e in _cross_edges(g, strict_a, strict_b):
            ends.extend(e)
        if len(ends) != len(set(ends)):
            raise InvalidSeparationError(
                "separator edges of a mixed separation+ must share no endvertices"
            )
    else:
        if not strict_a or not strict_b:
            raise InvalidSeparationError("both strict sides must be nonempty")


def separator_of(g, s, plus=False):
    """The separator of a (validated) mixed separation of g."""
    validate_mixed_separation(g, s, plus=plus)
    strict_a = s.side_a - s.side_b
    strict_b = s.side_b - s.side_a
    return Separator(frozenset(s.side_a & s.side_b), _cross_edges(g, strict_a, strict_b))


def order_of(g, s, plus=False):
    return separator_of(g, s, plus=plus).order


def le(s1, s2):
    """(A1,B1) <= (A2,B2) iff A1 is a subset of A2 and B1 a superset of B2."""
    return s1.side_a <= s2.side_a and s1.side_b >= s2.side_b


def lt(s1, s2):
    return le(s1, s2) and s1 != s2


def is_nested(s1, s2):
    return (
        le(s1, s2)
        or le(s1, s2.flip())
        or le(s1.flip(), s2)
        or le(s1.flip(), s2.flip())
    )


@dataclass(frozen=True)
class Relation:
    le: bool
    ge: bool
    nested: bool
    crosses: bool


def relate(s1, s2):
    l, g_ = le(s1, s2), le(s2, s1)
    nested = is_nested(s1, s2)
    return Relation(le=l, ge=g_, nested=nested, crosses=not nested)


CORNER_KEYS = ("AC", "AD", "BC", "BD")
SIDE_KEYS = ("A", "B", "C", "D")
_ADJACENT_LINKS = {"AC": ("A", "C"), "AD": ("A", "D"), "BC": ("B", "C"), "BD": ("B", "D")}
_OPPOSITE_CORNER = {"AC": "BD", "AD": "BC", "BC": "AD", "BD": "AC"}


@dataclass(frozen=True)
class Link:
    vertices: frozenset
    edges: frozenset

    @property
    def size(self):
        return len(self.vertices) + len(self.edges)


@dataclass(frozen=True)
class CornerDiagram:
    """Corners, links, centre, jumping edges and corner-separators of a pair
    of mixed separations (crossing or not)."""

    corners: dict
    links: dict
    centre: Link
    jumping_edges: frozenset
    corner_separators: dict

    def is_nested(self):
        """Some corner together with its two adjacent links is empty."""
        for key in CORNER_KEYS:
            if self.corners[key]:
                continue
            la, lb = _ADJACENT_LINKS[key]
            if self.links[la].size == 0 and self.links[lb].size == 0:
                return True
        return False


def corner_diagram(g, s1, s2):
    validate_mixed_separation(g, s1)
    validate_mixed_separation(g, s2)
    a, b = s1.side_a, s1.side_b
    c, d = s2.side_a, s2.side_b
    sab = a & b
    scd = c & d
    strict = {
        "A": a - b,
        "B": b - a,
        "C": c - d,
        "D": d - c,
    }
    corners = {
        "AC": frozenset(strict["A"] & strict["C"]),
        "AD": frozenset(strict["A"] & strict["D"]),
        "BC": frozenset(strict["B"] & strict["C"]),
        "BD": frozenset(strict["B"] & strict["D"]),
    }
    e1 = _cross_edges(g, strict["A"], strict["B"])
    e2 = _cross_edges(g, strict["C"], strict["D"])
    diagonal = e1 & e2
    centre = Link(frozenset(a & b & c & d), diagonal)

    def edge_link(edges, corner1, corner2):
        out = set()
        for e in edges - diagonal:
            u, v = e
            if u in corners[corner1] or v in corners[corner1]:
                out.add(e)
            elif u in corners[corner2] or v in corners[corner2]:
                out.add(e)
        return frozenset(out)

    links = {
        "A": Link(frozenset(scd - b), edge_link(e2, "AC", "AD")),
        "B": Link(frozenset(scd - a), edge_link(e2, "BC", "BD")),
        "C": Link(frozenset(sab - d), edge_link(e1, "AC", "BC")),
        "D": Link(frozenset(sab - c), edge_link(e1, "AD", "BD")),
    }
    placed = diagonal | links["A"].edges | links["B"].edges | links["C"].edges | links["D"].edges
    jumping = frozenset((e1 | e2) - placed)

    corner_separators = {}
    for key in CORNER_KEYS:
        la, lb = _ADJACENT_LINKS[key]
        verts = links[la].vertices | links[lb].vertices | centre.vertices
        edges = set(links[la].edges | links[lb].edges)
        for e in diagonal:
            if e[0] in corners[key] or e[1] in corners[key]:
                edges.add(e)
        corner_separators[key] = Link(frozenset(verts), frozenset(edges))

    diagram = CornerDiagram(
        corners=corners,
        links=links,
        centre=centre,
        jumping_edges=jumping,
        corner_separators=corner_separators,
    )
    return diagram


def separation_sort_key(g, s):
    sep = separator_of(g, s)
    return (sep.elements(), tuple(sorted(s.side_a)))


def enumerate_mixed_separations(g, order, budget=None):
    """Every oriented mixed `order`-separation of g, deterministically sorted.

    Candidate separators (X vertices, F edges) are enumerated directly; the
    components of G - X - F are 2-colored so that every F-edge crosses and
    both classes are nonempty.  The output contains both orientations of
    every separation.
    """
    if budget is None:
        budget = enum_budget()
    try:
        pairs = kernels.enumerate_mixed(g.adj_masks, g.mask_size, order, budget)
    except ValueError as exc:
        if "budget" in str(exc):
            raise BudgetExceededError(
                f"mixed {order}-separation enumeration exceeded budget {budget}"
            ) from exc
        raise
    out = [
        MixedSeparation(g.set_of(am), g.set_of(bm))
        for am, bm in pairs
    ]
    out.sort(key=lambda s: separation_sort_key(g, s))
    return out
