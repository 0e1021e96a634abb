"""Minor containment by backtracking over connected branch sets."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, TriSepError

DEFAULT_MINOR_BUDGET = 10_000_000


@dataclass
class MinorResult:
    """Outcome of a minor search.

    status is one of "minor", "no-minor", "budget"; budget exhaustion is a
    distinct result and never collapses to False.
    """

    status: str
    branch_sets: dict | None = None

    def __bool__(self):
        if self.status == "budget":
            raise BudgetExceededError(
                "minor search exhausted its budget; result is indeterminate"
            )
        return self.status == "minor"


def is_minor(h, g, budget=DEFAULT_MINOR_BUDGET):
    """Search for h as a minor of g.

    Returns a MinorResult; on success branch_sets maps each h-vertex to a
    connected, pairwise-disjoint vertex set of g, with every h-edge realized
    by an edge between the corresponding branch sets.
    """
    if h.n > g.n or h.m > g.m:
        if h.n > g.n:
            raise TriSepError("minor test expects |V(h)| <= |V(g)|")
        return MinorResult("no-minor")
    if h.n == 0:
        return MinorResult("minor", {})

    gadj = g.adj_masks
    hverts = sorted(h.vertices, key=lambda v: -h.degree(v))
    # prefer an order in which each vertex sees an already-placed neighbour
    order = [hverts[0]]
    rest = hverts[1:]
    while rest:
        pick = next(
            (v for v in rest if any(u in order for u in h.neighbors(v))),
            rest[0],
        )
        order.append(pick)
        rest.remove(pick)

    steps = 0
    branch = {}

    def neighborhood(mask):
        nb = 0
        m = mask
        while m:
            b = m & -m
            m ^= b
            nb |= gadj[b.bit_length() - 1]
        return nb & ~mask

    def place(i, free):
        nonlocal steps
        if i == len(order):
            return True
        x = order[i]
        placed_nbrs = [branch[y] for y in h.neighbors(x) if y in branch]
        max_size = free.bit_count() - (len(order) - i - 1)
        if max_size < 1:
            return False

        def grow(cmask, banned):
            nonlocal steps
            steps += 1
            if steps > budget:
                raise BudgetExceededError
            nb = neighborhood(cmask)
            if all(nb & bm for bm in placed_nbrs):
                branch[x] = cmask
                if place(i + 1, free & ~cmask):
                    return True
                del branch[x]
            if cmask.bit_count() >= max_size:
                return False
            ext = nb & free & ~banned
            tried = 0
            while ext:
                b = ext & -ext
                ext ^= b
                if grow(cmask | b, banned | tried):
                    return True
                tried |= b
            return False

        roots = free
        smaller = 0
        while roots:
            rb = roots & -roots
            roots ^= rb
            if grow(rb, smaller):
                return True
            smaller |= rb
        return False

    try:
        if place(0, g.full_mask):
            return MinorResult(
                "minor", {x: g.set_of(m) for x, m in branch.items()}
            )
        return MinorResult("no-minor")
    except BudgetExceededError:
        return MinorResult("budget")
