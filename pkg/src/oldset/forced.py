"""Vertices forced into every OLD set, and what their absence would break.

A vertex can be forced two ways.  If some w has N(w) = {v}, only v can
dominate w, so v is domination-forced.  If some pair x, y has symmetric
difference N(x) xor N(y) = {v}, only v can tell x from y, so v is
location-forced.  These are necessity certificates, and they are also
jointly exhaustive in the complement: a vertex forced neither way can be
dropped, because V - {v} still open-dominates everything (no N(w) shrank
to nothing) and still separates every pair (no symmetric difference
shrank to nothing).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, NotLocatableError, VertexSet, is_locatable

__all__ = [
    "ForcedClassification",
    "domination_forced",
    "location_forced",
    "classify_forced",
    "removable_vertex",
    "bondy_check",
]


@dataclass(frozen=True)
class ForcedClassification:
    """Partition of V into forced and unforced vertices, with witnesses.

    The two forced masks may overlap; unforced is their joint
    complement.  domination_witness[v] is the least w whose whole
    neighbourhood is {v}; location_witness[v] is the lexicographically
    least pair (x, y), x < y, with N(x) xor N(y) = {v}.
    """

    domination_forced: VertexSet
    location_forced: VertexSet
    unforced: VertexSet
    domination_witness: dict[int, int] = field(compare=False)
    location_witness: dict[int, tuple[int, int]] = field(compare=False)

    @property
    def forced(self) -> VertexSet:
        return self.domination_forced | self.location_forced


def domination_forced(g: Graph) -> dict[int, int]:
    """Map each domination-forced vertex to its least witness w."""
    witness: dict[int, int] = {}
    for w in range(g.n):
        row = g.adj[w]
        if row and row & (row - 1) == 0:
            v = row.bit_length() - 1
            witness.setdefault(v, w)
    return witness


def location_forced(g: Graph) -> dict[int, tuple[int, int]]:
    """Map each location-forced vertex to its least witness pair (x, y)."""
    witness: dict[int, tuple[int, int]] = {}
    for x in range(g.n):
        for y in range(x + 1, g.n):
            diff = g.adj[x] ^ g.adj[y]
            if diff and diff & (diff - 1) == 0:
                v = diff.bit_length() - 1
                witness.setdefault(v, (x, y))
    return witness


def classify_forced(g: Graph) -> ForcedClassification:
    """Classify every vertex of g; masks cover V exactly once over."""
    dom = domination_forced(g)
    loc = location_forced(g)
    dom_mask = 0
    for v in dom:
        dom_mask |= 1 << v
    loc_mask = 0
    for v in loc:
        loc_mask |= 1 << v
    unforced = (1 << g.n) - 1 & ~(dom_mask | loc_mask)
    return ForcedClassification(dom_mask, loc_mask, unforced, dom, loc)


def removable_vertex(g: Graph) -> int | None:
    """Least unforced vertex, or None when every vertex is forced.

    Removing the returned vertex leaves an OLD set: V - {v} keeps every
    neighbourhood trace nonempty and every pair of traces distinct, by
    the exhaustiveness argument in the module docstring.
    """
    if not is_locatable(g):
        raise NotLocatableError(g)
    unforced = classify_forced(g).unforced
    if unforced == 0:
        return None
    return (unforced & -unforced).bit_length() - 1


def bondy_check(g: Graph) -> int:
    """Number of location-forced vertices; always at most max(n - 1, 0).

    Bondy's theorem on induced subsets bounds the distinct-singleton
    symmetric differences a family of n sets can realise, so n vertices
    can never all be location-forced.
    """
    if not is_locatable(g):
        raise NotLocatableError(g)
    return len(location_forced(g))
