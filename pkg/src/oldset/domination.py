"""Exact OLD numbers by exhaustive search and by branch and bound.

S is an OLD set when every vertex sees S (total domination) and no two
vertices see the same part of S (location): the traces N(v) & S must be
nonempty and pairwise distinct.  gamma_OL is the least |S|.  Only
locatable graphs (no isolated vertices, no open twins) admit any OLD
set, and for those V itself always works.

Both solvers return the same gamma and the same witness: the OLD set of
minimum size whose mask is numerically least.  The brute-force solver
guarantees this by scanning each cardinality in ascending mask order;
the branch-and-bound solver re-derives it after the optimum is known,
scanning only size-gamma supersets of the forced vertices, which is
sound because every OLD set contains every forced vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forced import classify_forced
from .graphs import (
    Graph,
    NotLocatableError,
    VertexSet,
    connected_components,
    is_locatable,
    iter_bits,
    vertices_of,
)

__all__ = [
    "NotLocatableError",
    "SolveResult",
    "is_total_dominating",
    "locates",
    "is_old_set",
    "old_number_bruteforce",
    "old_number",
    "old_number_disconnected",
    "BRUTEFORCE",
    "BRANCH_AND_BOUND",
]

BRUTEFORCE = "bruteforce"
BRANCH_AND_BOUND = "branch-and-bound"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one exact solve.

    witness is the optimal OLD set as a mask, nodes_explored counts the
    candidate sets (brute force) or search-tree nodes (branch and bound)
    examined before the optimum was proven.
    """

    gamma: int
    witness: VertexSet
    nodes_explored: int
    method: str


def is_total_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff every vertex of g has a neighbour in s."""
    return all(g.adj[v] & s for v in range(g.n))


def locates(g: Graph, s: VertexSet, v: int) -> bool:
    """True iff no other vertex has the same trace on s as v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} is not in 0..{g.n - 1}")
    trace = g.adj[v] & s
    return all(g.adj[w] & s != trace for w in range(g.n) if w != v)


def is_old_set(g: Graph, s: VertexSet) -> bool:
    """True iff s is total dominating and all traces are distinct."""
    seen = set()
    for v in range(g.n):
        trace = g.adj[v] & s
        if trace == 0 or trace in seen:
            return False
        seen.add(trace)
    return True


def _require_locatable(g: Graph) -> None:
    if not is_locatable(g):
        raise NotLocatableError(g)


def _next_same_popcount(s: int) -> int:
    # Gosper's hack: least integer above s with the same bit count
    low = s & -s
    ripple = s + low
    return (((s ^ ripple) >> 2) // low) | ripple


def old_number_bruteforce(g: Graph) -> SolveResult:
    """gamma_OL by scanning all vertex subsets in size-then-value order.

    The first OLD set encountered is therefore the lexicographically
    least optimal witness.  Exponential in n; fine through n around 10.
    """
    _require_locatable(g)
    n = g.n
    if n == 0:
        return SolveResult(0, 0, 0, BRUTEFORCE)
    nodes = 0
    limit = 1 << n
    for size in range(1, n + 1):
        s = (1 << size) - 1
        while s < limit:
            nodes += 1
            if is_old_set(g, s):
                return SolveResult(size, s, nodes, BRUTEFORCE)
            s = _next_same_popcount(s)
    raise AssertionError("V(G) is an OLD set of every locatable graph")


def _lex_min_witness(g: Graph, forced: VertexSet, gamma: int) -> VertexSet:
    """Least mask of an OLD set with exactly gamma vertices.

    Every OLD set contains forced, so candidates are forced plus a
    choice of free vertices; choices are swept in ascending mask order,
    which is ascending order of the full candidate mask as well.
    """
    free = [v for v in range(g.n) if not forced >> v & 1]
    spare = gamma - forced.bit_count()
    if spare == 0:
        return forced
    pick = (1 << spare) - 1
    limit = 1 << len(free)
    while pick < limit:
        s = forced
        for i in iter_bits(pick):
            s |= 1 << free[i]
        if is_old_set(g, s):
            return s
        pick = _next_same_popcount(pick)
    raise AssertionError("an OLD set of the optimal size must exist")


def old_number(g: Graph) -> SolveResult:
    """gamma_OL by branch and bound over the non-forced vertices.

    Forced vertices are committed up front.  Branching follows a static
    order, most separating vertex first; a branch dies when the chosen
    set reaches the incumbent size or when even the chosen set plus all
    undecided vertices fails domination or location.  When every vertex
    is forced the root is immediately optimal (one node explored).
    """
    _require_locatable(g)
    n = g.n
    if n == 0:
        return SolveResult(0, 0, 0, BRANCH_AND_BOUND)
    adj = g.adj
    forced = classify_forced(g).forced

    # how many separating pairs each vertex settles, for the branch order
    weight = [0] * n
    for x in range(n):
        for y in range(x + 1, n):
            for v in iter_bits(adj[x] ^ adj[y]):
                weight[v] += 1
    order = sorted(
        (v for v in range(n) if not forced >> v & 1),
        key=lambda v: (-weight[v], v),
    )
    # undecided[i] = free vertices still open at depth i
    undecided = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        undecided[i] = undecided[i + 1] | 1 << order[i]

    best: int | None = None
    nodes = 0

    def feasible(reachable: VertexSet) -> bool:
        seen = set()
        for v in range(n):
            trace = adj[v] & reachable
            if trace == 0 or trace in seen:
                return False
            seen.add(trace)
        return True

    def descend(chosen: VertexSet, depth: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if best is not None and chosen.bit_count() >= best:
            return
        if is_old_set(g, chosen):
            best = chosen.bit_count()
            return
        if depth == len(order) or not feasible(chosen | undecided[depth]):
            return
        v = order[depth]
        descend(chosen | 1 << v, depth + 1)
        descend(chosen, depth + 1)

    descend(forced, 0)
    assert best is not None
    return SolveResult(best, _lex_min_witness(g, forced, best), nodes, BRANCH_AND_BOUND)


def old_number_disconnected(g: Graph) -> SolveResult:
    """gamma_OL of a possibly disconnected graph, component by component.

    Traces never cross a component boundary, so gamma_OL adds up and the
    union of per-component least witnesses is the least witness overall.
    """
    _require_locatable(g)
    parts = connected_components(g)
    if len(parts) <= 1:
        return old_number(g)
    gamma = 0
    witness = 0
    nodes = 0
    for sub, kept in parts:
        result = old_number(sub)
        gamma += result.gamma
        nodes += result.nodes_explored
        for v in vertices_of(result.witness):
            witness |= 1 << kept[v]
    return SolveResult(gamma, witness, nodes, BRANCH_AND_BOUND)
