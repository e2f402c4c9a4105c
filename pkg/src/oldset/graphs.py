"""Bitset-backed simple graphs and the structural predicates used throughout.

Vertices of an order-n graph are the integers 0..n-1, and every set of
vertices is an int whose bit v stands for vertex v.  Neighbourhoods,
solver states, and certificates all share this one currency, so set
algebra is plain word arithmetic: union is ``|``, intersection ``&``,
symmetric difference ``^``, cardinality ``int.bit_count``.  Python ints
are unbounded, so no graph order needs special casing.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "VertexSet",
    "NotLocatableError",
    "mask_of",
    "iter_bits",
    "vertices_of",
    "from_edges",
    "open_neighbourhood",
    "open_twins",
    "is_locatable",
    "is_connected",
    "component_masks",
    "connected_components",
    "induced_subgraph",
    "disjoint_union",
    "canonical_form",
    "CANONICAL_ORDER_LIMIT",
]

# A set of vertices, encoded one bit per vertex.
VertexSet = int


def mask_of(vertices: Iterable[int]) -> VertexSet:
    """Pack an iterable of vertex indices into a vertex-set mask."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield the vertices of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertices_of(mask: VertexSet) -> list[int]:
    """Unpack a mask into a sorted list of vertex indices."""
    return list(iter_bits(mask))


class Graph:
    """Immutable simple graph on vertex set {0, ..., n-1}.

    ``adj[v]`` is the open neighbourhood N(v) as a vertex-set mask.  The
    adjacency tuple fully determines the graph; equality and hashing are
    label-sensitive (use :func:`canonical_form` to compare up to
    isomorphism).
    """

    __slots__ = ("n", "adj", "_canon")

    n: int
    adj: tuple[VertexSet, ...]

    def __init__(self, n: int, adj: Iterable[VertexSet]):
        adj = tuple(adj)
        if n < 0:
            raise ValueError("graph order must be nonnegative")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"neighbourhood of {v} mentions a vertex >= {n}")
            if row >> v & 1:
                raise ValueError(f"vertex {v} has a self-loop")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        # immutability guard breaks slot-based pickling; rebuild instead
        return (Graph, (self.n, self.adj))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build an order-n graph from an edge list.

    Duplicate edges collapse; self-loops and endpoints outside 0..n-1 are
    rejected.
    """
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) leaves the vertex range 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def open_neighbourhood(g: Graph, v: int) -> VertexSet:
    """N(v) as a mask; v itself is never included."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} is not in 0..{g.n - 1}")
    return g.adj[v]


def open_twins(g: Graph) -> list[tuple[int, int]]:
    """All pairs u < v with N(u) = N(v), sorted lexicographically.

    Open twins are never separated by any vertex subset, so a graph with
    such a pair has no OLD set.
    """
    by_nbhd: dict[VertexSet, list[int]] = {}
    for v in range(g.n):
        by_nbhd.setdefault(g.adj[v], []).append(v)
    pairs = [
        (u, v)
        for group in by_nbhd.values()
        for i, u in enumerate(group)
        for v in group[i + 1 :]
    ]
    pairs.sort()
    return pairs


def is_locatable(g: Graph) -> bool:
    """True iff g has no isolated vertex and no open twins.

    Exactly these graphs admit an OLD set (the whole vertex set then
    works).  The order-0 graph is vacuously locatable.
    """
    seen = set()
    for v in range(g.n):
        row = g.adj[v]
        if row == 0 or row in seen:
            return False
        seen.add(row)
    return True


class NotLocatableError(ValueError):
    """The graph has no OLD set; carries the obstructions found."""

    def __init__(self, g: Graph):
        self.isolated = [v for v in range(g.n) if g.adj[v] == 0]
        self.twins = open_twins(g)
        parts = []
        if self.isolated:
            parts.append("isolated vertices " + str(self.isolated))
        if self.twins:
            parts.append("open twins " + str(self.twins))
        super().__init__("no OLD set exists: " + "; ".join(parts))


def _closure(g: Graph, seed: VertexSet) -> VertexSet:
    """Union of seed with everything reachable from it."""
    reached = seed
    frontier = seed
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~reached
        reached |= frontier
    return reached


def is_connected(g: Graph) -> bool:
    """True iff g has at most one connected component (so also for n <= 1)."""
    if g.n <= 1:
        return True
    return _closure(g, 1) == (1 << g.n) - 1


def component_masks(g: Graph) -> list[VertexSet]:
    """Vertex masks of the connected components, ordered by least vertex."""
    masks = []
    remaining = (1 << g.n) - 1
    while remaining:
        seed = remaining & -remaining
        comp = _closure(g, seed)
        masks.append(comp)
        remaining &= ~comp
    return masks


def induced_subgraph(g: Graph, mask: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on the vertices of mask.

    Returns (subgraph, kept) where kept[i] is the original label of the
    subgraph's vertex i; kept is increasing.
    """
    if mask & ~((1 << g.n) - 1):
        raise ValueError("mask mentions a vertex outside the graph")
    kept = vertices_of(mask)
    index = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(kept), rows), tuple(kept)


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """The components as standalone graphs, each with its label map.

    Component order follows the least original vertex.  Each entry is
    (component, kept) with kept as in :func:`induced_subgraph`.
    """
    return [induced_subgraph(g, mask) for mask in component_masks(g)]


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g2's vertices are shifted up by g1.n."""
    shifted = tuple(row << g1.n for row in g2.adj)
    return Graph(g1.n + g2.n, g1.adj + shifted)


# ---------------------------------------------------------------------------
# Canonical form


# Orders above this need an explicit opt-in: the labeling search is
# exponential in the worst case and meant for the small-graph regime.
CANONICAL_ORDER_LIMIT = 10


def _g6_bytes(n: int, adj: tuple[VertexSet, ...]) -> bytes:
    """Raw graph6 encoding of an adjacency tuple (no trailing newline).

    Size comes first: one byte n+63 for n <= 62, then the '~' and '~~'
    big-endian forms for larger n.  The upper triangle follows in column
    major order, packed big-endian six bits per byte, each offset by 63,
    with zero padding to a byte boundary.
    """
    out = bytearray()
    if n <= 62:
        out.append(63 + n)
    elif n <= 258047:
        out.append(126)
        out.extend(63 + (n >> shift & 63) for shift in (12, 6, 0))
    elif n <= 68719476735:
        out.extend((126, 126))
        out.extend(63 + (n >> shift & 63) for shift in (30, 24, 18, 12, 6, 0))
    else:
        raise ValueError("graph6 cannot encode an order above 2^36 - 1")
    buf = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            buf = buf << 1 | adj[col] >> row & 1
            nbits += 1
            if nbits == 6:
                out.append(63 + buf)
                buf = 0
                nbits = 0
    if nbits:
        out.append(63 + (buf << (6 - nbits)))
    return bytes(out)


def _twin_masks(g: Graph) -> list[VertexSet]:
    """twin[v] marks every u != v whose swap with v is an automorphism.

    That holds exactly when N(u) - v = N(v) - u: equal neighbourhoods
    (open twins) or equal-after-removing-each-other plus the edge uv
    (closed twins).
    """
    twin = [0] * g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                twin[u] |= 1 << v
                twin[v] |= 1 << u
    return twin


def canonical_form(g: Graph, max_order: int = CANONICAL_ORDER_LIMIT) -> bytes:
    """A byte string equal for two graphs iff they are isomorphic.

    The certificate is the graph6 encoding of the least adjacency matrix
    obtainable by relabeling, minimised over the labelings that list
    vertices in nondecreasing degree order.  Degree profiles are
    isomorphism-invariant, so restricting to that candidate set keeps
    the certificate complete while cutting the search sharply.

    The search walks labelings depth first, one position at a time,
    comparing the next adjacency column against the best certificate
    found so far and pruning as soon as the prefix is beaten.  Vertices
    interchangeable by a transposition (twins) are tried once per
    position.  Raises ValueError beyond max_order rather than stalling.
    """
    try:
        return g._canon
    except AttributeError:
        pass
    n = g.n
    if n > max_order:
        raise ValueError(
            f"canonical_form on order {n} exceeds max_order={max_order}; "
            "raise max_order to opt in"
        )
    if n <= 1:
        cert = _g6_bytes(n, g.adj)
        object.__setattr__(g, "_canon", cert)
        return cert

    adj = g.adj
    degs = [row.bit_count() for row in adj]
    slot_degs = sorted(degs)
    twin = _twin_masks(g)

    placed: list[int] = []
    cols = [0] * n
    best: list[int] | None = None
    best_perm: list[int] | None = None
    # bumped on every best improvement; lets an ancestor notice that the
    # current prefix now matches best exactly
    version = 0

    def descend(slot: int, tight: bool) -> None:
        nonlocal best, best_perm, version
        if slot == n:
            if best is None or not tight:
                best = cols.copy()
                best_perm = placed.copy()
                version += 1
            return
        want = slot_degs[slot]
        used = mask_of(placed)
        ranked = []
        for v in range(n):
            if used >> v & 1 or degs[v] != want:
                continue
            col = 0
            row = adj[v]
            for u in placed:
                col = col << 1 | row >> u & 1
            ranked.append((col, v))
        ranked.sort()
        tried = 0
        for col, v in ranked:
            if twin[v] & tried:
                continue
            tried |= 1 << v
            if best is not None and tight:
                if col > best[slot]:
                    break
                deeper_tight = col == best[slot]
            else:
                deeper_tight = False
            cols[slot] = col
            placed.append(v)
            mark = version
            descend(slot + 1, deeper_tight)
            placed.pop()
            if version != mark:
                # best now extends this very prefix
                tight = True
        return

    descend(0, False)
    assert best_perm is not None
    index = {v: slot for slot, v in enumerate(best_perm)}
    rows = [0] * n
    for slot, v in enumerate(best_perm):
        for u in iter_bits(adj[v]):
            rows[slot] |= 1 << index[u]
    cert = _g6_bytes(n, tuple(rows))
    object.__setattr__(g, "_canon", cert)
    return cert
