"""Isomorph-free enumeration against independent counting oracles."""

from __future__ import annotations

from itertools import combinations, permutations

from oldset import (
    canonical_form,
    enumerate_connected_graphs,
    is_connected,
    to_graph6,
)

# connected classes per order; 1..6 re-derived by the Burnside oracle
# below, 7 and 8 from the standard enumeration tables
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _connected_from_mask(n: int, mask: int, slots: list[tuple[int, int]]) -> bool:
    nb = {v: set() for v in range(n)}
    for index, (u, v) in enumerate(slots):
        if mask >> index & 1:
            nb[u].add(v)
            nb[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for u in nb[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def _burnside_connected_count(n: int) -> int:
    """Connected classes by orbit counting, no canonical forms involved.

    Connectivity is isomorphism-invariant, so Burnside applies to the
    restricted action: classes = average number of connected graphs
    fixed by each permutation.  Fixed graphs are unions of edge-orbits.
    """
    slots = _edge_slots(n)
    index_of = {pair: i for i, pair in enumerate(slots)}
    total = 0
    for perm in permutations(range(n)):
        # orbits of the induced action on edge slots
        orbit_of = {}
        orbits = []
        for i, (u, v) in enumerate(slots):
            if i in orbit_of:
                continue
            orbit = []
            j = i
            while j not in orbit_of:
                orbit_of[j] = len(orbits)
                orbit.append(j)
                a, b = slots[j]
                j = index_of[tuple(sorted((perm[a], perm[b])))]
            orbits.append(orbit)
        for pick in range(1 << len(orbits)):
            mask = 0
            for o, orbit in enumerate(orbits):
                if pick >> o & 1:
                    for j in orbit:
                        mask |= 1 << j
            if _connected_from_mask(n, mask, slots):
                total += 1
    count, remainder = divmod(total, _factorial(n))
    assert remainder == 0
    return count


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _isomorphic_bruteforce(n: int, e1: frozenset, e2: frozenset) -> bool:
    if len(e1) != len(e2):
        return False
    for perm in permutations(range(n)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in e1} == set(e2):
            return True
    return False


def test_smallest_orders_by_hand():
    (k2,) = enumerate_connected_graphs(2)
    assert k2.edges() == [(0, 1)]
    three = list(enumerate_connected_graphs(3))
    assert sorted(g.edge_count() for g in three) == [2, 3]  # P_3 and K_3


def test_counts_match_reference_table():
    for n, expected in CONNECTED_COUNTS.items():
        assert sum(1 for _ in enumerate_connected_graphs(n)) == expected


def test_counts_match_burnside_oracle():
    for n in range(1, 7):
        assert _burnside_connected_count(n) == CONNECTED_COUNTS[n]


def test_representatives_are_connected_distinct_and_canonical():
    for n in range(1, 8):
        certs = set()
        for g in enumerate_connected_graphs(n):
            assert g.n == n
            assert is_connected(g)
            cert = canonical_form(g)
            assert to_graph6(g).encode("ascii") == cert
            certs.add(cert)
        assert len(certs) == CONNECTED_COUNTS[n]


def test_canonical_form_separates_all_small_classes():
    # group every labeled graph on 5 vertices by canonical form, then
    # confirm the grouping with a permutation-search isomorphism oracle
    from oldset import from_edges

    n = 5
    slots = _edge_slots(n)
    by_cert: dict[bytes, list[frozenset]] = {}
    for mask in range(1 << len(slots)):
        edges = frozenset(
            slots[i] for i in range(len(slots)) if mask >> i & 1
        )
        cert = canonical_form(from_edges(n, list(edges)))
        by_cert.setdefault(cert, []).append(edges)
    # 34 classes of graphs on 5 vertices, connected or not
    assert len(by_cert) == 34
    reps = []
    for cert, members in by_cert.items():
        for other in members[1:]:
            assert _isomorphic_bruteforce(n, members[0], other)
        reps.append(members[0])
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            assert not _isomorphic_bruteforce(n, a, b)


def test_rejects_out_of_range_orders():
    for bad in (0, 9, -1):
        try:
            list(enumerate_connected_graphs(bad))
        except ValueError:
            continue
        raise AssertionError(f"order {bad} accepted")
