"""Isomorph-free enumeration of small connected graphs.

Classes of order n come from classes of order n - 1 by adding one
vertex.  For the connected classes the new vertex's neighbourhood must
meet every component of the parent, and every connected graph arises
this way: delete any vertex, and what was its neighbourhood meets every
component of the rest.  Duplicates are discarded through
:func:`canonical_form`, and representatives are returned canonically
labeled, sorted by certificate, so the stream is deterministic.

Counts through MAX_BUILTIN_ORDER match the standard tables: 1, 1, 2, 6,
21, 112, 853, 11117 connected classes for n = 1..8.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph6 import parse_graph6
from .graphs import Graph, canonical_form, component_masks

__all__ = ["MAX_BUILTIN_ORDER", "enumerate_connected_graphs"]

MAX_BUILTIN_ORDER = 8


def _extend(parent: Graph, mask: int) -> Graph:
    # new vertex parent.n, adjacent to the bits of mask
    n = parent.n + 1
    rows = [row | (mask >> v & 1) << (n - 1) for v, row in enumerate(parent.adj)]
    rows.append(mask)
    return Graph(n, rows)


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class of order n."""
    if n == 0:
        return (Graph(0, ()),)
    seen: dict[bytes, None] = {}
    for parent in _all_classes(n - 1):
        for mask in range(1 << (n - 1)):
            seen.setdefault(canonical_form(_extend(parent, mask)), None)
    return tuple(parse_graph6(cert.decode("ascii")) for cert in sorted(seen))


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return _all_classes(1)
    seen: dict[bytes, None] = {}
    for parent in _all_classes(n - 1):
        parts = component_masks(parent)
        for mask in range(1, 1 << (n - 1)):
            if any(mask & part == 0 for part in parts):
                continue
            seen.setdefault(canonical_form(_extend(parent, mask)), None)
    return tuple(parse_graph6(cert.decode("ascii")) for cert in sorted(seen))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Yield each connected isomorphism class of order n exactly once.

    Representatives are canonically labeled and stream in certificate
    order.  Only 1 <= n <= MAX_BUILTIN_ORDER is built in; larger orders
    are out of scope for the exhaustive machinery.
    """
    if not 1 <= n <= MAX_BUILTIN_ORDER:
        raise ValueError(
            f"built-in enumeration covers 1 <= n <= {MAX_BUILTIN_ORDER}, got {n}"
        )
    yield from _connected_classes(n)
