"""Solve a handful of named small graphs and print what the solver sees.

Run:  python3 demos/solve_small_graphs.py
"""

from __future__ import annotations

from oldset import (
    NotLocatableError,
    classify_forced,
    from_edges,
    half_graph,
    old_number,
    to_graph6,
    vertices_of,
)


def _path(n):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n):
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n):
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


ZOO = [
    ("P_4", _path(4)),
    ("P_5", _path(5)),
    ("C_4", _cycle(4)),
    ("C_7", _cycle(7)),
    ("K_3", _complete(3)),
    ("K_4", _complete(4)),
    ("H_3", half_graph(3)),
    ("Petersen", _petersen()),
]


def main() -> None:
    for name, g in ZOO:
        head = f"{name:<9} {to_graph6(g):<14} n={g.n:<3}"
        try:
            result = old_number(g)
        except NotLocatableError as err:
            print(f"{head} no OLD set ({err})")
            continue
        forced = classify_forced(g)
        print(
            f"{head} gamma_OL={result.gamma}  "
            f"witness={vertices_of(result.witness)}  "
            f"forced={vertices_of(forced.forced)}  "
            f"nodes={result.nodes_explored}"
        )


if __name__ == "__main__":
    main()
