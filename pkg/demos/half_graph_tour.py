"""Walk through one half-graph: structure, forced vertices, peeling.

H_k is the graph on v_1..v_k, w_1..w_k with v_i ~ w_j exactly when
i <= j.  Every vertex is forced into every OLD set, which pins
gamma_OL at 2k, the largest value the order allows.  Peeling removes
the pendant pair (w_k's private neighbour v_k and w_k itself) and
lands on H_{k-1}; iterating walks all the way down to H_1 = K_2.

Run:  python3 demos/half_graph_tour.py --k 5
"""

from __future__ import annotations

import argparse

from oldset import (
    classify_forced,
    half_graph,
    is_half_graph,
    old_number,
    peel,
    to_graph6,
    vertices_of,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=4, help="half of the order (default 4)")
    args = ap.parse_args()
    if args.k < 1:
        ap.error("--k must be positive")

    g = half_graph(args.k)
    k = args.k
    print(f"H_{k}: {to_graph6(g)}  n={g.n}  m={g.edge_count()}")
    print("  v-side degrees:", [g.degree(i) for i in range(k)])
    print("  w-side degrees:", [g.degree(k + j) for j in range(k)])

    forced = classify_forced(g)
    print("  domination-forced:", vertices_of(forced.domination_forced))
    print("  location-forced:  ", vertices_of(forced.location_forced))

    result = old_number(g)
    print(f"  gamma_OL = {result.gamma} = 2k  ({result.nodes_explored} search node)")

    print("peeling down to K_2:")
    while g.n > 2:
        step = peel(g)
        assert step is not None, "half-graphs always peel"
        x, y = step.removed
        g = step.graph
        label = is_half_graph(g)
        assert label is not None
        print(
            f"  removed x={x}, y={y} -> n={g.n}, "
            f"recognized as H_{label.k} ({to_graph6(g)})"
        )


if __name__ == "__main__":
    main()
