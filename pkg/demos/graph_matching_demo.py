#!/usr/bin/env python3
"""Colorful perfect matching on a vertex-colored graph.

Builds a random weighted graph with 2k colors, contracts it to its color
graph, solves minimum-weight colorful matching, and compares against the
exhaustive oracle.  Also shows the infeasible case.
"""

from colorspan import (
    VertexColoredGraph,
    brute_force_colorful_graph_matching,
    solve_k_multicolored_matching,
)
from colorspan.generate import generate_colored_graph


def main():
    g = generate_colored_graph(12, 6, seed=2024, edge_prob=0.5)
    print(f"random graph: {g.num_vertices} vertices, {len(g.edges)} edges, "
          f"{g.num_colors} colors")
    got = solve_k_multicolored_matching(g)
    oracle = brute_force_colorful_graph_matching(g)
    if got is None:
        print("no colorful perfect matching exists; oracle agrees:", oracle is None)
    else:
        print("solver  :", got.edges, f"total {got.total_weight:.6f}")
        print("oracle  :", oracle.edges, f"total {oracle.total_weight:.6f}")
        print("values equal exactly:", got.total_weight == oracle.total_weight)

    # Monochromatic edges never help: this instance has edges but no
    # cross-color ones, so it is infeasible.
    mono = VertexColoredGraph(4, [0, 0, 1, 1], [(0, 1), (2, 3)], 2)
    print("\nmonochromatic-only instance solves to:",
          solve_k_multicolored_matching(mono))


if __name__ == "__main__":
    main()
