"""General-graph matching operations.

Four queries on weighted undirected graphs back every solver in this
package: perfect-matching existence, minimum-weight perfect matching,
bottleneck perfect matching (minimize the largest edge) and threshold
perfect matching (maximize the smallest edge).

The weighted optimum comes from the blossom engine after negating and
shifting weights so that minimizing total weight becomes maximizing it.
The bottleneck and threshold variants binary-search the sorted distinct
edge weights, testing perfect-matching existence on the subgraph of edges
at most (respectively at least) the probed threshold; both searches rest
on the monotonicity of existence in the edge set.

Infeasibility (no perfect matching) is reported by returning ``None``;
malformed graphs raise :class:`~colorspan.errors.InvalidInstanceError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from ._blossom import maximum_weight_matching
from .errors import InvalidInstanceError


@dataclass(frozen=True)
class WeightedGraph:
    """A simple undirected graph with non-negative real edge weights.

    Edges are normalized to ``u < v``, sorted, and parallel input edges
    collapse to their minimum weight.  Self-loops, vertex ids outside
    ``[0, num_vertices)``, and negative or non-finite weights are rejected.
    """

    num_vertices: int
    edges: tuple[tuple[int, int, float], ...]

    def __init__(self, num_vertices: int, edges: Iterable[tuple[int, int, float]] = ()):
        if num_vertices < 0:
            raise InvalidInstanceError("vertex count must be non-negative")
        collapsed: dict[tuple[int, int], float] = {}
        for u, v, w in edges:
            if u == v:
                raise InvalidInstanceError(f"self-loop at vertex {u}")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise InvalidInstanceError(f"edge ({u}, {v}) references a missing vertex")
            w = float(w)
            if not math.isfinite(w) or w < 0:
                raise InvalidInstanceError(f"edge ({u}, {v}) has invalid weight {w}")
            key = (u, v) if u < v else (v, u)
            if key not in collapsed or w < collapsed[key]:
                collapsed[key] = w
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(
            self, "edges", tuple((u, v, collapsed[(u, v)]) for u, v in sorted(collapsed))
        )

    @cached_property
    def weight_map(self) -> dict[tuple[int, int], float]:
        return {(u, v): w for u, v, w in self.edges}

    def weight(self, u: int, v: int) -> float:
        key = (u, v) if u < v else (v, u)
        try:
            return self.weight_map[key]
        except KeyError:
            raise InvalidInstanceError(f"graph has no edge ({u}, {v})") from None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self.weight_map

    def filtered(self, min_weight: float | None = None, max_weight: float | None = None) -> "WeightedGraph":
        """Subgraph keeping edges with weight inside the given bounds."""
        kept = [
            (u, v, w)
            for u, v, w in self.edges
            if (min_weight is None or w >= min_weight)
            and (max_weight is None or w <= max_weight)
        ]
        return WeightedGraph(self.num_vertices, kept)


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges plus its weight statistics.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``; the three
    statistics are always recomputed from the edge list in that order, so
    equal edge sets produce bit-identical statistics.  An empty matching
    reports zeros.
    """

    edges: tuple[tuple[int, int], ...]
    total_weight: float
    min_edge_weight: float
    max_edge_weight: float

    @classmethod
    def empty(cls) -> "Matching":
        return cls(edges=(), total_weight=0.0, min_edge_weight=0.0, max_edge_weight=0.0)

    @classmethod
    def from_weighted_edges(cls, weighted_edges: Iterable[tuple[int, int, float]]) -> "Matching":
        canon = sorted((min(u, v), max(u, v), float(w)) for u, v, w in weighted_edges)
        if not canon:
            return cls.empty()
        seen: set[int] = set()
        for u, v, _ in canon:
            if u in seen or v in seen or u == v:
                raise InvalidInstanceError("matching edges must be vertex-disjoint")
            seen.update((u, v))
        weights = [w for _, _, w in canon]
        return cls(
            edges=tuple((u, v) for u, v, _ in canon),
            total_weight=sum(weights),
            min_edge_weight=min(weights),
            max_edge_weight=max(weights),
        )

    @classmethod
    def from_edges(cls, graph: WeightedGraph, edges: Iterable[tuple[int, int]]) -> "Matching":
        return cls.from_weighted_edges((u, v, graph.weight(u, v)) for u, v in edges)

    def __len__(self) -> int:
        return len(self.edges)


def _mate_to_pairs(mate: dict[int, int]) -> list[tuple[int, int]]:
    return sorted((u, v) for u, v in mate.items() if u < v)


def _perfect_matching_pairs(g: WeightedGraph) -> list[tuple[int, int]] | None:
    """A perfect matching of g as vertex pairs, or None if none exists."""
    n = g.num_vertices
    if n == 0:
        return []
    if n % 2 or len(g.edges) < n // 2:
        return None
    unit = {(u, v): 1 for u, v, _ in g.edges}
    mate = maximum_weight_matching(n, unit, max_cardinality=True)
    if len(mate) < n:
        return None
    return _mate_to_pairs(mate)


def has_perfect_matching(g: WeightedGraph) -> bool:
    """True iff some matching covers every vertex (vacuously true for 0)."""
    return _perfect_matching_pairs(g) is not None


def min_weight_perfect_matching(g: WeightedGraph) -> Matching | None:
    """A perfect matching of minimum total weight, or None if infeasible."""
    n = g.num_vertices
    if n == 0:
        return Matching.empty()
    if n % 2 or len(g.edges) < n // 2:
        return None
    # Negate and shift so the maximum-weight engine minimizes the total;
    # all perfect matchings have the same cardinality, so any shift works.
    wmax = Fraction(max(w for _, _, w in g.edges))
    transformed = {(u, v): wmax - Fraction(w) for u, v, w in g.edges}
    mate = maximum_weight_matching(n, transformed, max_cardinality=True)
    if len(mate) < n:
        return None
    return Matching.from_edges(g, _mate_to_pairs(mate))


def bottleneck_perfect_matching(g: WeightedGraph) -> Matching | None:
    """A perfect matching minimizing its maximum edge weight.

    Binary search over the sorted distinct weights for the smallest
    threshold whose at-most-threshold subgraph still has a perfect
    matching; the returned matching's ``max_edge_weight`` is that optimum.
    """
    if g.num_vertices == 0:
        return Matching.empty()
    levels = sorted({w for _, _, w in g.edges})
    if not levels or not has_perfect_matching(g):
        return None
    lo, hi = 0, len(levels) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if has_perfect_matching(g.filtered(max_weight=levels[mid])):
            hi = mid
        else:
            lo = mid + 1
    pairs = _perfect_matching_pairs(g.filtered(max_weight=levels[lo]))
    assert pairs is not None
    return Matching.from_edges(g, pairs)


def maxmin_perfect_matching(g: WeightedGraph) -> Matching | None:
    """A perfect matching maximizing its minimum edge weight.

    Mirror image of :func:`bottleneck_perfect_matching`: search for the
    largest threshold whose at-least-threshold subgraph keeps a perfect
    matching.
    """
    if g.num_vertices == 0:
        return Matching.empty()
    levels = sorted({w for _, _, w in g.edges})
    if not levels or not has_perfect_matching(g):
        return None
    lo, hi = 0, len(levels) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if has_perfect_matching(g.filtered(min_weight=levels[mid])):
            lo = mid
        else:
            hi = mid - 1
    pairs = _perfect_matching_pairs(g.filtered(min_weight=levels[lo]))
    assert pairs is not None
    return Matching.from_edges(g, pairs)
