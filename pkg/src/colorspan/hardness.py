"""Reductions between colorful independent-set style problems, with
exhaustive solvers small enough to certify them.

Two constructions are implemented:

* ``reduce_is_to_mcis`` turns a plain independent-set instance ``(G, k)``
  into a colorful independent-set instance on ``k`` vertex copies of
  ``G``.  Copies of adjacent source vertices are interconnected, and all
  copies of the same source vertex are interconnected as well; without the
  latter, a graph with an isolated vertex could fake a size-``k`` colorful
  solution by picking the same vertex in several copies.
* ``reduce_mcis_to_mcim`` turns a colorful independent-set instance into a
  colorful independent-matching instance by adding one pendant-color
  anchor vertex per source color.

``certify_equivalence`` runs the chain end to end on one instance and
checks that all three feasibility answers agree, lifting the colorful
witnesses back to source vertices through the recorded provenance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import BudgetExceededError, EquivalenceViolationError, InvalidInstanceError
from .matching import WeightedGraph

DEFAULT_MAX_STATES = 10_000_000


@dataclass(frozen=True)
class VertexColoredGraph:
    """A simple undirected graph whose vertices carry color labels.

    Edges are normalized to ``u < v`` and sorted; duplicate edges and
    self-loops are rejected (unlike :class:`WeightedGraph`, which collapses
    duplicates).  ``weights``, when present, is parallel to ``edges``.
    """

    num_vertices: int
    colors: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    num_colors: int
    weights: tuple[float, ...] | None = None

    def __init__(
        self,
        num_vertices: int,
        colors: Iterable[int],
        edges: Iterable[tuple[int, int]],
        num_colors: int,
        weights: Iterable[float] | None = None,
    ):
        colors = tuple(int(c) for c in colors)
        if num_vertices < 0:
            raise InvalidInstanceError("vertex count must be non-negative")
        if len(colors) != num_vertices:
            raise InvalidInstanceError("need exactly one color per vertex")
        if num_colors < 0:
            raise InvalidInstanceError("color count must be non-negative")
        for c in colors:
            if not 0 <= c < num_colors:
                raise InvalidInstanceError(f"color {c} out of range [0, {num_colors})")
        raw = list(edges)
        wlist = None if weights is None else [float(w) for w in weights]
        if wlist is not None and len(wlist) != len(raw):
            raise InvalidInstanceError("need exactly one weight per edge")
        canon: list[tuple[int, int]] = []
        for u, v in raw:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidInstanceError(f"self-loop at vertex {u}")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise InvalidInstanceError(f"edge ({u}, {v}) references a missing vertex")
            canon.append((u, v) if u < v else (v, u))
        if len(set(canon)) != len(canon):
            raise InvalidInstanceError("duplicate edges are not allowed")
        if wlist is not None:
            for w in wlist:
                if not math.isfinite(w) or w < 0:
                    raise InvalidInstanceError(f"invalid edge weight {w}")
            order = sorted(range(len(canon)), key=lambda i: canon[i])
            canon = [canon[i] for i in order]
            wlist = [wlist[i] for i in order]
        else:
            canon.sort()
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "num_colors", int(num_colors))
        object.__setattr__(self, "weights", None if wlist is None else tuple(wlist))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def color_classes(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            buckets[c].append(v)
        return tuple(tuple(b) for b in buckets)

    def weight(self, index: int) -> float:
        """Weight of the edge at ``index``; unweighted graphs read 1.0."""
        return 1.0 if self.weights is None else self.weights[index]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


@dataclass(frozen=True)
class ReductionArtifact:
    """A reduction output plus the origin of every produced vertex.

    ``provenance`` maps each output vertex to ``(source id, tag)``, where
    the tag distinguishes vertex copies from gadget vertices; for gadget
    vertices the source id is the color they anchor.
    """

    graph: VertexColoredGraph
    provenance: dict[int, tuple[int, str]]

    def __post_init__(self):
        if set(self.provenance) != set(range(self.graph.num_vertices)):
            raise InvalidInstanceError("provenance must cover every output vertex")


def reduce_is_to_mcis(g: WeightedGraph, k: int) -> ReductionArtifact:
    """Independent set to colorful independent set, via ``k`` colored copies.

    Copy ``i`` of source vertex ``v`` becomes output vertex ``i*n + v``
    with color ``i``.  Besides the per-copy images of the source edges,
    copies of the two endpoints of every source edge are fully
    interconnected across copies, and so are the copies of every single
    vertex; the output is kept simple, so coinciding gadget edges appear
    once.  The source graph has an independent set of ``k`` distinct
    vertices iff the output has a colorful independent set of size ``k``.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidInstanceError(f"copy count must be a positive integer, got {k!r}")
    n = g.num_vertices
    src_edges = [(u, v) for u, v, _ in g.edges]
    out_edges: set[tuple[int, int]] = set()
    for i in range(k):
        off = i * n
        out_edges.update((off + u, off + v) for u, v in src_edges)
    for i in range(k):
        for j in range(i + 1, k):
            oi, oj = i * n, j * n
            for x in range(n):
                out_edges.add((oi + x, oj + x))
            for u, v in src_edges:
                out_edges.add((oi + u, oj + v))
                out_edges.add((oi + v, oj + u))
    colors = [i for i in range(k) for _ in range(n)]
    provenance = {i * n + v: (v, f"copy{i}") for i in range(k) for v in range(n)}
    graph = VertexColoredGraph(k * n, colors, sorted(out_edges), k)
    return ReductionArtifact(graph=graph, provenance=provenance)


def reduce_mcis_to_mcim(g: VertexColoredGraph) -> ReductionArtifact:
    """Colorful independent set to colorful independent matching.

    One anchor vertex per source color is appended: anchor ``i`` sits at
    output id ``n + i`` with the fresh color ``k + i`` and connects to
    exactly the source vertices of color ``i``.  The output therefore has
    ``n + k`` vertices, ``m + n`` edges and ``2k`` colors, and it has a
    colorful independent matching of size ``k`` iff the source has a
    colorful independent set of size ``k``.
    """
    k = g.num_colors
    if k < 1:
        raise InvalidInstanceError("source graph must have at least one color")
    n = g.num_vertices
    colors = list(g.colors) + [k + i for i in range(k)]
    edges = list(g.edges) + [(v, n + g.colors[v]) for v in range(n)]
    provenance: dict[int, tuple[int, str]] = {v: (v, "source") for v in range(n)}
    provenance.update({n + i: (i, "gadget") for i in range(k)})
    graph = VertexColoredGraph(n + k, colors, edges, 2 * k)
    return ReductionArtifact(graph=graph, provenance=provenance)


def find_k_independent_set(
    g: WeightedGraph, k: int, max_states: int = DEFAULT_MAX_STATES
) -> tuple[int, ...] | None:
    """First independent set of ``k`` distinct vertices, or None."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidInstanceError(f"set size must be a positive integer, got {k!r}")
    n = g.num_vertices
    if k > n:
        return None
    if math.comb(n, k) > max_states:
        raise BudgetExceededError(
            f"{math.comb(n, k)} candidate subsets exceed the budget of {max_states}"
        )
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v, _ in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    for subset in combinations(range(n), k):
        if all(v not in adj[u] for u, v in combinations(subset, 2)):
            return subset
    return None


def brute_force_mcis(
    g: VertexColoredGraph, max_states: int = DEFAULT_MAX_STATES
) -> tuple[int, ...] | None:
    """A colorful independent set covering all colors, or None.

    Enumerates one vertex per color class, lowest colors first, pruning
    against adjacency as it goes.
    """
    classes = g.color_classes
    if any(not cls for cls in classes):
        return None
    states = math.prod(len(cls) for cls in classes)
    if states > max_states:
        raise BudgetExceededError(
            f"{states} candidate selections exceed the budget of {max_states}"
        )
    adj = g.adjacency
    chosen: list[int] = []

    def extend(color: int) -> bool:
        if color == g.num_colors:
            return True
        for v in classes[color]:
            if all(v not in adj[u] for u in chosen):
                chosen.append(v)
                if extend(color + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def brute_force_mcim(
    g: VertexColoredGraph, max_states: int = DEFAULT_MAX_STATES
) -> tuple[tuple[int, int], ...] | None:
    """A colorful independent matching covering all colors, or None.

    The matching must consist of ``num_colors / 2`` edges whose endpoints
    carry pairwise distinct colors, with no graph edge joining endpoints
    of two different chosen edges.  The two endpoints of a single chosen
    edge are of course adjacent; only cross-edge adjacency is forbidden.
    """
    t = g.num_colors
    if t % 2 or t < 2:
        raise InvalidInstanceError("colorful matching needs an even, positive color count")
    k = t // 2
    cross = [(u, v) for u, v in g.edges if g.colors[u] != g.colors[v]]
    predicted = math.comb(len(cross), k) if len(cross) >= k else 0
    if predicted > max_states:
        raise BudgetExceededError(
            f"{predicted} candidate edge subsets exceed the budget of {max_states}"
        )
    by_color: list[list[tuple[int, int]]] = [[] for _ in range(t)]
    for u, v in cross:
        low = min(g.colors[u], g.colors[v])
        by_color[low].append((u, v))
    adj = g.adjacency
    chosen: list[tuple[int, int]] = []
    covered = [False] * t

    def independent_with_chosen(u: int, v: int) -> bool:
        for x, y in chosen:
            if u in adj[x] or u in adj[y] or v in adj[x] or v in adj[y]:
                return False
        return True

    def extend() -> bool:
        try:
            c = covered.index(False)
        except ValueError:
            return True
        for u, v in by_color[c]:
            cu, cv = g.colors[u], g.colors[v]
            if covered[cu] or covered[cv]:
                continue
            if not independent_with_chosen(u, v):
                continue
            chosen.append((u, v))
            covered[cu] = covered[cv] = True
            if extend():
                return True
            covered[cu] = covered[cv] = False
            chosen.pop()
        return False

    return tuple(chosen) if extend() else None


@dataclass(frozen=True)
class EquivalenceCertificate:
    """Feasibility bits of one reduction chain plus lifted witnesses."""

    k: int
    has_independent_set: bool
    has_colorful_independent_set: bool
    has_colorful_independent_matching: bool
    independent_set: tuple[int, ...] | None
    lifted_colorful_set: tuple[int, ...] | None
    lifted_matching_set: tuple[int, ...] | None


def _check_source_independent(g: WeightedGraph, vertices: tuple[int, ...], k: int, what: str):
    if len(set(vertices)) != k:
        raise EquivalenceViolationError(f"{what} does not lift to {k} distinct vertices")
    for u, v in combinations(sorted(vertices), 2):
        if g.has_edge(u, v):
            raise EquivalenceViolationError(f"{what} lifts to adjacent vertices ({u}, {v})")


def certify_equivalence(
    g: WeightedGraph, k: int, max_states: int = DEFAULT_MAX_STATES
) -> EquivalenceCertificate:
    """Run both reductions on ``(g, k)`` and check feasibility agreement.

    Raises :class:`EquivalenceViolationError` when the three exhaustive
    answers disagree or a lifted witness is not an independent set of the
    source graph; either would be an implementation bug.
    """
    direct = find_k_independent_set(g, k, max_states)
    step1 = reduce_is_to_mcis(g, k)
    colorful = brute_force_mcis(step1.graph, max_states)
    step2 = reduce_mcis_to_mcim(step1.graph)
    matching = brute_force_mcim(step2.graph, max_states)

    bits = (direct is not None, colorful is not None, matching is not None)
    if len(set(bits)) != 1:
        raise EquivalenceViolationError(
            f"feasibility disagreement for k={k}: "
            f"independent_set={bits[0]}, colorful_set={bits[1]}, matching={bits[2]}"
        )

    lifted_set = None
    lifted_matching = None
    if colorful is not None:
        lifted_set = tuple(sorted(step1.provenance[v][0] for v in colorful))
        _check_source_independent(g, lifted_set, k, "colorful independent set")
    if matching is not None:
        sources = []
        for u, v in matching:
            for end in (u, v):
                src, tag = step2.provenance[end]
                if tag == "source":
                    sources.append(step1.provenance[src][0])
        lifted_matching = tuple(sorted(sources))
        _check_source_independent(g, lifted_matching, k, "colorful independent matching")

    return EquivalenceCertificate(
        k=k,
        has_independent_set=bits[0],
        has_colorful_independent_set=bits[1],
        has_colorful_independent_matching=bits[2],
        independent_set=tuple(direct) if direct is not None else None,
        lifted_colorful_set=lifted_set,
        lifted_matching_set=lifted_matching,
    )
