"""Exhaustive reference solvers.

Every optimizer in this package is certified against one of these oracles
at desk scale.  They enumerate the full candidate space with no shortcuts:
the geometric oracle walks every choice of one representative point per
color crossed with every perfect pairing of the chosen representatives,
and the graph oracles walk every perfect pairing, respectively every
colorful edge subset.  The geometric enumeration is evaluated in numpy
chunks for speed, but the candidate space is exactly the stated one.

Enumerations refuse to start when the predicted state count exceeds the
budget, raising :class:`~colorspan.errors.BudgetExceededError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceededError, InvalidInstanceError
from .geometry import ColoredPointSet
from .hardness import VertexColoredGraph
from .matching import Matching, WeightedGraph
from .solvers import ColorSpanningMatching, Objective

DEFAULT_MAX_STATES = 10_000_000

_CHUNK = 1 << 16


@dataclass(frozen=True)
class OracleBudget:
    """Cap on the number of candidates an oracle may enumerate."""

    max_states: int = DEFAULT_MAX_STATES


def perfect_pairings(items: Sequence[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """All ways to split ``items`` into unordered pairs.

    The lowest remaining item is always matched first, so each pairing is
    produced exactly once and pairs come out ordered.
    """
    items = list(items)
    if len(items) % 2:
        return
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        for tail in perfect_pairings(remaining):
            yield ((first, partner), *tail)


def pairing_count(m: int) -> int:
    """Number of perfect pairings of ``m`` items: (m-1) * (m-3) * ... * 1."""
    if m < 0 or m % 2:
        return 0
    out = 1
    for v in range(m - 1, 0, -2):
        out *= v
    return out


def _check_budget(states: int, budget: OracleBudget) -> None:
    if states > budget.max_states:
        raise BudgetExceededError(
            f"{states} candidate states exceed the budget of {budget.max_states}"
        )


def brute_force_geometric(
    point_set: ColoredPointSet,
    objective: Objective,
    budget: OracleBudget | None = None,
) -> ColorSpanningMatching:
    """Exact optimum over every color-spanning matching of the point set.

    Enumerates every choice of one representative per color and, for each
    choice, every perfect pairing of the representatives.
    """
    budget = budget or OracleBudget()
    t = point_set.num_colors
    if t % 2:
        raise InvalidInstanceError(
            f"matching instances need an even color count, got {t}"
        )
    classes = [point_set.color_indices(c) for c in range(t)]
    sizes = tuple(len(c) for c in classes)
    combos = math.prod(sizes)
    _check_budget(combos * pairing_count(t), budget)

    xs, ys = point_set.xs, point_set.ys
    dmat: dict[tuple[int, int], np.ndarray] = {}
    for a in range(t):
        for b in range(a + 1, t):
            ia, ib = classes[a], classes[b]
            dmat[(a, b)] = np.hypot(
                xs[ia][:, None] - xs[ib][None, :], ys[ia][:, None] - ys[ib][None, :]
            )

    pairings = list(perfect_pairings(range(t)))
    maximize = objective in (Objective.MAXSUM, Objective.MAXMIN)
    summed = objective in (Objective.MINSUM, Objective.MAXSUM)
    best: tuple[float, int, tuple[tuple[int, int], ...]] | None = None
    for lo in range(0, combos, _CHUNK):
        hi = min(lo + _CHUNK, combos)
        pos = np.unravel_index(np.arange(lo, hi), sizes)
        for pairing in pairings:
            rows = np.stack([dmat[(a, b)][pos[a], pos[b]] for a, b in pairing])
            if summed:
                vals = rows.sum(axis=0)
            elif objective is Objective.MINMAX:
                vals = rows.max(axis=0)
            else:
                vals = rows.min(axis=0)
            at = int(vals.argmax() if maximize else vals.argmin())
            v = float(vals[at])
            if best is None or (v > best[0] if maximize else v < best[0]):
                best = (v, lo + at, pairing)

    assert best is not None
    _, flat, pairing = best
    pos = np.unravel_index(flat, sizes)
    pairs = [
        (int(classes[a][pos[a]]), int(classes[b][pos[b]])) for a, b in pairing
    ]
    return ColorSpanningMatching.from_pairs(point_set, pairs)


def brute_force_graph_matching(
    g: WeightedGraph,
    objective: Objective,
    budget: OracleBudget | None = None,
) -> Matching | None:
    """Exact optimum over every perfect matching of ``g``, or None."""
    budget = budget or OracleBudget()
    n = g.num_vertices
    if n == 0:
        return Matching.empty()
    if n % 2:
        return None
    _check_budget(pairing_count(n), budget)

    wmap = g.weight_map
    maximize = objective in (Objective.MAXSUM, Objective.MAXMIN)
    summed = objective in (Objective.MINSUM, Objective.MAXSUM)
    best_val: float | None = None
    best_edges: tuple[tuple[int, int], ...] | None = None

    def evaluate(chosen: list[tuple[int, int]]) -> float:
        # chosen comes out sorted by construction, matching the canonical
        # statistic order used by Matching, so sums compare bit-exactly.
        ws = [wmap[e] for e in chosen]
        if summed:
            return sum(ws)
        return max(ws) if objective is Objective.MINMAX else min(ws)

    def extend(remaining: tuple[int, ...], chosen: list[tuple[int, int]]) -> None:
        nonlocal best_val, best_edges
        if not remaining:
            v = evaluate(chosen)
            if best_val is None or (v > best_val if maximize else v < best_val):
                best_val = v
                best_edges = tuple(chosen)
            return
        u = remaining[0]
        rest = remaining[1:]
        for i, v in enumerate(rest):
            if (u, v) in wmap:
                chosen.append((u, v))
                extend(rest[:i] + rest[i + 1 :], chosen)
                chosen.pop()

    extend(tuple(range(n)), [])
    if best_edges is None:
        return None
    return Matching.from_edges(g, best_edges)


def brute_force_colorful_graph_matching(
    g: VertexColoredGraph,
    budget: OracleBudget | None = None,
) -> Matching | None:
    """Minimum-weight colorful perfect matching by exhaustive search.

    Walks every set of cross-color edges whose endpoints cover each color
    exactly once, or returns None when no such set exists (including when
    the color count is odd).
    """
    budget = budget or OracleBudget()
    t = g.num_colors
    if t % 2 or t == 0:
        return None
    k = t // 2
    cross = [
        (pos, u, v) for pos, (u, v) in enumerate(g.edges) if g.colors[u] != g.colors[v]
    ]
    _check_budget(math.comb(len(cross), k) if len(cross) >= k else 0, budget)

    by_color: list[list[tuple[int, int, int]]] = [[] for _ in range(t)]
    for pos, u, v in cross:
        by_color[min(g.colors[u], g.colors[v])].append((pos, u, v))

    best_val: float | None = None
    best: tuple[tuple[int, int, float], ...] | None = None
    covered = [False] * t
    chosen: list[tuple[int, int, float]] = []

    def evaluate() -> float:
        return sum(w for _, _, w in sorted(chosen))

    def extend() -> None:
        nonlocal best_val, best
        if len(chosen) == k:
            v = evaluate()
            if best_val is None or v < best_val:
                best_val = v
                best = tuple(chosen)
            return
        c = covered.index(False)
        for pos, u, v in by_color[c]:
            cu, cv = g.colors[u], g.colors[v]
            if covered[cu] or covered[cv]:
                continue
            covered[cu] = covered[cv] = True
            chosen.append((u, v, g.weight(pos)))
            extend()
            chosen.pop()
            covered[cu] = covered[cv] = False

    extend()
    if best is None:
        return None
    return Matching.from_weighted_edges(best)
