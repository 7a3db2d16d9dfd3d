"""Text formats: point files, graph files, result records, provenance.

Point file::

    n t
    x y c      (n lines: two decimal reals and an integer color in [0, t))

Graph file::

    n m t
    c          (n lines: vertex colors; every line must be 0 when t = 0,
                which marks the graph as uncolored)
    u v [w]    (m lines: 0-based endpoints, optional weight, default 1.0)

Floats serialize with ``repr`` so every format round-trips exactly:
``parse(serialize(x)) == x``.  Parse failures raise
:class:`~colorspan.errors.ParseError` carrying the offending line number.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import ParseError
from .geometry import ColoredPoint, ColoredPointSet
from .hardness import VertexColoredGraph
from .matching import WeightedGraph


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped:
            out.append((no, stripped))
    return out


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"{what} must be an integer, got {token!r}") from None


def _parse_float(token: str, line: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(line, f"{what} must be a number, got {token!r}") from None
    if not math.isfinite(value):
        raise ParseError(line, f"{what} must be finite, got {token!r}")
    return value


def parse_points(text: str) -> ColoredPointSet:
    """Parse a point file into a validated point set."""
    lines = _significant_lines(text)
    if not lines:
        raise ParseError(1, "empty point file")
    head_no, head = lines[0]
    tokens = head.split()
    if len(tokens) != 2:
        raise ParseError(head_no, f"header must be 'n t', got {head!r}")
    n = _parse_int(tokens[0], head_no, "point count")
    t = _parse_int(tokens[1], head_no, "color count")
    if len(lines) - 1 != n:
        raise ParseError(head_no, f"expected {n} point lines, found {len(lines) - 1}")
    points = []
    seen: set[int] = set()
    for no, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(no, f"point line must be 'x y c', got {line!r}")
        x = _parse_float(tokens[0], no, "x coordinate")
        y = _parse_float(tokens[1], no, "y coordinate")
        c = _parse_int(tokens[2], no, "color")
        if not 0 <= c < t:
            raise ParseError(no, f"color {c} out of range [0, {t})")
        seen.add(c)
        points.append(ColoredPoint(x, y, c))
    missing = set(range(t)) - seen
    if missing:
        raise ParseError(None, f"colors never used: {sorted(missing)}")
    return ColoredPointSet(points, t)


def serialize_points(point_set: ColoredPointSet) -> str:
    lines = [f"{len(point_set)} {point_set.num_colors}"]
    lines.extend(f"{p.x!r} {p.y!r} {p.color}" for p in point_set.points)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> VertexColoredGraph | WeightedGraph:
    """Parse a graph file.

    Returns a :class:`VertexColoredGraph` when ``t > 0`` and an uncolored
    :class:`WeightedGraph` when ``t = 0``.
    """
    lines = _significant_lines(text)
    if not lines:
        raise ParseError(1, "empty graph file")
    head_no, head = lines[0]
    tokens = head.split()
    if len(tokens) != 3:
        raise ParseError(head_no, f"header must be 'n m t', got {head!r}")
    n = _parse_int(tokens[0], head_no, "vertex count")
    m = _parse_int(tokens[1], head_no, "edge count")
    t = _parse_int(tokens[2], head_no, "color count")
    if len(lines) - 1 != n + m:
        raise ParseError(
            head_no, f"expected {n} color lines and {m} edge lines, found {len(lines) - 1}"
        )
    colors = []
    for no, line in lines[1 : 1 + n]:
        c = _parse_int(line.split()[0], no, "vertex color")
        if len(line.split()) != 1:
            raise ParseError(no, f"color line must be a single integer, got {line!r}")
        if t == 0:
            if c != 0:
                raise ParseError(no, "uncolored graphs (t = 0) must list 0 for every vertex")
        elif not 0 <= c < t:
            raise ParseError(no, f"color {c} out of range [0, {t})")
        colors.append(c)
    edges: list[tuple[int, int]] = []
    weights: list[float] = []
    any_weight = False
    seen: set[tuple[int, int]] = set()
    for no, line in lines[1 + n :]:
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise ParseError(no, f"edge line must be 'u v [w]', got {line!r}")
        u = _parse_int(tokens[0], no, "edge endpoint")
        v = _parse_int(tokens[1], no, "edge endpoint")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(no, f"edge ({u}, {v}) references a missing vertex")
        if u == v:
            raise ParseError(no, f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(no, f"duplicate edge ({u}, {v})")
        seen.add(key)
        if len(tokens) == 3:
            weights.append(_parse_float(tokens[2], no, "edge weight"))
            any_weight = True
        else:
            weights.append(1.0)
        edges.append((u, v))
    if t == 0:
        return WeightedGraph(n, [(u, v, w) for (u, v), w in zip(edges, weights)])
    return VertexColoredGraph(n, colors, edges, t, weights if any_weight else None)


def serialize_graph(g: VertexColoredGraph | WeightedGraph) -> str:
    if isinstance(g, WeightedGraph):
        lines = [f"{g.num_vertices} {len(g.edges)} 0"]
        lines.extend("0" for _ in range(g.num_vertices))
        lines.extend(f"{u} {v} {w!r}" for u, v, w in g.edges)
    else:
        lines = [f"{g.num_vertices} {len(g.edges)} {g.num_colors}"]
        lines.extend(str(c) for c in g.colors)
        if g.weights is None:
            lines.extend(f"{u} {v}" for u, v in g.edges)
        else:
            lines.extend(f"{u} {v} {w!r}" for (u, v), w in zip(g.edges, g.weights))
    return "\n".join(lines) + "\n"


def serialize_provenance(provenance: dict[int, tuple[int, str]]) -> str:
    """One 'out_id src_id tag' line per output vertex, sorted by id."""
    lines = [f"{out} {src} {tag}" for out, (src, tag) in sorted(provenance.items())]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ResultRecord:
    """A solve or oracle outcome in emit-friendly form.

    ``value`` is the objective statistic; ``pairs`` are point indexes for
    geometric runs and vertex ids for graph runs.  ``time_ms`` is wall
    time and is the one volatile field, so it is always emitted last.
    """

    kind: str
    objective: str
    status: str
    value: float | None
    pairs: tuple[tuple[int, int], ...]
    total_weight: float | None
    min_edge_weight: float | None
    max_edge_weight: float | None
    time_ms: float

    def to_text(self) -> str:
        lines = [
            f"kind={self.kind}",
            f"objective={self.objective}",
            f"status={self.status}",
        ]
        if self.status == "solved":
            lines.append(f"value={self.value!r}")
            lines.append("pairs=" + " ".join(f"{a}:{b}" for a, b in self.pairs))
            lines.append(f"total_weight={self.total_weight!r}")
            lines.append(f"min_edge_weight={self.min_edge_weight!r}")
            lines.append(f"max_edge_weight={self.max_edge_weight!r}")
        lines.append(f"time_ms={self.time_ms:.3f}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "kind": self.kind,
            "objective": self.objective,
            "status": self.status,
            "value": self.value,
            "pairs": [list(p) for p in self.pairs],
            "total_weight": self.total_weight,
            "min_edge_weight": self.min_edge_weight,
            "max_edge_weight": self.max_edge_weight,
            "time_ms": self.time_ms,
        }
        return json.dumps(payload, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.lineno, f"invalid result JSON: {exc.msg}") from None
        try:
            return cls(
                kind=str(payload["kind"]),
                objective=str(payload["objective"]),
                status=str(payload["status"]),
                value=None if payload["value"] is None else float(payload["value"]),
                pairs=tuple((int(a), int(b)) for a, b in payload["pairs"]),
                total_weight=None
                if payload["total_weight"] is None
                else float(payload["total_weight"]),
                min_edge_weight=None
                if payload["min_edge_weight"] is None
                else float(payload["min_edge_weight"]),
                max_edge_weight=None
                if payload["max_edge_weight"] is None
                else float(payload["max_edge_weight"]),
                time_ms=float(payload["time_ms"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(None, f"malformed result record: {exc}") from None


def sniff_kind(text: str) -> str:
    """'points' or 'graph', judged by the header token count (2 vs 3)."""
    lines = _significant_lines(text)
    if not lines:
        raise ParseError(1, "empty input file")
    no, head = lines[0]
    count = len(head.split())
    if count == 2:
        return "points"
    if count == 3:
        return "graph"
    raise ParseError(no, f"header must be 'n t' (points) or 'n m t' (graph), got {head!r}")
