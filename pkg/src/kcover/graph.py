"""Weighted simple graphs, edge-set algebra, and the edge-list file format.

Graphs are undirected, loop-free, with positive integer edge weights.
Instances are immutable after construction and safe to share.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list document; knows which line failed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def normalize_edge(u: int, v: int) -> Edge:
    """Return the canonical (min, max) form of an undirected edge."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class EdgeSet:
    """Immutable set of undirected edges with sorted, deterministic iteration."""

    __slots__ = ("edges", "_members")

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        members = frozenset(normalize_edge(u, v) for u, v in pairs)
        object.__setattr__(self, "edges", tuple(sorted(members)))
        object.__setattr__(self, "_members", members)

    def __setattr__(self, name, value):
        raise AttributeError("EdgeSet is immutable")

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __bool__(self) -> bool:
        return bool(self.edges)

    def __contains__(self, edge: tuple[int, int]) -> bool:
        u, v = edge
        return (u, v) in self._members or (v, u) in self._members

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        return EdgeSet(self._members | other._members)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        return EdgeSet(self._members & other._members)

    def __sub__(self, other: "EdgeSet") -> "EdgeSet":
        return EdgeSet(self._members - other._members)

    def issubset(self, other: "EdgeSet") -> bool:
        return self._members <= other._members

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeSet) and self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"EdgeSet({list(self.edges)!r})"


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with positive integer edge weights.

    `vertices` is a sorted tuple of vertex ids, `edges` a lexicographically
    sorted tuple of (u, v) pairs with u < v, and `weights` runs parallel to
    `edges`.  Use :meth:`build` rather than the raw constructor so the
    invariants (no loops, no duplicates, declared endpoints, weights >= 1)
    are checked.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    weights: tuple[int, ...]

    @classmethod
    def build(
        cls,
        vertices: Iterable[int],
        weighted_edges: Iterable[tuple[int, int, int]],
    ) -> "WeightedGraph":
        vs = tuple(sorted(set(vertices)))
        vset = set(vs)
        seen: dict[Edge, int] = {}
        for u, v, w in weighted_edges:
            e = normalize_edge(u, v)
            if e[0] not in vset or e[1] not in vset:
                raise ValueError(f"edge {e} has an undeclared endpoint")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ValueError(f"edge {e} has non-positive weight {w!r}")
            seen[e] = w
        ordered = tuple(sorted(seen))
        return cls(vs, ordered, tuple(seen[e] for e in ordered))

    @cached_property
    def _weight_map(self) -> dict[Edge, int]:
        return dict(zip(self.edges, self.weights))

    @cached_property
    def _adjacency(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Position of each edge in the deterministic edge order."""
        return {e: i for i, e in enumerate(self.edges)}

    def weight(self, edge: tuple[int, int]) -> int:
        e = normalize_edge(*edge)
        try:
            return self._weight_map[e]
        except KeyError:
            raise ValueError(f"edge {e} not in graph") from None

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and normalize_edge(u, v) in self._weight_map

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def edge_set(self) -> EdgeSet:
        return EdgeSet(self.edges)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def complete_graph(n: int, weight: int = 1) -> WeightedGraph:
    """K_n with a uniform edge weight."""
    edges = [(u, v, weight) for u in range(n) for v in range(u + 1, n)]
    return WeightedGraph.build(range(n), edges)


def parse_graph(text: str) -> WeightedGraph:
    """Parse the edge-list format.

    First significant line is the vertex count n; every following line is
    "u v w" with 0 <= u < v < n and integer w >= 1.  Lines starting with
    '#' are comments.  Errors report the offending line number.
    """
    n: int | None = None
    rows: list[tuple[int, int, int]] = []
    seen: set[Edge] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(line_no, f"expected vertex count, got {line!r}")
            if n < 0:
                raise GraphFormatError(line_no, f"negative vertex count {n}")
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError(line_no, f"expected 'u v w', got {line!r}")
        try:
            u, v, w = (int(p) for p in parts)
        except ValueError:
            raise GraphFormatError(line_no, f"non-integer field in {line!r}")
        if u == v:
            raise GraphFormatError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < v < n):
            raise GraphFormatError(line_no, f"edge ({u}, {v}) violates 0 <= u < v < {n}")
        if w < 1:
            raise GraphFormatError(line_no, f"non-positive weight {w}")
        if (u, v) in seen:
            raise GraphFormatError(line_no, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        rows.append((u, v, w))
    if n is None:
        raise GraphFormatError(1, "empty document: missing vertex count")
    return WeightedGraph.build(range(n), rows)


def serialize_graph(g: WeightedGraph) -> str:
    """Emit the canonical edge-list document (edges sorted lexicographically)."""
    n = max(g.vertices) + 1 if g.vertices else 0
    lines = [str(n)]
    lines.extend(f"{u} {v} {g.weight((u, v))}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_set(text: str) -> tuple[int, EdgeSet]:
    """Parse a cover file: edge-list format without the weight column."""
    n: int | None = None
    pairs: list[Edge] = []
    seen: set[Edge] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(line_no, f"expected vertex count, got {line!r}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = (int(p) for p in parts)
        except ValueError:
            raise GraphFormatError(line_no, f"non-integer field in {line!r}")
        if u == v:
            raise GraphFormatError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < v < n):
            raise GraphFormatError(line_no, f"edge ({u}, {v}) violates 0 <= u < v < {n}")
        if (u, v) in seen:
            raise GraphFormatError(line_no, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        pairs.append((u, v))
    if n is None:
        raise GraphFormatError(1, "empty document: missing vertex count")
    return n, EdgeSet(pairs)


def serialize_edge_set(n: int, s: EdgeSet) -> str:
    lines = [str(n)]
    lines.extend(f"{u} {v}" for u, v in s)
    return "\n".join(lines) + "\n"


def remove_edges(g: WeightedGraph, s: EdgeSet) -> WeightedGraph:
    """Graph on the same vertices with the edges of `s` deleted."""
    if not s.issubset(g.edge_set()):
        extra = [e for e in s if e not in g.edge_set()]
        raise ValueError(f"edges not in graph: {extra}")
    kept = [(u, v, w) for (u, v), w in zip(g.edges, g.weights) if (u, v) not in s]
    return WeightedGraph.build(g.vertices, kept)


def edge_induced_subgraph(g: WeightedGraph, s: EdgeSet) -> WeightedGraph:
    """Subgraph whose vertices are the endpoints of `s` and whose edges are `s`.

    The empty edge set yields the empty graph; isolated vertices are dropped.
    """
    if not s.issubset(g.edge_set()):
        extra = [e for e in s if e not in g.edge_set()]
        raise ValueError(f"edges not in graph: {extra}")
    verts = {u for e in s for u in e}
    return WeightedGraph.build(verts, [(u, v, g.weight((u, v))) for u, v in s])


def total_weight(g: WeightedGraph, s: EdgeSet) -> int:
    """Sum of the weights of `s`; zero for the empty set."""
    return sum(g.weight(e) for e in s)


def two_coloring(g: WeightedGraph) -> dict[int, int] | None:
    """BFS two-coloring; returns vertex -> {0, 1} or None if not bipartite."""
    color: dict[int, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color
