"""Enumeration of k-cycles and k-cliques, incidence rows, and cover checking.

Every structure is carried in a canonical form so enumeration output is
deterministic: a clique is its sorted vertex tuple; a cycle is rotated to
start at its smallest vertex and oriented so the second vertex is smaller
than the last.  The DFS enumerators below generate each structure exactly
once, so no dedup pass is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Edge, EdgeSet, WeightedGraph, normalize_edge, remove_edges

DEFAULT_MAX_STRUCTURES = 1_000_000

KINDS = ("cycle", "clique")


class EnumerationCapError(RuntimeError):
    """Structure count exceeded the configured cap; results would be incomplete."""

    def __init__(self, kind: str, k: int, cap: int):
        super().__init__(
            f"more than {cap} {k}-{kind} structures; raise max_structures to enumerate fully"
        )
        self.kind = kind
        self.k = k
        self.cap = cap


def _check_k(k: int) -> None:
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


@dataclass(frozen=True)
class EdgeStructure:
    """A k-cycle or k-clique in canonical vertex order."""

    kind: str
    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)

    @property
    def canonical_key(self) -> tuple[int, ...]:
        return self.vertices

    @property
    def edges(self) -> EdgeSet:
        vs = self.vertices
        if self.kind == "cycle":
            pairs = [normalize_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
        else:
            pairs = [
                (vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))
            ]
        return EdgeSet(pairs)


def _iter_k_cycle_tuples(g: WeightedGraph, k: int) -> Iterator[tuple[int, ...]]:
    """Simple cycles of length exactly k, one canonical tuple per cycle.

    Paths grow only from each cycle's minimum vertex and only through larger
    vertices, closing back to the root at depth k; orientation is fixed by
    requiring the second vertex to be smaller than the last.
    """
    path: list[int] = []
    on_path: set[int] = set()

    def dfs(root: int) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        if len(path) == k:
            if path[1] < last and g.has_edge(last, root):
                yield tuple(path)
            return
        for nxt in g.neighbors(last):
            if nxt > root and nxt not in on_path:
                path.append(nxt)
                on_path.add(nxt)
                yield from dfs(root)
                path.pop()
                on_path.remove(nxt)

    for root in g.vertices:
        path = [root]
        on_path = {root}
        yield from dfs(root)


def _iter_k_clique_tuples(g: WeightedGraph, k: int) -> Iterator[tuple[int, ...]]:
    """Vertex sets of k-cliques in lexicographic order.

    Ordered DFS: a clique is only extended by vertices larger than its
    current maximum and adjacent to every member.
    """

    def dfs(clique: list[int], cands: list[int]) -> Iterator[tuple[int, ...]]:
        if len(clique) == k:
            yield tuple(clique)
            return
        need = k - len(clique)
        for i, v in enumerate(cands):
            if len(cands) - i < need:
                break
            clique.append(v)
            yield from dfs(clique, [u for u in cands[i + 1 :] if g.has_edge(u, v)])
            clique.pop()

    for root in g.vertices:
        yield from dfs([root], [u for u in g.neighbors(root) if u > root])


def _structure_iterator(g: WeightedGraph, k: int, kind: str) -> Iterator[tuple[int, ...]]:
    if kind == "cycle":
        return _iter_k_cycle_tuples(g, k)
    return _iter_k_clique_tuples(g, k)


def _enumerate(
    g: WeightedGraph, k: int, kind: str, max_structures: int
) -> list[EdgeStructure]:
    _check_k(k)
    _check_kind(kind)
    out: list[tuple[int, ...]] = []
    for tup in _structure_iterator(g, k, kind):
        if len(out) >= max_structures:
            raise EnumerationCapError(kind, k, max_structures)
        out.append(tup)
    out.sort()
    return [EdgeStructure(kind, tup) for tup in out]


def enumerate_k_cycles(
    g: WeightedGraph, k: int, max_structures: int = DEFAULT_MAX_STRUCTURES
) -> list[EdgeStructure]:
    """All simple cycles of length exactly k, sorted by canonical key."""
    return _enumerate(g, k, "cycle", max_structures)


def enumerate_k_cliques(
    g: WeightedGraph, k: int, max_structures: int = DEFAULT_MAX_STRUCTURES
) -> list[EdgeStructure]:
    """All complete subgraphs on exactly k vertices, sorted by canonical key."""
    return _enumerate(g, k, "clique", max_structures)


@dataclass(frozen=True)
class IncidenceMatrix:
    """Structure-edge incidence: rows are structures, columns the graph's edges.

    Entries are implicit; `row_edge_indices[i]` lists the column positions of
    row i's edges in the host graph's deterministic edge order.
    """

    rows: tuple[EdgeStructure, ...]
    columns: tuple[Edge, ...]
    row_edge_indices: tuple[tuple[int, ...], ...]

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def column_count(self) -> int:
        return len(self.columns)


def build_incidence(
    g: WeightedGraph, structures: Iterable[EdgeStructure]
) -> IncidenceMatrix:
    """Assemble the constraint matrix for the covering programs."""
    rows = tuple(structures)
    index = g.edge_index
    row_indices = []
    for s in rows:
        try:
            row_indices.append(tuple(sorted(index[e] for e in s.edges)))
        except KeyError:
            foreign = [e for e in s.edges if e not in index]
            raise ValueError(f"structure {s.vertices} uses edges not in graph: {foreign}")
    return IncidenceMatrix(rows, g.edges, tuple(row_indices))


def union_structure_edges(structures: Iterable[EdgeStructure]) -> EdgeSet:
    """Union of the edge sets of all given structures."""
    out = EdgeSet()
    for s in structures:
        out = out | s.edges
    return out


def verify_cover(g: WeightedGraph, k: int, kind: str, s: EdgeSet) -> bool:
    """True iff removing `s` from `g` leaves no k-structure of the given kind.

    Re-enumerates the remaining graph with early exit instead of consulting
    any stored incidence rows, so it can serve as an independent check.
    """
    _check_k(k)
    _check_kind(kind)
    h = remove_edges(g, s)
    return next(_structure_iterator(h, k, kind), None) is None
