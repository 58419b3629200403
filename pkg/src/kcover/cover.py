"""Threshold-rounding covering algorithms with certified approximation ratios.

Two pipelines, each for cycles and for cliques:

* basic: solve the covering LP and keep every edge whose value reaches
  1/t, where t is the number of edges in one structure (t = k for cycles,
  t = k(k-1)/2 for cliques).  Certified ratio t.
* improved: raise the threshold to 2/(2t-1), then destroy the structures
  that survive by two-coloring the subgraph they span and removing the
  non-cut edges, which costs at most half their weight.  Certified ratio
  t - 1/2.  The cycle variant needs odd k: a bipartite graph has no odd
  cycle, while it trivially has no clique on 3 or more vertices.

Every returned cover is re-verified and its ratio certificate checked in
exact arithmetic before the result is handed back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import (
    EdgeSet,
    WeightedGraph,
    edge_induced_subgraph,
    remove_edges,
    total_weight,
    two_coloring,
)
from .lp import FractionalSolution, check_certificate, solve_covering_lp
from .structures import (
    DEFAULT_MAX_STRUCTURES,
    build_incidence,
    enumerate_k_cliques,
    enumerate_k_cycles,
    union_structure_edges,
    verify_cover,
)


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of a subgraph keeping at least half the weight in the cut."""

    side1: tuple[int, ...]
    side2: tuple[int, ...]
    cut_edges: EdgeSet
    inner_edges: EdgeSet


@dataclass(frozen=True)
class CoverParts:
    """Decomposition of an improved-algorithm cover.

    `threshold_edges` are the high-value edges picked by rounding;
    `residual_edges` are the edges of all structures that survived the
    rounding step; `bipartization_edges` are the residual edges removed to
    make the survivors' subgraph two-colorable.
    """

    threshold_edges: EdgeSet
    bipartization_edges: EdgeSet
    residual_edges: EdgeSet
    bipartition: Bipartition


@dataclass(frozen=True)
class CoverResult:
    """A feasible cover with its LP lower bound and certified ratio."""

    cover: EdgeSet
    cover_weight: int
    lp_objective: Fraction
    ratio_bound: Fraction
    algorithm: str
    solution: FractionalSolution
    parts: CoverParts | None = None


def round_threshold(x: FractionalSolution, theta: Fraction) -> EdgeSet:
    """Edges whose fractional value is at least theta (ties included)."""
    if theta <= 0:
        raise ValueError(f"threshold must be positive, got {theta}")
    return EdgeSet(e for e, v in x.values.items() if v >= theta)


def bipartize_half_weight(sub: WeightedGraph) -> Bipartition:
    """Deterministic greedy + single-move local search bipartition.

    Vertices are placed in ascending id order on the side that cuts more
    already-placed weight (ties to side 1); then any single vertex whose
    flip strictly increases the cut weight is moved, rescanning in
    ascending order until no move improves.  At such a local optimum every
    vertex has at least half of its incident weight in the cut, so the cut
    carries at least half of the total weight.
    """
    side: dict[int, int] = {}
    for v in sub.vertices:
        cut_if_side1 = 0
        cut_if_side2 = 0
        for u in sub.neighbors(v):
            if u in side:
                w = sub.weight((u, v))
                if side[u] == 1:
                    cut_if_side1 += w
                else:
                    cut_if_side2 += w
        side[v] = 0 if cut_if_side1 >= cut_if_side2 else 1

    improved = True
    while improved:
        improved = False
        for v in sub.vertices:
            cut = 0
            inner = 0
            for u in sub.neighbors(v):
                w = sub.weight((u, v))
                if side[u] == side[v]:
                    inner += w
                else:
                    cut += w
            if inner > cut:
                side[v] = 1 - side[v]
                improved = True

    cut_edges = EdgeSet(e for e in sub.edges if side[e[0]] != side[e[1]])
    inner_edges = sub.edge_set() - cut_edges
    result = Bipartition(
        side1=tuple(v for v in sub.vertices if side[v] == 0),
        side2=tuple(v for v in sub.vertices if side[v] == 1),
        cut_edges=cut_edges,
        inner_edges=inner_edges,
    )
    assert 2 * total_weight(sub, cut_edges) >= total_weight(sub, sub.edge_set())
    return result


def _structure_edge_count(k: int, kind: str) -> int:
    return k if kind == "cycle" else k * (k - 1) // 2


def _enumerate(g: WeightedGraph, k: int, kind: str, max_structures: int):
    if kind == "cycle":
        return enumerate_k_cycles(g, k, max_structures)
    return enumerate_k_cliques(g, k, max_structures)


def _solved_lp(
    g: WeightedGraph,
    k: int,
    kind: str,
    max_structures: int,
    solution: FractionalSolution | None,
):
    structures = _enumerate(g, k, kind, max_structures)
    matrix = build_incidence(g, structures)
    if solution is None:
        solution = solve_covering_lp(matrix, g)
    else:
        check_certificate(matrix, g, solution)
    return matrix, solution


def _certify(g: WeightedGraph, k: int, kind: str, result: CoverResult) -> CoverResult:
    assert verify_cover(g, k, kind, result.cover), "rounded cover is infeasible"
    assert Fraction(result.cover_weight) <= result.ratio_bound * result.lp_objective
    return result


def _basic_cover(
    g: WeightedGraph,
    k: int,
    kind: str,
    max_structures: int,
    solution: FractionalSolution | None,
) -> CoverResult:
    _, sol = _solved_lp(g, k, kind, max_structures, solution)
    t = _structure_edge_count(k, kind)
    cover = round_threshold(sol, Fraction(1, t))
    result = CoverResult(
        cover=cover,
        cover_weight=total_weight(g, cover),
        lp_objective=sol.objective,
        ratio_bound=Fraction(t),
        algorithm=f"basic-{kind}",
        solution=sol,
    )
    return _certify(g, k, kind, result)


def _improved_cover(
    g: WeightedGraph,
    k: int,
    kind: str,
    max_structures: int,
    solution: FractionalSolution | None,
) -> CoverResult:
    _, sol = _solved_lp(g, k, kind, max_structures, solution)
    t = _structure_edge_count(k, kind)
    threshold = Fraction(2, 2 * t - 1)
    picked = round_threshold(sol, threshold)

    survivors = _enumerate(remove_edges(g, picked), k, kind, max_structures)
    residual = union_structure_edges(survivors)
    span = edge_induced_subgraph(g, residual)
    bipartition = bipartize_half_weight(span)
    removed = bipartition.inner_edges
    cover = picked | removed

    # Each residual edge escaped the rounding (value < threshold) yet sits in
    # a structure whose other t-1 edges also escaped, forcing its value up to
    # at least 1/(2t-1).
    floor = Fraction(1, 2 * t - 1)
    assert all(floor <= sol.values[e] < threshold for e in residual)
    assert not (picked & removed)
    assert removed.issubset(residual)
    assert two_coloring(remove_edges(span, removed)) is not None

    result = CoverResult(
        cover=cover,
        cover_weight=total_weight(g, cover),
        lp_objective=sol.objective,
        ratio_bound=Fraction(2 * t - 1, 2),
        algorithm=f"improved-{kind}",
        solution=sol,
        parts=CoverParts(
            threshold_edges=picked,
            bipartization_edges=removed,
            residual_edges=residual,
            bipartition=bipartition,
        ),
    )
    return _certify(g, k, kind, result)


def cover_k_cycles_basic(
    g: WeightedGraph,
    k: int,
    *,
    max_structures: int = DEFAULT_MAX_STRUCTURES,
    solution: FractionalSolution | None = None,
) -> CoverResult:
    """Threshold-rounding k-cycle cover with certified ratio k."""
    return _basic_cover(g, k, "cycle", max_structures, solution)


def cover_k_cycles_odd(
    g: WeightedGraph,
    k: int,
    *,
    max_structures: int = DEFAULT_MAX_STRUCTURES,
    solution: FractionalSolution | None = None,
) -> CoverResult:
    """Improved k-cycle cover with certified ratio k - 1/2; k must be odd."""
    if k % 2 == 0:
        raise ValueError(
            f"improved cycle covering needs odd k (bipartite graphs can "
            f"still contain even cycles), got k={k}"
        )
    return _improved_cover(g, k, "cycle", max_structures, solution)


def cover_k_cliques_basic(
    g: WeightedGraph,
    k: int,
    *,
    max_structures: int = DEFAULT_MAX_STRUCTURES,
    solution: FractionalSolution | None = None,
) -> CoverResult:
    """Threshold-rounding k-clique cover with certified ratio k(k-1)/2."""
    return _basic_cover(g, k, "clique", max_structures, solution)


def cover_k_cliques_improved(
    g: WeightedGraph,
    k: int,
    *,
    max_structures: int = DEFAULT_MAX_STRUCTURES,
    solution: FractionalSolution | None = None,
) -> CoverResult:
    """Improved k-clique cover with certified ratio (k^2 - k - 1)/2."""
    return _improved_cover(g, k, "clique", max_structures, solution)
