"""Exact small-instance oracles: minimum covers, maximum packings, Turan values.

Both solvers are plain depth-first branch and bound over edge bitmasks with
deterministic branching, so repeated runs return identical optima.  They
count search nodes against an explicit budget and report "unsolved" when it
runs out rather than ever returning an unproven answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import EdgeSet, WeightedGraph, total_weight
from .lp import solve_covering_lp
from .structures import (
    DEFAULT_MAX_STRUCTURES,
    EdgeStructure,
    build_incidence,
    enumerate_k_cliques,
    enumerate_k_cycles,
    verify_cover,
)

DEFAULT_NODE_BUDGET = 10_000_000


class UnsolvedInstanceError(RuntimeError):
    """An exact oracle ran out of node budget on this instance."""


@dataclass(frozen=True)
class ExactCover:
    """Provably minimum-weight cover, or an explicit unsolved outcome."""

    status: str  # "optimal" or "unsolved"
    cover: EdgeSet | None
    weight: int | None
    node_count: int

    @property
    def solved(self) -> bool:
        return self.status == "optimal"


@dataclass(frozen=True)
class ExactPacking:
    """Provably maximum family of pairwise edge-disjoint k-cliques."""

    status: str
    cliques: tuple[EdgeStructure, ...] | None
    count: int | None
    node_count: int

    @property
    def solved(self) -> bool:
        return self.status == "optimal"


class _BudgetExceeded(Exception):
    pass


class _CoverSearch:
    """Branch on the edges of an uncovered structure, cheapest-to-finish first.

    Structure = the uncovered row with fewest selectable edges (forced rows
    are handled for free); its candidate edges are tried in descending
    weight.  Branch i commits edge i and forbids edges 0..i-1, so subtrees
    are disjoint.  Lower bound: max of a greedy edge-disjoint-row bound and
    a bound inherited from the root LP dual (y*, z*): restricting y* to the
    still-uncovered rows stays dual-feasible for the residual system once
    the constant upper-bound slack sum(z*) is paid, so
    sum(y* over uncovered) - sum(z*) lower-bounds any completion.
    """

    def __init__(self, row_masks, row_edges, weights, duals, dual_offset, budget):
        self.row_masks = row_masks
        self.row_edges = row_edges  # per row: edge ids sorted by (-weight, id)
        self.weights = weights
        self.nonzero_duals = [(i, y) for i, y in enumerate(duals) if y > 0]
        self.dual_offset = dual_offset  # sum of z* = max(0, dual load - w)
        self.budget = budget
        self.nodes = 0
        self.best_weight: int | None = None
        self.best_mask = 0

    def run(self):
        try:
            self._visit(0, 0, 0)
        except _BudgetExceeded:
            return False
        return True

    def _visit(self, chosen: int, forbidden: int, cost: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded
        if self.best_weight is not None and cost >= self.best_weight:
            return

        weights = self.weights
        branch_row = -1
        branch_count = 0
        greedy_bound = 0
        greedy_used = 0
        for r, mask in enumerate(self.row_masks):
            if mask & chosen:
                continue
            rem = mask & ~forbidden
            if rem == 0:
                return  # row can no longer be covered on this branch
            count = rem.bit_count()
            if branch_row < 0 or count < branch_count:
                branch_row, branch_count = r, count
            if not rem & greedy_used:
                greedy_bound += min(weights[e] for e in self.row_edges[r] if rem >> e & 1)
                greedy_used |= rem
        if branch_row < 0:
            # Everything covered; strict improvement keeps the first optimum.
            if self.best_weight is None or cost < self.best_weight:
                self.best_weight = cost
                self.best_mask = chosen
            return

        bound = greedy_bound
        if self.nonzero_duals:
            dual_sum = (
                sum(
                    (y for r, y in self.nonzero_duals if not self.row_masks[r] & chosen),
                    Fraction(0),
                )
                - self.dual_offset
            )
            if dual_sum > bound:
                bound = math.ceil(dual_sum)
        if self.best_weight is not None and cost + bound >= self.best_weight:
            return

        rem = self.row_masks[branch_row] & ~forbidden
        taken = 0
        for e in self.row_edges[branch_row]:
            if rem >> e & 1:
                self._visit(chosen | (1 << e), forbidden | taken, cost + weights[e])
                taken |= 1 << e


def exact_min_cover(
    g: WeightedGraph,
    k: int,
    kind: str,
    *,
    max_structures: int = DEFAULT_MAX_STRUCTURES,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ExactCover:
    """Minimum-weight k-structure cover by branch and bound.

    The returned weight is provably optimal; if the node budget runs out
    the result is explicitly "unsolved", never a guess.
    """
    if kind == "cycle":
        structures = enumerate_k_cycles(g, k, max_structures)
    else:
        structures = enumerate_k_cliques(g, k, max_structures)
    if not structures:
        return ExactCover("optimal", EdgeSet(), 0, 0)

    matrix = build_incidence(g, structures)
    relaxation = solve_covering_lp(matrix, g)

    weights = g.weights
    row_masks = []
    row_edges = []
    for idx in matrix.row_edge_indices:
        mask = 0
        for e in idx:
            mask |= 1 << e
        row_masks.append(mask)
        row_edges.append(tuple(sorted(idx, key=lambda e: (-weights[e], e))))

    load = [Fraction(0)] * matrix.column_count
    for idx, y in zip(matrix.row_edge_indices, relaxation.dual):
        if y:
            for e in idx:
                load[e] += y
    dual_offset = sum(
        (l - w for l, w in zip(load, weights) if l > w), Fraction(0)
    )

    search = _CoverSearch(
        row_masks, row_edges, weights, relaxation.dual, dual_offset, node_budget
    )
    if not search.run():
        return ExactCover("unsolved", None, None, search.nodes)

    cover = EdgeSet(e for i, e in enumerate(g.edges) if search.best_mask >> i & 1)
    weight = search.best_weight
    assert weight is not None and weight == total_weight(g, cover)
    assert relaxation.objective <= weight, "LP bound exceeds exact optimum"
    assert verify_cover(g, k, kind, cover)
    return ExactCover("optimal", cover, weight, search.nodes)


class _PackingSearch:
    """Include/exclude the first clique that is edge-disjoint from the chosen ones."""

    def __init__(self, masks, clique_edge_count, budget):
        self.masks = masks
        self.per_clique = clique_edge_count
        self.budget = budget
        self.nodes = 0
        self.best_count = -1
        self.best: tuple[int, ...] = ()

    def run(self):
        try:
            self._visit(0, 0, ())
        except _BudgetExceeded:
            return False
        return True

    def _visit(self, start: int, used: int, chosen: tuple[int, ...]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded

        available = [i for i in range(start, len(self.masks)) if not self.masks[i] & used]
        if not available:
            if len(chosen) > self.best_count:
                self.best_count = len(chosen)
                self.best = chosen
            return
        free = 0
        for i in available:
            free |= self.masks[i]
        bound = len(chosen) + min(len(available), free.bit_count() // self.per_clique)
        if bound <= self.best_count:
            return

        first = available[0]
        self._visit(first + 1, used | self.masks[first], chosen + (first,))
        self._visit(first + 1, used, chosen)


def exact_max_packing(
    g: WeightedGraph,
    k: int,
    *,
    max_structures: int = DEFAULT_MAX_STRUCTURES,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ExactPacking:
    """Maximum-cardinality family of edge-disjoint k-cliques, exactly."""
    cliques = enumerate_k_cliques(g, k, max_structures)
    if not cliques:
        return ExactPacking("optimal", (), 0, 0)
    matrix = build_incidence(g, cliques)
    masks = []
    for idx in matrix.row_edge_indices:
        mask = 0
        for e in idx:
            mask |= 1 << e
        masks.append(mask)

    search = _PackingSearch(masks, k * (k - 1) // 2, node_budget)
    if not search.run():
        return ExactPacking("unsolved", None, None, search.nodes)

    chosen = tuple(cliques[i] for i in search.best)
    used = EdgeSet()
    for s in chosen:
        assert not (used & s.edges), "packing shares an edge"
        used = used | s.edges
    assert search.best_count <= g.edge_count // (k * (k - 1) // 2)
    return ExactPacking("optimal", chosen, search.best_count, search.nodes)


def sandwich_check(
    g: WeightedGraph,
    k: int,
    *,
    max_structures: int = DEFAULT_MAX_STRUCTURES,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, int, bool]:
    """Exact (packing, covering, inequality) triple for the unweighted graph.

    The covering-versus-packing inequality nu <= tau <= C(k,2) * nu is a
    statement about cardinalities, so the covering number is computed with
    unit weights regardless of the weights carried by `g`.
    """
    unit = WeightedGraph.build(g.vertices, [(u, v, 1) for u, v in g.edges])
    packing = exact_max_packing(unit, k, max_structures=max_structures, node_budget=node_budget)
    if not packing.solved:
        raise UnsolvedInstanceError(f"packing search exhausted {node_budget} nodes")
    cover = exact_min_cover(
        unit, k, "clique", max_structures=max_structures, node_budget=node_budget
    )
    if not cover.solved:
        raise UnsolvedInstanceError(f"cover search exhausted {node_budget} nodes")
    nu = packing.count
    tau = cover.weight
    assert nu is not None and tau is not None
    return nu, tau, nu <= tau <= math.comb(k, 2) * nu


def turan_graph_edge_count(n: int, r: int) -> int:
    """Edges of the complete r-partite graph on n vertices with balanced parts."""
    if r <= 0:
        raise ValueError("need at least one part")
    if n <= 0:
        return 0
    q, s = divmod(n, r)
    return (n * n - s * (q + 1) ** 2 - (r - s) * q * q) // 2


def turan_tau_complete(n: int, k: int) -> int:
    """Exact k-clique covering number of K_n.

    A K_k-free spanning subgraph of K_n has at most as many edges as the
    balanced complete (k-1)-partite graph, and that bound is attained, so
    the minimum number of edges to delete is C(n,2) minus that count.
    Returns 0 when n < k (no k-clique exists).
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if n < k:
        return 0
    return math.comb(n, 2) - turan_graph_edge_count(n, k - 1)
