import random
from itertools import combinations
from math import comb

import pytest

from kcover.exact import (
    UnsolvedInstanceError,
    exact_max_packing,
    exact_min_cover,
    sandwich_check,
    turan_graph_edge_count,
    turan_tau_complete,
)
from kcover.graph import EdgeSet, WeightedGraph, complete_graph, total_weight
from kcover.lp import solve_covering_lp
from kcover.structures import (
    build_incidence,
    enumerate_k_cliques,
    enumerate_k_cycles,
    verify_cover,
)


def random_graph(rng, n, p):
    edges = [
        (u, v, rng.randint(1, 10))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return WeightedGraph.build(range(n), edges)


# Brute-force oracles over explicit bitmask subsets; independent of the
# branch-and-bound code under test.


def brute_min_cover_weight(g, k, kind):
    enum = enumerate_k_cycles if kind == "cycle" else enumerate_k_cliques
    structures = enum(g, k)
    if not structures:
        return 0
    index = g.edge_index
    masks = []
    for s in structures:
        mask = 0
        for e in s.edges:
            mask |= 1 << index[e]
        masks.append(mask)
    best = None
    for subset in range(1 << g.edge_count):
        if all(mask & subset for mask in masks):
            weight = sum(w for i, w in enumerate(g.weights) if subset >> i & 1)
            if best is None or weight < best:
                best = weight
    return best


def brute_max_packing_count(g, k):
    cliques = enumerate_k_cliques(g, k)
    index = g.edge_index
    masks = []
    for s in cliques:
        mask = 0
        for e in s.edges:
            mask |= 1 << index[e]
        masks.append(mask)
    best = 0
    for subset in range(1 << len(masks)):
        used = 0
        ok = True
        count = 0
        for i, mask in enumerate(masks):
            if subset >> i & 1:
                if used & mask:
                    ok = False
                    break
                used |= mask
                count += 1
        if ok:
            best = max(best, count)
    return best


class TestExactMinCover:
    def test_triangle_both_kinds(self):
        g = complete_graph(3)
        for kind in ("cycle", "clique"):
            res = exact_min_cover(g, 3, kind)
            assert res.solved and res.weight == 1

    def test_k5_triangle_cover_is_four(self):
        g = complete_graph(5)
        res = exact_min_cover(g, 3, "cycle")
        assert res.weight == 4
        # Mantel bound cross-check by exhaustive subset search.
        assert brute_min_cover_weight(g, 3, "cycle") == 4

    def test_k4_single_4clique(self):
        res = exact_min_cover(complete_graph(4), 4, "clique")
        assert res.weight == 1

    def test_no_structures(self):
        g = WeightedGraph.build(range(4), [(0, 1, 5)])
        res = exact_min_cover(g, 3, "cycle")
        assert res.solved and res.weight == 0 and res.cover == EdgeSet()

    def test_matches_brute_force_on_random_instances(self):
        rng = random.Random(808)
        cases = 0
        while cases < 14:
            g = random_graph(rng, rng.randint(4, 6), rng.choice([0.5, 0.8, 1.0]))
            if g.edge_count > 13:
                continue
            for k, kind in ((3, "cycle"), (4, "cycle"), (3, "clique"), (4, "clique")):
                res = exact_min_cover(g, k, kind)
                assert res.solved
                assert res.weight == brute_min_cover_weight(g, k, kind)
                assert res.cover is not None
                assert verify_cover(g, k, kind, res.cover)
                assert total_weight(g, res.cover) == res.weight
            cases += 1

    def test_shared_cheap_edge_with_tight_upper_bound(self):
        # Two triangles sharing one cheap edge: the LP puts that edge at its
        # upper bound 1, so the covering dual needs a positive upper-bound
        # multiplier; the search bound must account for it.
        g = WeightedGraph.build(
            range(4),
            [(0, 1, 1), (0, 2, 10), (1, 2, 10), (0, 3, 10), (1, 3, 10)],
        )
        res = exact_min_cover(g, 3, "cycle")
        assert res.solved and res.weight == 1
        assert res.weight == brute_min_cover_weight(g, 3, "cycle")

    def test_skewed_weights_match_brute_force(self):
        rng = random.Random(515)
        cases = 0
        while cases < 10:
            n = rng.randint(4, 6)
            edges = [
                (u, v, rng.choice([1, 1, 10]))
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.9
            ]
            g = WeightedGraph.build(range(n), edges)
            if g.edge_count > 13:
                continue
            for k, kind in ((3, "cycle"), (3, "clique")):
                res = exact_min_cover(g, k, kind)
                assert res.solved
                assert res.weight == brute_min_cover_weight(g, k, kind)
            cases += 1

    def test_lp_never_exceeds_optimum(self):
        rng = random.Random(909)
        for _ in range(10):
            g = random_graph(rng, 7, 0.7)
            structures = enumerate_k_cycles(g, 3)
            res = exact_min_cover(g, 3, "cycle")
            assert res.solved
            if structures:
                sol = solve_covering_lp(build_incidence(g, structures), g)
                assert sol.objective <= res.weight

    def test_budget_exhaustion_reports_unsolved(self):
        g = complete_graph(7)
        res = exact_min_cover(g, 3, "cycle", node_budget=3)
        assert not res.solved
        assert res.status == "unsolved"
        assert res.cover is None and res.weight is None
        assert res.node_count > 3

    def test_deterministic(self):
        rng = random.Random(3)
        g = random_graph(rng, 7, 0.8)
        assert exact_min_cover(g, 3, "cycle") == exact_min_cover(g, 3, "cycle")


class TestExactMaxPacking:
    def test_k4_single_triangle(self):
        res = exact_max_packing(complete_graph(4), 3)
        assert res.solved and res.count == 1

    def test_k6_four_triangles(self):
        g = complete_graph(6)
        res = exact_max_packing(g, 3)
        assert res.count == 4
        # Oracle: no 5 of the 20 triangles are pairwise edge-disjoint, but
        # some 4 are; exhaustive scan over all C(20,5) and C(20,4) families.
        cliques = enumerate_k_cliques(g, 3)
        index = g.edge_index
        masks = []
        for s in cliques:
            mask = 0
            for e in s.edges:
                mask |= 1 << index[e]
            masks.append(mask)

        def exists_disjoint_family(size):
            for family in combinations(masks, size):
                used = 0
                for mask in family:
                    if used & mask:
                        break
                    used |= mask
                else:
                    return True
            return False

        assert not exists_disjoint_family(5)
        assert exists_disjoint_family(4)

    def test_k7_fano_packing_is_perfect(self):
        g = complete_graph(7)
        res = exact_max_packing(g, 3)
        assert res.count == 7
        # 21 unit edges / 3 edges per triangle caps the packing at 7, and the
        # Fano triples witness that 7 is reachable.
        fano = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (0, 4, 5), (1, 5, 6), (0, 2, 6)]
        used = set()
        for a, b, c in fano:
            for e in ((a, b), (a, c), (b, c)):
                e = (min(e), max(e))
                assert g.has_edge(*e) and e not in used
                used.add(e)
        assert len(used) == 21
        # Every edge of K7 is used by the returned packing as well.
        assert res.cliques is not None
        covered = EdgeSet()
        for s in res.cliques:
            covered = covered | s.edges
        assert covered == g.edge_set()

    def test_matches_brute_force_on_random_instances(self):
        rng = random.Random(606)
        cases = 0
        while cases < 12:
            g = random_graph(rng, rng.randint(4, 7), rng.choice([0.5, 0.8]))
            if len(enumerate_k_cliques(g, 3)) > 12:
                continue
            res = exact_max_packing(g, 3)
            assert res.solved
            assert res.count == brute_max_packing_count(g, 3)
            cases += 1

    def test_packing_edge_bound(self):
        g = complete_graph(6)
        res = exact_max_packing(g, 4)
        assert res.solved
        assert res.count <= g.edge_count // 6

    def test_budget_exhaustion(self):
        res = exact_max_packing(complete_graph(7), 3, node_budget=2)
        assert not res.solved


class TestSandwich:
    def test_k7_values(self):
        assert sandwich_check(complete_graph(7), 3) == (7, 9, True)

    def test_k4_with_k4_cliques(self):
        assert sandwich_check(complete_graph(4), 4) == (1, 1, True)

    def test_triangle_free(self):
        g = WeightedGraph.build(range(4), [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
        assert sandwich_check(g, 3) == (0, 0, True)

    def test_weights_are_ignored(self):
        g = WeightedGraph.build(range(3), [(0, 1, 10), (0, 2, 10), (1, 2, 10)])
        nu, tau, ok = sandwich_check(g, 3)
        assert (nu, tau, ok) == (1, 1, True)

    def test_unsolved_propagates(self):
        with pytest.raises(UnsolvedInstanceError):
            sandwich_check(complete_graph(7), 3, node_budget=2)

    def test_inequality_on_random_graphs(self):
        rng = random.Random(112)
        for _ in range(10):
            g = random_graph(rng, rng.randint(4, 7), 0.7)
            nu, tau, ok = sandwich_check(g, 3)
            assert ok
            assert nu <= tau <= 3 * nu


class TestTuran:
    def test_reference_values(self):
        assert turan_tau_complete(5, 3) == 4
        assert turan_tau_complete(4, 4) == 1
        assert turan_tau_complete(7, 3) == 9

    def test_below_k_is_zero(self):
        assert turan_tau_complete(2, 3) == 0
        assert turan_tau_complete(4, 5) == 0

    def test_turan_graph_edges_small(self):
        assert turan_graph_edge_count(7, 2) == 12  # K_{3,4}
        assert turan_graph_edge_count(5, 3) == 8  # K_{2,2,1}
        assert turan_graph_edge_count(4, 3) == 5  # K_{2,1,1}

    def test_matches_brute_force_max_kfree_subgraph(self):
        # ex(n; K_k) by exhaustive subset search over K_n's edges, n <= 5.
        for n in range(3, 6):
            g = complete_graph(n)
            for k in range(3, n + 1):
                best = 0
                for subset in range(1 << g.edge_count):
                    kept = [e for i, e in enumerate(g.edges) if subset >> i & 1]
                    sub = WeightedGraph.build(range(n), [(u, v, 1) for u, v in kept])
                    if not enumerate_k_cliques(sub, k):
                        best = max(best, len(kept))
                assert best == turan_graph_edge_count(n, k - 1)
                assert comb(n, 2) - best == turan_tau_complete(n, k)

    def test_oracle_agrees_with_closed_form(self):
        for n in range(3, 8):
            g = complete_graph(n)
            for k in range(3, n + 1):
                res = exact_min_cover(g, k, "clique")
                assert res.solved
                assert res.weight == turan_tau_complete(n, k)
