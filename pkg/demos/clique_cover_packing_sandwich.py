#!/usr/bin/env python3
"""Clique covering versus clique packing on K7, with the exact oracles.

Edge-disjoint k-cliques each force one removed edge, so the packing number
nu lower-bounds the covering number tau; removing every edge of a maximal
packing covers everything, giving tau <= C(k,2) * nu.  K7 is the smallest
complete graph with a perfect triangle packing (the Fano plane), where all
21 edges are consumed by 7 disjoint triangles.
"""

from kcover import (
    complete_graph,
    cover_k_cliques_basic,
    cover_k_cliques_improved,
    exact_max_packing,
    exact_min_cover,
    sandwich_check,
    turan_tau_complete,
)

g = complete_graph(7)

cover = exact_min_cover(g, 3, "clique")
packing = exact_max_packing(g, 3)
print(f"K7 triangle covering number tau = {cover.weight} "
      f"({cover.node_count} search nodes)")
print(f"K7 triangle packing number  nu = {packing.count} "
      f"({packing.node_count} search nodes)")
print(f"Turan closed form: {turan_tau_complete(7, 3)}")

assert packing.cliques is not None
print("\npacked triangles (a perfect packing, every edge used):")
for s in packing.cliques:
    print(f"  {s.vertices}")

nu, tau, ok = sandwich_check(g, 3)
print(f"\nsandwich: {nu} <= {tau} <= C(3,2)*{nu} = {3 * nu}  holds: {ok}")

basic = cover_k_cliques_basic(g, 3)
improved = cover_k_cliques_improved(g, 3)
print(f"\napproximations vs exact {tau}:")
print(f"  basic    weight {basic.cover_weight}, bound {basic.ratio_bound} * {basic.lp_objective}")
print(f"  improved weight {improved.cover_weight}, bound {improved.ratio_bound} * {improved.lp_objective}")

print("\n4-clique covering of K7:")
cover4 = exact_min_cover(g, 4, "clique")
print(f"  exact tau~ = {cover4.weight}, closed form {turan_tau_complete(7, 4)}")
