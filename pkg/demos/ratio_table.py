#!/usr/bin/env python3
"""Exact tau/nu ratios for triangle covering/packing on K_3..K_9.

As n grows the covering-over-packing ratio on complete graphs tends to
k/2 (= 3/2 for triangles); the finite values oscillate below it once the
small-n irregularities (n = 4, 5) are past.  Everything here is computed
by the exact branch-and-bound oracles, no approximation involved.
"""

from fractions import Fraction
from math import comb

from kcover import complete_graph, exact_max_packing, exact_min_cover

print(f"{'n':>2} {'tau':>4} {'nu':>4} {'tau/nu':>7} {'tau/C(n,2)':>10}")
for n in range(3, 10):
    g = complete_graph(n)
    tau = exact_min_cover(g, 3, "clique").weight
    nu = exact_max_packing(g, 3).count
    assert tau is not None and nu is not None
    print(
        f"{n:>2} {tau:>4} {nu:>4} {str(Fraction(tau, nu)):>7} "
        f"{str(Fraction(tau, comb(n, 2))):>10}"
    )

print("\nlimit of tau/nu for triangles is 3/2; the limit of tau/C(n,2) is 1/2.")
print("the same table is available from the command line:")
print("  kcover ratio-study --k 3 --kind clique --n-range 3:9")
