"""Exact graded discrepancy for small instances.

The subset DP handles up to 22 vertices; plain enumeration of permutations
is kept as an independent check for n <= 8.
"""

import time

from grdisc import (
    Context,
    GreedyVariant,
    exact_grdisc_dp,
    exact_grdisc_enum,
    first_deletion_bound,
    order,
    random_uniform,
    theorem_bound_scaled,
)
from grdisc.constructions import clique, disjoint_union, isolated, matching_copies

H = disjoint_union(clique(4), matching_copies(1), isolated(2))
value, witness = exact_grdisc_dp(H)
print("K4 + K2 + 2K1:", value, "/", Context.of(H).denominator, "witness", witness)
print("enumeration agrees:", exact_grdisc_enum(H) == value)

# sandwich on a few larger random graphs
print(" n   m  first-del  exact  greedy  bound  seconds")
for seed, (n, m) in enumerate([(12, 20), (14, 45), (16, 60)]):
    G = random_uniform(n, 2, m, seed)
    start = time.perf_counter()
    exact = exact_grdisc_dp(G)[0]
    elapsed = time.perf_counter() - start
    greedy = min(order(G, v).profile.max_abs_scaled for v in GreedyVariant)
    print(f"{n:2d} {m:3d} {first_deletion_bound(G):9d} {exact:6d} {greedy:7d} {theorem_bound_scaled(Context.of(G)):6d}  {elapsed:.2f}")
