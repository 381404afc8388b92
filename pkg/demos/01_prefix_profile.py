"""How far does each prefix of an ordering stray from the average density?

For an ordering v_1..v_n of a k-uniform hypergraph with m edges, the i-th
prefix should hold about p*C(i,k) edges. The library tracks the scaled gap
N_i = e_i*C(n,k) - m*C(i,k), which is always an exact integer.
"""

from grdisc import Context, certify, evaluate_ordering, theorem_bound_scaled
from grdisc.constructions import clique, disjoint_union, isolated

# a 5-clique padded with 5 isolated vertices
H = disjoint_union(clique(5), isolated(5))
ctx = Context.of(H)
print(f"n={H.n} m={H.m} p={ctx.density}")

# putting the clique first is about the worst thing one can do
profile = evaluate_ordering(H, range(10))
for i, e_i, N in profile.rows:
    print(f"  i={i:2d} e_i={e_i:2d} N_i={N:5d}  value={N / ctx.denominator:+.3f}")

cert = certify(profile)
print("bound (scaled):", theorem_bound_scaled(ctx))
print("within bound:", cert.within_bound, "first violation at prefix", cert.first_violation_index)

# interleaving does much better
mixed = [0, 5, 1, 6, 2, 7, 3, 8, 4, 9]
print("interleaved max |N_i|:", evaluate_ordering(H, mixed).max_abs_scaled)
