"""Greedy backward deletion on a random graph and a random 3-graph.

Both variants delete one vertex per step from the end of the ordering. The
proof rule looks only at the sign of the running discrepancy; the exact
greedy rule picks whatever keeps |N| smallest.
"""

from grdisc import Context, GreedyVariant, check_step_invariants, order, random_uniform

for n, k, m in ((60, 2, 600), (30, 3, 1200)):
    H = random_uniform(n, k, m, seed=7)
    ctx = Context.of(H)
    print(f"n={n} k={k} m={m}")
    for variant in GreedyVariant:
        result = order(H, variant)
        cert = result.certificate
        print(f"  {variant.value:5s} max|N|/bound = {cert.max_abs_scaled / cert.bound_scaled:.3f}")
    proof = order(H, GreedyVariant.PROOF_RULE)
    verdicts = [check_step_invariants(s, ctx) for s in proof.trace]
    print(f"  proof-rule steps satisfying the shrink invariants: {sum(v.ok for v in verdicts)}/{len(verdicts)}")
    step = proof.trace[0]
    print(f"  first step: t={step.t} removed v{step.deleted_vertex} (degree {step.deleted_degree}), N {step.n_before} -> {step.n_after}")
