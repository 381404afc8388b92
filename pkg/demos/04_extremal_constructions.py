"""Instances whose every ordering has a large prefix discrepancy.

Graphs: disjoint cliques, a matching and isolated vertices. Hypergraphs: one
or more cliques plus a filler of bounded degree. Deleting any single vertex
already leaves a prefix far from average, which the first-deletion bound
measures.
"""

from fractions import Fraction

from grdisc import binomial, extremal_graph, extremal_hypergraph
from grdisc.errors import InfeasibleParameters

H, report = extremal_graph(8, Fraction(1, 4))
print("p=1/4, n=8 degrees:", H.degrees)
print("first deletion bound:", report.first_deletion_bound_scaled, "/", binomial(8, 2))
for note in report.notes:
    print("note:", note)

try:
    extremal_graph(10, Fraction(1, 3))
except InfeasibleParameters as exc:
    print("strict mode refuses:", exc)
H, report = extremal_graph(10, Fraction(1, 3), mode="rounded")
print("rounded mode realises p =", report.p)

print("\nk=3: first-deletion ratio against min{p, p^(2/3) - p}")
for p in (Fraction(1, 20), Fraction(3, 10)):
    target = min(float(p), float(p) ** (2 / 3) - float(p))
    for n in (40, 80, 160):
        H, report = extremal_hypergraph(n, 3, p)
        ratio = report.first_deletion_bound_scaled / (binomial(n - 1, 2) * binomial(n, 3))
        print(f"  p={float(p):.2f} n={n:3d} ratio={ratio:.4f} target={target:.4f} branch={report.spec.branch}")
