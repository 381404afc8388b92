"""Building blocks, extremal families and random instances."""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .discrepancy import first_deletion_bound
from .errors import (
    FillerInfeasible,
    InfeasibleParameters,
    NegativeCount,
    TooManyEdges,
    UniformityMismatch,
)
from .hypergraph import UniformHypergraph, binomial

STRICT = "strict"
ROUNDED = "rounded"
LOW = "low"
HIGH = "high"


def round_half_up(x) -> int:
    return math.floor(Fraction(x) + Fraction(1, 2))


def exact_sqrt(q: Fraction) -> Optional[Fraction]:
    """Square root of a non-negative rational if it is rational, else None."""
    q = Fraction(q)
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def _as_int(x: Fraction) -> Optional[int]:
    return x.numerator if x.denominator == 1 else None


# -- building blocks ---------------------------------------------------------


def clique(n: int, k: int = 2) -> UniformHypergraph:
    return UniformHypergraph(n, k, itertools.combinations(range(n), k))


def matching_copies(count: int) -> UniformHypergraph:
    return UniformHypergraph(2 * count, 2, [(2 * j, 2 * j + 1) for j in range(count)])


def isolated(count: int, k: int = 2) -> UniformHypergraph:
    return UniformHypergraph(count, k)


def disjoint_union(*parts: UniformHypergraph) -> UniformHypergraph:
    """Disjoint union, relabelling each part's vertices after the previous ones."""
    if len(parts) == 1 and not isinstance(parts[0], UniformHypergraph):
        parts = tuple(parts[0])
    if not parts:
        return UniformHypergraph(0, 2)
    k = parts[0].k
    offset = 0
    edges = []
    for part in parts:
        if part.k != k:
            raise UniformityMismatch(f"cannot join {k}-uniform and {part.k}-uniform parts")
        edges.extend(tuple(v + offset for v in edge) for edge in part.edges)
        offset += part.n
    return UniformHypergraph(offset, k, edges)


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalGraphSpec:
    n: int
    p: Fraction
    branch: str
    mode: str
    clique_size: int
    clique_copies: int
    matching_copies: int
    isolated_count: int


@dataclass(frozen=True)
class ExtremalHypergraphSpec:
    n: int
    k: int
    p: Fraction
    branch: str
    clique_size: int
    clique_copies: int
    filler_vertices: int
    filler_target_edges: int
    filler_degree_cap: int


@dataclass
class ConstructionReport:
    n: int
    k: int
    m: int
    p: Fraction
    first_deletion_bound_scaled: int
    theorem_lower_bound: float
    theorem_lower_bound_scaled: Optional[Fraction]
    meets_theorem_lower_bound: Optional[bool]
    degree_summary: dict
    filler_max_degree: Optional[int] = None
    filler_cap: Optional[int] = None
    spec: object = None
    notes: list = field(default_factory=list)

    def as_dict(self) -> dict:
        den = binomial(self.n, self.k)
        fdb = Fraction(self.first_deletion_bound_scaled, den) if den else Fraction(0)
        out = {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "p": f"{self.p.numerator}/{self.p.denominator}",
            "p_decimal": format(float(self.p), ".12g"),
            "firstDeletionBoundScaled": str(self.first_deletion_bound_scaled),
            "firstDeletionBound": f"{fdb.numerator}/{fdb.denominator}",
            "firstDeletionBoundDecimal": format(float(fdb), ".12g"),
            "theoremLowerBound": format(self.theorem_lower_bound, ".12g"),
            "theoremLowerBoundScaled": None
            if self.theorem_lower_bound_scaled is None
            else f"{self.theorem_lower_bound_scaled.numerator}/{self.theorem_lower_bound_scaled.denominator}",
            "meetsTheoremLowerBound": self.meets_theorem_lower_bound,
            "degreeSummary": {str(d): c for d, c in sorted(self.degree_summary.items())},
            "fillerMaxDegree": self.filler_max_degree,
            "fillerCap": self.filler_cap,
            "notes": list(self.notes),
        }
        if self.spec is not None:
            spec = dict(self.spec.__dict__)
            spec["p"] = str(spec["p"])
            out["spec"] = spec
        return out


# -- extremal graphs ---------------------------------------------------------


def graph_lower_expression(n: int, p: Fraction) -> float:
    """``min{p, sqrt(p) - p} * (n-1) - 1`` as a display value."""
    return min(float(p), math.sqrt(p) - float(p)) * (n - 1) - 1


def meets_graph_lower_expression(value: Fraction, n: int, p: Fraction) -> bool:
    """Exactly decide ``value >= min{p, sqrt(p) - p} * (n-1) - 1``."""
    p = Fraction(p)
    if value >= p * (n - 1) - 1:
        return True
    # value >= (sqrt(p) - p)(n-1) - 1  <=>  value + 1 + p(n-1) >= sqrt(p)(n-1)
    lhs = value + 1 + p * (n - 1)
    return lhs >= 0 and lhs * lhs >= p * (n - 1) ** 2


def _graph_counts(n: int, p: Fraction):
    """Exact (branch, size, copies, matching, isolated) as Fractions, or None."""
    if p < Fraction(1, 4):
        return (
            LOW,
            2 * p * n,
            1 / (4 * p),
            (1 - 2 * p) * n / 4,
            p * n,
        )
    root = exact_sqrt(p)
    if root is None:
        return None
    return HIGH, root * n, Fraction(1), (root - p) * n / 2, (1 - root) ** 2 * n


def _strict_graph_counts(n: int, p: Fraction):
    counts = _graph_counts(n, p)
    if counts is None:
        return None
    branch, *values = counts
    ints = [_as_int(Fraction(x)) for x in values]
    if any(x is None or x < 0 for x in ints):
        return None
    return (branch, *ints)


def _feasible_period(p: Fraction) -> Optional[int]:
    """Smallest ``L`` such that the strict counts are integral exactly for ``n = jL``.

    Every count is ``n`` times a constant, except the number of clique copies,
    which does not depend on ``n`` and must itself be an integer.
    """
    counts = _graph_counts(1, p)
    if counts is None:
        return None
    _, size, copies, matching, isolated_count = counts
    if _as_int(Fraction(copies)) is None or min(size, matching, isolated_count) < 0:
        return None
    return math.lcm(*(Fraction(x).denominator for x in (size, matching, isolated_count)))


@functools.lru_cache(maxsize=64)
def _ranked_periods(p: Fraction, max_den: int) -> tuple:
    """Feasible densities near ``p`` (closest first) with their periods."""
    candidates = {p}
    for den in range(1, max_den + 1):
        for num in range(1, den + 1):
            candidates.add(Fraction(num, den))
    ranked = sorted(candidates, key=lambda q: (abs(q - p), q))[:256]
    return tuple((q, L) for q in ranked if (L := _feasible_period(q)) is not None)


def nearest_feasible_graph(n: int, p: Fraction, window: int = 64, max_den: int = 64):
    """Closest strict-feasible ``(n', p')``, preferring the same ``p``."""
    for q, period in _ranked_periods(Fraction(p), max_den):
        below = max(period, n // period * period)
        above = below + period
        n2 = below if abs(n - below) <= abs(above - n) else above
        if abs(n2 - n) <= window:
            return n2, q
    return None


def extremal_graph(n: int, p, mode: str = STRICT):
    """Disjoint union of cliques, a matching and isolated vertices.

    For ``p < 1/4``: ``1/(4p)`` copies of ``K_{2pn}``, ``(1-2p)n/4`` copies of
    ``K_2`` and ``pn`` isolated vertices; for ``p >= 1/4``: one ``K_{sqrt(p)n}``,
    ``(sqrt(p)-p)n/2`` copies of ``K_2`` and ``(1-sqrt(p))^2 n`` isolated
    vertices. ``mode="rounded"`` accepts any ``(n, p)`` and reports the
    realised density.
    """
    p = Fraction(p)
    if not 0 < p <= 1:
        raise InfeasibleParameters(f"density {p} outside (0, 1]")
    if mode == STRICT:
        counts = _strict_graph_counts(n, p)
        if counts is None:
            raise InfeasibleParameters(
                f"n={n}, p={p} does not give integral part sizes",
                nearest_feasible_graph(n, p),
            )
        branch, size, copies, matching, isolated_count = counts
    elif mode == ROUNDED:
        branch, size, copies, matching, isolated_count = _rounded_graph_counts(n, p)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    parts = [clique(size) for _ in range(copies)]
    parts += [matching_copies(matching), isolated(isolated_count)]
    H = disjoint_union(parts)
    spec = ExtremalGraphSpec(n, p, branch, mode, size, copies, matching, isolated_count)
    return H, _graph_report(H, spec)


def _rounded_graph_counts(n: int, p: Fraction):
    if p < Fraction(1, 4):
        branch = LOW
        size = max(1, min(n, round_half_up(2 * p * n)))
        copies = max(1, round_half_up(1 / (4 * p)))
    else:
        branch = HIGH
        size = max(1, min(n, round_half_up(Fraction(math.sqrt(p)) * n)))
        copies = 1
    copies = min(copies, n // size)
    remaining = n - copies * size
    if remaining < 0:
        raise NegativeCount(f"cliques need {copies * size} > {n} vertices")
    target = round_half_up(p * binomial(n, 2))
    matching = max(0, min(target - copies * binomial(size, 2), remaining // 2))
    return branch, size, copies, matching, remaining - 2 * matching


def _graph_report(H: UniformHypergraph, spec: ExtremalGraphSpec) -> ConstructionReport:
    n, m = H.n, H.m
    den = binomial(n, 2)
    p = Fraction(m, den) if den else Fraction(0)
    fdb = first_deletion_bound(H) if n else 0
    root = exact_sqrt(p)
    lower_scaled = None
    if root is not None:
        lower_scaled = (min(p, root - p) * (n - 1) - 1) * den
    report = ConstructionReport(
        n=n,
        k=2,
        m=m,
        p=p,
        first_deletion_bound_scaled=fdb,
        theorem_lower_bound=graph_lower_expression(n, p) if n else 0.0,
        theorem_lower_bound_scaled=lower_scaled,
        meets_theorem_lower_bound=meets_graph_lower_expression(Fraction(fdb, den), n, p) if den else None,
        degree_summary=dict(Counter(H.degrees)),
        spec=spec,
    )
    # the family-specific constants differ from the general expression; surface them
    if p < Fraction(1, 4):
        stated = float(p) * (n - 1) + 2 * float(p) - 1
    else:
        stated = (math.sqrt(p) - float(p)) * (n - 1) + math.sqrt(p) - 1
    if den and stated > fdb / den:
        report.notes.append(
            f"family constant {stated:.12g} exceeds the computed first-deletion bound {fdb / den:.12g}"
        )
    return report


# -- extremal hypergraphs ----------------------------------------------------


def _floor_root_scaled(n: int, q: Fraction, r: int) -> int:
    """Largest integer ``s`` with ``s**r <= q * n**r``, i.e. ``floor(q**(1/r) * n)``."""
    limit = Fraction(q) * n**r
    s = max(0, math.floor(float(q) ** (1.0 / r) * n))
    while s > 0 and s**r > limit:
        s -= 1
    while (s + 1) ** r <= limit:
        s += 1
    return s


def _floor_half_inverse_root(q: Fraction, r: int) -> int:
    """Largest ``c`` with ``c <= 1 / (2 * q**(1/r))``, i.e. ``(2c)**r * q <= 1``."""
    c = max(0, math.floor(1.0 / (2.0 * float(q) ** (1.0 / r))))
    while c > 0 and (2 * c) ** r * q > 1:
        c -= 1
    while (2 * (c + 1)) ** r * q <= 1:
        c += 1
    return c


def colex_subsets(count: int, k: int):
    """k-subsets of ``range(count)`` in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, count):
        for rest in colex_subsets(top, k - 1):
            yield rest + (top,)


def filler_bounded_degree(vertex_count: int, k: int, target_edges: int, degree_cap: int) -> list:
    """Greedy colex scan keeping every vertex degree at most ``degree_cap``."""
    if target_edges < 0:
        raise NegativeCount(f"negative filler target {target_edges}")
    edges = []
    if target_edges == 0:
        return edges
    degree = [0] * vertex_count
    for subset in colex_subsets(vertex_count, k):
        if any(degree[v] >= degree_cap for v in subset):
            continue
        for v in subset:
            degree[v] += 1
        edges.append(subset)
        if len(edges) == target_edges:
            return edges
    raise FillerInfeasible(
        f"only {len(edges)} of {target_edges} edges fit on {vertex_count} vertices with degree cap {degree_cap}"
    )


def extremal_hypergraph(n: int, k: int, p, cap_multiplier=2, max_doublings: int = 4):
    """Clique copies plus a bounded-degree filler reaching ``round(p C(n,k))`` edges.

    With ``p1 = (2p)^(1/(k-1))`` and ``p2 = p^(1/k)``: for ``p < 2^-k`` take
    ``floor(1/(2 p1))`` copies of ``K_{floor(p1 n)}``, otherwise one
    ``K_{floor(p2 n)}``. The filler lives on the leftover vertices with degree
    cap ``cap_multiplier * p1^k n^(k-1)`` (resp. ``p2^(k-1) n^(k-2)``),
    doubled up to ``max_doublings`` times if the edge target does not fit.
    """
    p = Fraction(p)
    if not 0 < p < 1:
        raise InfeasibleParameters(f"density {p} outside (0, 1)")
    if k < 2:
        raise InfeasibleParameters(f"uniformity {k} below 2")
    pf = float(p)
    if p < Fraction(1, 2**k):
        branch = LOW
        size = _floor_root_scaled(n, 2 * p, k - 1)
        copies = _floor_half_inverse_root(2 * p, k - 1)
        cap_base = (2 * pf) ** (k / (k - 1)) * n ** (k - 1)
    else:
        branch = HIGH
        if pf > (1 - n ** (-1.0 / k)) ** k:
            raise InfeasibleParameters(
                f"p={p} exceeds (1 - n^(-1/k))^k = {(1 - n ** (-1.0 / k)) ** k:.6g} for n={n}"
            )
        size = _floor_root_scaled(n, p, k)
        copies = 1
        cap_base = pf ** ((k - 1) / k) * n ** (k - 2)
    if copies < 1 or size < k:
        raise InfeasibleParameters(f"n={n} too small: clique size {size}, copies {copies}")
    filler_vertices = n - copies * size
    if filler_vertices < 1:
        raise InfeasibleParameters(f"cliques use {copies * size} of {n} vertices, leaving no filler")
    target_m = round_half_up(p * binomial(n, k))
    filler_target = target_m - copies * binomial(size, k)
    if filler_target < 0:
        raise InfeasibleParameters(f"cliques already exceed the target of {target_m} edges")

    cap = max(1, math.ceil(float(cap_multiplier) * cap_base))
    for attempt in range(max_doublings + 1):
        try:
            filler_edges = filler_bounded_degree(filler_vertices, k, filler_target, cap)
            break
        except FillerInfeasible:
            if attempt == max_doublings:
                raise
            cap *= 2

    offset = copies * size
    parts = [clique(size, k) for _ in range(copies)]
    parts.append(UniformHypergraph(filler_vertices, k, filler_edges))
    H = disjoint_union(parts)

    filler_degrees = H.degrees[offset:]
    spec = ExtremalHypergraphSpec(
        n, k, p, branch, size, copies, filler_vertices, filler_target, cap
    )
    realized = Fraction(H.m, binomial(n, k))
    lower = min(pf, pf ** ((k - 1) / k) - pf) * binomial(n - 1, k - 1)
    report = ConstructionReport(
        n=n,
        k=k,
        m=H.m,
        p=realized,
        first_deletion_bound_scaled=first_deletion_bound(H),
        theorem_lower_bound=lower,
        theorem_lower_bound_scaled=None,
        meets_theorem_lower_bound=None,
        degree_summary=dict(Counter(H.degrees)),
        filler_max_degree=max(filler_degrees, default=0),
        filler_cap=cap,
        spec=spec,
    )
    return H, report


# -- random instances --------------------------------------------------------

GENERATOR_ID = "numpy.PCG64"


def random_uniform(n: int, k: int, m: int, seed: int) -> UniformHypergraph:
    """``m`` distinct uniformly random k-sets via rejection sampling.

    Random k-tuples are drawn in batches from a PCG64 stream, sorted, and kept
    if their entries are distinct and the set has not been drawn before.
    """
    total = binomial(n, k)
    if m > total:
        raise TooManyEdges(f"m={m} exceeds C({n},{k})={total}")
    metadata = {"generator": GENERATOR_ID, "seed": seed}
    if m == 0:
        return UniformHypergraph(n, k, (), metadata)
    if n**k >= 2**62:
        raise OverflowError(f"k-set keys for n={n}, k={k} do not fit in 64 bits")
    rng = np.random.Generator(np.random.PCG64(seed))
    radix = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    keys = np.empty(0, dtype=np.int64)
    while len(keys) < m:
        batch = max(1024, 2 * (m - len(keys)))
        tuples = np.sort(rng.integers(0, n, size=(batch, k)), axis=1)
        distinct = np.all(np.diff(tuples, axis=1) > 0, axis=1)
        combined = np.concatenate([keys, tuples[distinct] @ radix])
        _, first = np.unique(combined, return_index=True)
        keys = combined[np.sort(first)][:m]
    edges = [tuple(int(x) for x in (key // radix) % n) for key in keys]
    return UniformHypergraph(n, k, edges, metadata)
