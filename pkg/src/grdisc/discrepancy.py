"""Exact discrepancy arithmetic on vertex orderings.

Every discrepancy is kept as a signed integer scaled by the common
denominator ``C(n, k)``: a prefix of size ``i`` spanning ``e_i`` edges has

    N_i = e_i * C(n, k) - m * C(i, k)

whose rational value ``N_i / C(n, k)`` equals ``e_i - p * C(i, k)`` with
``p = m / C(n, k)``. Decisions never touch floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidContext, NotAPermutation
from .hypergraph import UniformHypergraph, binomial


@dataclass(frozen=True)
class Context:
    """The ``(n, k, m)`` triple that fixes the denominator ``C(n, k)``."""

    n: int
    k: int
    m: int

    def __post_init__(self):
        if self.m < 0 or self.m > binomial(self.n, self.k):
            raise InvalidContext(f"m={self.m} outside [0, C({self.n},{self.k})]")

    @classmethod
    def of(cls, H: UniformHypergraph) -> "Context":
        return cls(H.n, H.k, H.m)

    @property
    def denominator(self) -> int:
        return binomial(self.n, self.k)

    @property
    def density(self) -> Fraction:
        den = self.denominator
        return Fraction(self.m, den) if den else Fraction(0)


@dataclass(frozen=True)
class ScaledDisc:
    numerator: int
    context: Context

    @property
    def value(self) -> Fraction:
        den = self.context.denominator
        return Fraction(self.numerator, den) if den else Fraction(0)


@dataclass
class PrefixProfile:
    ordering: tuple
    rows: list  # (i, e_i, N_i) for i = 1..n
    max_abs_scaled: int
    bound_scaled: int
    context: Context

    @property
    def scaled(self) -> list:
        return [row[2] for row in self.rows]


@dataclass(frozen=True)
class BoundCertificate:
    within_bound: bool
    first_violation_index: Optional[int]
    max_abs_scaled: int
    bound_scaled: int


def local_disc_scaled(e_i: int, i: int, ctx: Context) -> ScaledDisc:
    if i < 0 or i > ctx.n:
        raise InvalidContext(f"prefix size {i} outside [0, {ctx.n}]")
    if e_i < 0 or e_i > binomial(i, ctx.k):
        raise InvalidContext(f"{e_i} edges cannot fit on {i} vertices")
    return ScaledDisc(e_i * ctx.denominator - ctx.m * binomial(i, ctx.k), ctx)


def one_sided_parts(d) -> tuple:
    """Split a scaled discrepancy into its (positive, negative) parts."""
    N = d.numerator if isinstance(d, ScaledDisc) else int(d)
    return max(N, 0), max(-N, 0)


def theorem_bound_scaled(ctx: Context) -> int:
    """``max{p, 1-p} * C(n-1, k-1)`` scaled by ``C(n, k)``."""
    den = ctx.denominator
    return max(ctx.m, den - ctx.m) * binomial(ctx.n - 1, ctx.k - 1)


def _check_permutation(n: int, ordering: Sequence[int]) -> tuple:
    order = tuple(int(v) for v in ordering)
    if len(order) != n or sorted(order) != list(range(n)):
        raise NotAPermutation(f"expected a permutation of 0..{n - 1}, got {len(order)} ids")
    return order


def prefix_edge_counts(H: UniformHypergraph, ordering: Sequence[int]) -> list:
    """``[e_1, ..., e_n]``: an edge is counted once its last vertex is placed."""
    n = H.n
    position = [0] * n
    for idx, v in enumerate(ordering):
        position[v] = idx
    new_edges = [0] * n
    for edge in H.edges:
        new_edges[max(position[v] for v in edge)] += 1
    counts = []
    running = 0
    for c in new_edges:
        running += c
        counts.append(running)
    return counts


def evaluate_ordering(H: UniformHypergraph, ordering: Sequence[int]) -> PrefixProfile:
    order = _check_permutation(H.n, ordering)
    ctx = Context.of(H)
    den = ctx.denominator
    counts = prefix_edge_counts(H, order)
    rows = []
    max_abs = 0
    for i, e_i in enumerate(counts, start=1):
        N = e_i * den - ctx.m * binomial(i, ctx.k)
        rows.append((i, e_i, N))
        if abs(N) > max_abs:
            max_abs = abs(N)
    return PrefixProfile(order, rows, max_abs, theorem_bound_scaled(ctx), ctx)


def max_abs_scaled_batch(H: UniformHypergraph, orderings: np.ndarray) -> np.ndarray:
    """Vectorised ``evaluate_ordering(...).max_abs_scaled`` over many orderings.

    ``orderings`` has shape ``(count, n)``. Values are returned as int64, so
    the caller must keep ``C(n, k)**2`` well inside that range.
    """
    orderings = np.asarray(orderings, dtype=np.int64)
    count, n = orderings.shape
    ctx = Context.of(H)
    den = ctx.denominator
    if den * den >= 2**62:
        raise OverflowError("batch evaluation needs C(n,k)^2 < 2^62")
    if H.m == 0 or count == 0:
        return np.zeros(count, dtype=np.int64)
    position = np.empty_like(orderings)
    rows = np.arange(count)[:, None]
    position[rows, orderings] = np.arange(n)[None, :]
    last = position[:, H.edge_array].max(axis=2)  # (count, m)
    slots = (last + rows * n).ravel()
    new_edges = np.bincount(slots, minlength=count * n).reshape(count, n)
    e = np.cumsum(new_edges, axis=1, dtype=np.int64)
    expected = np.array([ctx.m * binomial(i, ctx.k) for i in range(1, n + 1)], dtype=np.int64)
    return np.abs(e * den - expected[None, :]).max(axis=1)


def certify(profile: PrefixProfile) -> BoundCertificate:
    bound = theorem_bound_scaled(profile.context)
    first = None
    for i, _, N in profile.rows:
        if abs(N) > bound:
            first = i
            break
    return BoundCertificate(first is None, first, profile.max_abs_scaled, bound)


def first_deletion_bound(H: UniformHypergraph) -> int:
    """Scaled ``min_v |p C(n-1,k-1) - d(v)|``, a lower bound on grdisc(H).

    Every ordering contains the prefix of size ``n-1``, obtained by dropping
    whichever vertex comes last.
    """
    if H.n < 1:
        raise InvalidContext("first-deletion bound needs at least one vertex")
    ctx = Context.of(H)
    target = ctx.m * binomial(H.n - 1, H.k - 1)
    den = ctx.denominator
    return min(abs(target - d * den) for d in set(H.degrees))
