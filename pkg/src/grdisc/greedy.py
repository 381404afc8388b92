"""Backward greedy vertex deletion producing low-discrepancy orderings.

Starting from the whole hypergraph (scaled discrepancy ``N = 0``), one vertex
is deleted per step and placed at the last free position of the ordering.
Deleting a vertex of live degree ``d`` from ``t`` live vertices moves the
scaled discrepancy to

    N' = N + m * C(t-1, k-1) - d * C(n, k).

Two selection rules are offered:

* ``PROOF_RULE`` removes a minimum-degree vertex while ``N <= 0`` and a
  maximum-degree vertex while ``N > 0``. The dominant one-sided part then
  shrinks by the factor ``(t-k)/t`` per step, which keeps every prefix within
  ``max{p, 1-p} * C(n-1, k-1)``.
* ``EXACT_GREEDY`` removes the vertex whose deletion minimises ``|N'|``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional

from sortedcontainers import SortedList

from .discrepancy import (
    BoundCertificate,
    Context,
    PrefixProfile,
    certify,
    evaluate_ordering,
)
from .errors import EmptyGraph, WrongVariant
from .hypergraph import UniformHypergraph, binomial


class GreedyVariant(enum.Enum):
    PROOF_RULE = "proof"
    EXACT_GREEDY = "exact"

    @classmethod
    def parse(cls, value) -> "GreedyVariant":
        if isinstance(value, cls):
            return value
        return cls(value)


NEGATIVE = "negative"
POSITIVE = "positive"


@dataclass(frozen=True)
class StepTrace:
    t: int
    deleted_vertex: int
    deleted_degree: int
    case: str
    n_before: int
    n_after: int
    variant: GreedyVariant


@dataclass
class OrderingResult:
    variant: GreedyVariant
    ordering: tuple
    profile: PrefixProfile
    trace: List[StepTrace]
    certificate: BoundCertificate


@dataclass(frozen=True)
class StepVerdict:
    ok: bool
    failures: tuple = ()


class _DegreeQueue:
    """Shared selection logic; subclasses supply the ordered storage."""

    def __len__(self) -> int:
        return self._size

    def nearest_degree(self, target: int, denominator: int) -> int:
        """Vertex whose degree ``d`` minimises ``|target - d * denominator|``.

        Ties go to the larger degree (the resulting discrepancy is then
        ``<= 0``), then to the smallest vertex id.
        """
        if not self._size:
            raise EmptyGraph("no live vertices")
        if denominator == 0:
            # n < k: no edges can exist and every choice is equivalent
            return self.min_vertex()
        floor_q = target // denominator
        ceil_q = -((-target) // denominator)
        below = self.predecessor_degree(floor_q)
        above = self.successor_degree(ceil_q)
        if below is None:
            chosen = above
        elif above is None:
            chosen = below
        else:
            gap_below = target - below * denominator
            gap_above = above * denominator - target
            chosen = below if gap_below < gap_above else above
        return self.smallest_id(chosen)


class BucketDegreeQueue(_DegreeQueue):
    """Degree-indexed buckets for graphs, where degrees lie in ``0..n-1``."""

    def __init__(self, degrees):
        size = max(degrees, default=0) + 1
        self.buckets = [set() for _ in range(size)]
        for v, d in enumerate(degrees):
            self.buckets[d].add(v)
        self._size = len(degrees)
        self._low = 0
        self._high = size - 1

    def remove(self, v: int, degree: int) -> None:
        self.buckets[degree].remove(v)
        self._size -= 1

    def decrement(self, v: int, old: int) -> None:
        self.buckets[old].remove(v)
        self.buckets[old - 1].add(v)
        if old - 1 < self._low:
            self._low = old - 1

    def min_degree(self) -> int:
        if not self._size:
            raise EmptyGraph("no live vertices")
        while not self.buckets[self._low]:
            self._low += 1
        return self._low

    def max_degree(self) -> int:
        if not self._size:
            raise EmptyGraph("no live vertices")
        # degrees never increase, so the high-water mark only moves down
        while not self.buckets[self._high]:
            self._high -= 1
        return self._high

    def min_vertex(self) -> int:
        return min(self.buckets[self.min_degree()])

    def max_vertex(self) -> int:
        return min(self.buckets[self.max_degree()])

    def predecessor_degree(self, q: int) -> Optional[int]:
        d = min(q, len(self.buckets) - 1)
        while d >= 0:
            if self.buckets[d]:
                return d
            d -= 1
        return None

    def successor_degree(self, q: int) -> Optional[int]:
        d = max(q, 0)
        while d < len(self.buckets):
            if self.buckets[d]:
                return d
            d += 1
        return None

    def smallest_id(self, degree: int) -> int:
        return min(self.buckets[degree])


class SortedDegreeQueue(_DegreeQueue):
    """Ordered multiset of ``(degree, id)`` pairs for k >= 3.

    Decrements are coalesced: a touched vertex is re-keyed once, at the next
    query, from its stored key to its current degree in ``degrees``.
    """

    def __init__(self, degrees):
        self.degrees = degrees
        self.items = SortedList((d, v) for v, d in enumerate(degrees))
        self._size = len(degrees)
        self._stale = {}

    def _flush(self) -> None:
        if self._stale:
            items, degrees = self.items, self.degrees
            for v, old in self._stale.items():
                items.remove((old, v))
                items.add((degrees[v], v))
            self._stale.clear()

    def remove(self, v: int, degree: int) -> None:
        self._flush()
        self.items.remove((degree, v))
        self._size -= 1

    def decrement(self, v: int, old: int) -> None:
        if v not in self._stale:
            self._stale[v] = old

    def min_degree(self) -> int:
        if not self._size:
            raise EmptyGraph("no live vertices")
        self._flush()
        return self.items[0][0]

    def max_degree(self) -> int:
        if not self._size:
            raise EmptyGraph("no live vertices")
        self._flush()
        return self.items[-1][0]

    def min_vertex(self) -> int:
        return self.smallest_id(self.min_degree())

    def max_vertex(self) -> int:
        return self.smallest_id(self.max_degree())

    def predecessor_degree(self, q: int) -> Optional[int]:
        self._flush()
        idx = self.items.bisect_left((q + 1, -1))
        return self.items[idx - 1][0] if idx > 0 else None

    def successor_degree(self, q: int) -> Optional[int]:
        self._flush()
        idx = self.items.bisect_left((q, -1))
        return self.items[idx][0] if idx < len(self.items) else None

    def smallest_id(self, degree: int) -> int:
        self._flush()
        return self.items[self.items.bisect_left((degree, -1))][1]


def degree_queue(H: UniformHypergraph, degrees=None) -> _DegreeQueue:
    """Degree structure for ``H``; ``degrees`` is read live by the k >= 3 queue."""
    degrees = list(H.degrees) if degrees is None else degrees
    if H.k == 2:
        return BucketDegreeQueue(degrees)
    return SortedDegreeQueue(degrees)


def order(H: UniformHypergraph, variant=GreedyVariant.PROOF_RULE) -> OrderingResult:
    """Build an ordering of ``H`` by greedy backward deletion."""
    variant = GreedyVariant.parse(variant)
    n, k, m = H.n, H.k, H.m
    den = binomial(n, k)
    state = H.begin_deletion()
    queue = degree_queue(H, state.live_degree)
    state.listener = queue.decrement
    live_degree = state.live_degree

    ordering = [0] * n
    trace = []
    N = 0
    for t in range(n, 1, -1):
        increment = m * binomial(t - 1, k - 1)
        if variant is GreedyVariant.PROOF_RULE:
            v = queue.min_vertex() if N <= 0 else queue.max_vertex()
        else:
            v = queue.nearest_degree(N + increment, den)
        d = live_degree[v]
        queue.remove(v, d)
        state.delete_vertex(v)
        after = N + increment - d * den
        trace.append(StepTrace(t, v, d, NEGATIVE if N <= 0 else POSITIVE, N, after, variant))
        ordering[t - 1] = v
        N = after
    if n >= 1:
        ordering[0] = queue.min_vertex()

    profile = evaluate_ordering(H, ordering)
    return OrderingResult(variant, tuple(ordering), profile, trace, certify(profile))


def check_step_invariants(step: StepTrace, ctx: Context) -> StepVerdict:
    """Verify the per-step contraction and opposite-side caps of a proof-rule step.

    Steps with ``t <= k`` only need the resulting prefix (smaller than k) to
    have zero discrepancy.
    """
    if step.variant is not GreedyVariant.PROOF_RULE:
        raise WrongVariant("step invariants only hold for the proof-rule variant")
    t, k = step.t, ctx.k
    before, after = step.n_before, step.n_after
    failures = []
    if after != before + ctx.m * binomial(t - 1, k - 1) - step.deleted_degree * ctx.denominator:
        failures.append("update identity")
    if (step.case == NEGATIVE) != (before <= 0):
        failures.append("case tag")
    if t <= k:
        if after != 0:
            failures.append("sub-k prefix not zero")
        return StepVerdict(not failures, tuple(failures))

    cap = binomial(t - 1, k - 1)
    if before <= 0:
        if t * max(-after, 0) > (t - k) * (-before):
            failures.append("negative shrink")
        if after > ctx.m * cap:
            failures.append("positive cap")
    else:
        if t * max(after, 0) > (t - k) * before:
            failures.append("positive shrink")
        if -after > (ctx.denominator - ctx.m) * cap:
            failures.append("negative cap")
    return StepVerdict(not failures, tuple(failures))
