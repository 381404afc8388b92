"""Exact graded discrepancy for small instances.

The prefixes of an ordering form a maximal chain ``{} < S_1 < ... < S_n = V``
in the subset lattice and every maximal chain arises from exactly one
ordering. Minimising the largest prefix discrepancy over orderings is
therefore the bottleneck-path problem

    f(S) = max(|N(S)|, min_{v in S} f(S - v)),   f({}) = 0,

solved here over all ``2**n`` subsets in order of increasing size.
``exact_grdisc_enum`` is the brute-force cross-check over all ``n!``
permutations.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

from .discrepancy import Context, max_abs_scaled_batch
from .errors import InstanceTooLarge, MemoryBudgetExceeded
from .hypergraph import UniformHypergraph, binomial

DEFAULT_DP_CAP = 22
ENUM_CAP = 8
DEFAULT_MEMORY_BUDGET = 1 << 30  # bytes
_BYTES_PER_SUBSET = 4 + 8 + 8 + 1 + 1  # edge count, f, sort index, popcount, best vertex


def dp_cap() -> int:
    """Vertex cap for the subset DP; ``GRDISC_DP_CAP`` overrides the default."""
    raw = os.environ.get("GRDISC_DP_CAP")
    return int(raw) if raw else DEFAULT_DP_CAP


def _popcounts(size: int, n: int) -> np.ndarray:
    pc = np.zeros(size, dtype=np.uint8)
    for v in range(n):
        half = 1 << v
        pc[half : 2 * half] = pc[:half] + 1
    return pc


def subset_edge_counts(H: UniformHypergraph) -> np.ndarray:
    """``e(S)`` for every subset bitmask ``S`` of the vertex set.

    Built block by block: a subset whose top vertex is ``v`` gains, over the
    same subset without ``v``, the edges whose top vertex is ``v`` and whose
    other vertices all lie in it.
    """
    n = H.n
    rests = [[] for _ in range(n)]
    for edge in H.edges:
        mask = 0
        for u in edge[:-1]:
            mask |= 1 << u
        rests[edge[-1]].append(mask)
    e = np.zeros(1 << n, dtype=np.int32)
    for v in range(n):
        half = 1 << v
        block = np.arange(half, dtype=np.int64)
        gained = np.zeros(half, dtype=np.int32)
        for rest in rests[v]:
            gained += (block & rest) == rest
        e[half : 2 * half] = e[:half] + gained
    return e


def exact_grdisc_dp(H: UniformHypergraph, cap=None, memory_budget=DEFAULT_MEMORY_BUDGET):
    """Return ``(scaled grdisc, optimal ordering)``."""
    n = H.n
    cap = dp_cap() if cap is None else cap
    if n > cap:
        raise InstanceTooLarge(f"n={n} exceeds the exact-DP cap of {cap} vertices")
    size = 1 << n
    if size * _BYTES_PER_SUBSET > memory_budget:
        raise MemoryBudgetExceeded(
            f"DP over {size} subsets needs ~{size * _BYTES_PER_SUBSET} bytes, budget {memory_budget}"
        )
    ctx = Context.of(H)
    den = ctx.denominator
    if n == 0:
        return 0, ()
    if den * den >= 2**62:
        raise OverflowError("scaled values do not fit in 64 bits")

    e = subset_edge_counts(H)
    pc = _popcounts(size, n)
    expected = np.array([ctx.m * binomial(i, H.k) for i in range(n + 1)], dtype=np.int64)
    f = np.abs(e.astype(np.int64) * den - expected[pc])
    del e
    best = np.full(size, -1, dtype=np.int8)

    by_size = np.argsort(pc, kind="stable")
    starts = np.concatenate(([0], np.cumsum(np.bincount(pc, minlength=n + 1))))
    for layer in range(1, n + 1):
        S = by_size[starts[layer] : starts[layer + 1]]
        lowest = np.full(S.shape, np.iinfo(np.int64).max, dtype=np.int64)
        arg = np.full(S.shape, -1, dtype=np.int8)
        for v in range(n):
            bit = 1 << v
            has = (S & bit) != 0
            candidates = f[S[has] ^ bit]
            current = lowest[has]
            better = candidates < current  # strict: ties keep the smaller v
            current[better] = candidates[better]
            lowest[has] = current
            chosen = arg[has]
            chosen[better] = v
            arg[has] = chosen
        f[S] = np.maximum(f[S], lowest)
        best[S] = arg

    ordering = [0] * n
    S = size - 1
    for position in range(n, 0, -1):
        v = int(best[S])
        ordering[position - 1] = v
        S ^= 1 << v
    return int(f[size - 1]), tuple(ordering)


def exact_grdisc_enum(H: UniformHypergraph, chunk: int = 8192) -> int:
    """Minimum over all ``n!`` orderings of the largest scaled prefix discrepancy."""
    n = H.n
    if n > ENUM_CAP:
        raise InstanceTooLarge(f"n={n} exceeds the enumeration cap of {ENUM_CAP} vertices")
    if n == 0:
        return 0
    best = None
    perms = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(perms, chunk))
        if not block:
            break
        value = int(max_abs_scaled_batch(H, np.array(block, dtype=np.int64)).min())
        best = value if best is None else min(best, value)
    return best
