"""k-uniform hypergraphs with incidence lists and incremental vertex deletion."""

from __future__ import annotations

import math
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import (
    DuplicateEdge,
    UniformityTooSmall,
    VertexAlreadyDeleted,
    VertexOutOfRange,
    WrongEdgeArity,
)


def binomial(a: int, r: int) -> int:
    """C(a, r) as an exact integer; zero when r > a, r < 0 or a < 0."""
    if a < 0 or r < 0 or r > a:
        return 0
    return math.comb(a, r)


class UniformHypergraph:
    """An immutable k-uniform hypergraph on vertices ``0..n-1``.

    Edges are stored as ascending k-tuples and the edge list is kept in
    lexicographic order, so two hypergraphs with the same edge sets have the
    same canonical form and compare equal.
    """

    __slots__ = ("n", "k", "edges", "incidence", "degrees", "metadata", "_edge_array")

    def __init__(self, n: int, k: int, edges: Iterable[Sequence[int]] = (), metadata=None):
        if k < 2:
            raise UniformityTooSmall(f"uniformity must be at least 2, got {k}")
        if n < 0:
            raise VertexOutOfRange(f"vertex count must be non-negative, got {n}")
        normalized = []
        for raw in edges:
            edge = tuple(sorted(int(v) for v in raw))
            if len(edge) != k:
                raise WrongEdgeArity(f"edge {tuple(raw)} has {len(edge)} vertices, expected {k}")
            if edge[0] < 0 or edge[-1] >= n:
                raise VertexOutOfRange(f"edge {tuple(raw)} has a vertex outside [0, {n})")
            if any(edge[j] == edge[j + 1] for j in range(k - 1)):
                raise WrongEdgeArity(f"edge {tuple(raw)} repeats a vertex")
            normalized.append(edge)
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {a} appears more than once")

        incidence = [[] for _ in range(n)]
        for idx, edge in enumerate(normalized):
            for v in edge:
                incidence[v].append(idx)

        self.n = n
        self.k = k
        self.edges = tuple(normalized)
        self.incidence = tuple(tuple(lst) for lst in incidence)
        self.degrees = tuple(len(lst) for lst in incidence)
        self.metadata = dict(metadata or {})
        self._edge_array = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, k)`` integer array (cached)."""
        if self._edge_array is None:
            arr = np.array(self.edges, dtype=np.int64).reshape(len(self.edges), self.k)
            arr.setflags(write=False)
            self._edge_array = arr
        return self._edge_array

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        """Number of edges with all k vertices inside ``vertices``."""
        inside = set()
        for v in vertices:
            self._check_vertex(v)
            inside.add(v)
        seen = set()
        count = 0
        for v in inside:
            for idx in self.incidence[v]:
                if idx in seen:
                    continue
                seen.add(idx)
                if all(u in inside for u in self.edges[idx]):
                    count += 1
        return count

    def begin_deletion(self) -> "DeletionState":
        return DeletionState(self)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {self.n})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniformHypergraph):
            return NotImplemented
        return (self.n, self.k, self.edges) == (other.n, other.k, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.edges))

    def __repr__(self) -> str:
        return f"UniformHypergraph(n={self.n}, k={self.k}, m={self.m})"


def new_hypergraph(n: int, k: int, edges: Iterable[Sequence[int]] = (), metadata=None) -> UniformHypergraph:
    return UniformHypergraph(n, k, edges, metadata)


class DeletionState:
    """Mutable deletion run over a fixed hypergraph.

    ``live_degree[v]`` counts edges containing ``v`` whose vertices are all
    still live. ``listener``, when set, is called as ``listener(u, old_degree)``
    each time a live vertex loses one unit of live degree.
    """

    def __init__(self, hypergraph: UniformHypergraph):
        self.hypergraph = hypergraph
        n = hypergraph.n
        self.live = [True] * n
        self.live_count = n
        self.live_edge_vertex_count = [hypergraph.k] * hypergraph.m
        self.live_degree = list(hypergraph.degrees)
        self.live_edges = hypergraph.m
        self.listener: Optional[Callable[[int, int], None]] = None

    def delete_vertex(self, v: int) -> int:
        """Delete ``v``; return its live degree just before deletion."""
        H = self.hypergraph
        H._check_vertex(v)
        if not self.live[v]:
            raise VertexAlreadyDeleted(f"vertex {v} already deleted")
        k = H.k
        counts = self.live_edge_vertex_count
        degree = self.live_degree
        listener = self.listener
        removed = 0
        for idx in H.incidence[v]:
            if counts[idx] == k:
                removed += 1
                for u in H.edges[idx]:
                    if u != v:
                        old = degree[u]
                        degree[u] = old - 1
                        if listener is not None:
                            listener(u, old)
            counts[idx] -= 1
        self.live[v] = False
        self.live_count -= 1
        self.live_edges -= removed
        degree[v] = 0
        return removed

    def live_vertices(self) -> list:
        return [v for v, alive in enumerate(self.live) if alive]
