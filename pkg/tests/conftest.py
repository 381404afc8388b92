import itertools

import pytest
from hypothesis import strategies as st

from grdisc import UniformHypergraph

# Lines recorded by the acceptance module, echoed in the terminal summary.
CRITERIA_LINES = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_LINES:
            terminalreporter.write_line(line)


def brute_binomial(a, r):
    """C(a, r) by counting subsets."""
    if a < 0 or r < 0 or r > a:
        return 0
    return sum(1 for _ in itertools.combinations(range(a), r))


def brute_edge_count(edges, subset):
    """Induced edge count by set containment, recomputed from scratch."""
    s = set(subset)
    return sum(1 for e in edges if set(e) <= s)


def brute_profile(H, ordering):
    """Scaled prefix discrepancies ``e_i*C(n,k) - m*C(i,k)`` from scratch."""
    den = brute_binomial(H.n, H.k)
    return [
        brute_edge_count(H.edges, ordering[:i]) * den - H.m * brute_binomial(i, H.k)
        for i in range(1, H.n + 1)
    ]


def brute_grdisc(H):
    """min over all orderings of max |scaled prefix discrepancy|."""
    if H.n == 0:
        return 0
    return min(max(abs(x) for x in brute_profile(H, list(p))) for p in itertools.permutations(range(H.n)))


@st.composite
def hypergraphs(draw, max_n=9, ks=(2, 3)):
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(0, max_n))
    all_edges = list(itertools.combinations(range(n), k))
    chosen = draw(st.lists(st.sampled_from(all_edges), unique=True)) if all_edges else []
    return UniformHypergraph(n, k, chosen)


@pytest.fixture
def p3():
    return UniformHypergraph(3, 2, [(0, 1), (1, 2)])
