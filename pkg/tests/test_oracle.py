import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from grdisc import (
    Context,
    GreedyVariant,
    UniformHypergraph,
    evaluate_ordering,
    exact_grdisc_dp,
    exact_grdisc_enum,
    first_deletion_bound,
    order,
    theorem_bound_scaled,
)
from grdisc.constructions import clique, disjoint_union, isolated, matching_copies
from grdisc.errors import InstanceTooLarge, MemoryBudgetExceeded
from grdisc.oracle import dp_cap, subset_edge_counts

from conftest import brute_edge_count, brute_grdisc, hypergraphs


def test_empty_and_complete():
    assert exact_grdisc_dp(UniformHypergraph(6, 2))[0] == 0
    assert exact_grdisc_dp(clique(6))[0] == 0
    assert exact_grdisc_dp(clique(6, 3))[0] == 0
    assert exact_grdisc_dp(UniformHypergraph(0, 2)) == (0, ())


def test_path_p3(p3):
    # every one of the 6 orderings has max |N| = 1 over denominator 3
    assert brute_grdisc(p3) == 1
    value, witness = exact_grdisc_dp(p3)
    assert value == 1
    assert evaluate_ordering(p3, witness).max_abs_scaled == 1
    assert exact_grdisc_enum(p3) == 1


def test_single_edge():
    H = UniformHypergraph(2, 2, [(0, 1)])
    assert exact_grdisc_enum(H) == 0 == exact_grdisc_dp(H)[0]


def test_k4_k2_2k1():
    H = disjoint_union(clique(4), matching_copies(1), isolated(2))
    value, witness = exact_grdisc_dp(H)
    assert value >= first_deletion_bound(H) == 21
    assert value == exact_grdisc_enum(H) == brute_grdisc(H)
    assert evaluate_ordering(H, witness).max_abs_scaled == value


def test_subset_edge_counts_match_recount():
    H = disjoint_union(clique(4, 3), UniformHypergraph(4, 3, [(0, 1, 3), (1, 2, 3)]))
    counts = subset_edge_counts(H)
    for mask in range(1 << H.n):
        subset = [v for v in range(H.n) if mask >> v & 1]
        assert counts[mask] == brute_edge_count(H.edges, subset)


def test_caps(monkeypatch):
    with pytest.raises(InstanceTooLarge):
        exact_grdisc_dp(UniformHypergraph(25, 2))
    with pytest.raises(InstanceTooLarge):
        exact_grdisc_enum(UniformHypergraph(9, 2))
    with pytest.raises(MemoryBudgetExceeded):
        exact_grdisc_dp(UniformHypergraph(12, 2), memory_budget=1000)
    monkeypatch.setenv("GRDISC_DP_CAP", "5")
    assert dp_cap() == 5
    with pytest.raises(InstanceTooLarge):
        exact_grdisc_dp(UniformHypergraph(6, 2))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=7, ks=(2, 3)))
def test_dp_matches_brute_force(H):
    value, witness = exact_grdisc_dp(H)
    assert value == brute_grdisc(H)
    assert value == exact_grdisc_enum(H)
    assert evaluate_ordering(H, witness).max_abs_scaled == value


@settings(max_examples=40, deadline=None)
@given(hypergraphs(max_n=11, ks=(2, 3)))
def test_bound_ordering(H):
    if H.n == 0:
        return
    value, _ = exact_grdisc_dp(H)
    greedy = min(order(H, v).profile.max_abs_scaled for v in GreedyVariant)
    assert first_deletion_bound(H) <= value <= greedy <= theorem_bound_scaled(Context.of(H))


def test_dp_larger_instance_witness():
    rng = np.random.default_rng(3)
    edges = [e for e in itertools.combinations(range(14), 2) if rng.random() < 0.4]
    H = UniformHypergraph(14, 2, edges)
    value, witness = exact_grdisc_dp(H)
    assert evaluate_ordering(H, witness).max_abs_scaled == value
