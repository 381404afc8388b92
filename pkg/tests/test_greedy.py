import pytest
from hypothesis import given, settings

from grdisc import (
    Context,
    GreedyVariant,
    UniformHypergraph,
    binomial,
    check_step_invariants,
    evaluate_ordering,
    order,
    random_uniform,
    theorem_bound_scaled,
)
from grdisc.constructions import clique, disjoint_union, isolated, matching_copies
from grdisc.errors import EmptyGraph, WrongVariant
from grdisc.greedy import (
    NEGATIVE,
    BucketDegreeQueue,
    SortedDegreeQueue,
    StepTrace,
    degree_queue,
)

from conftest import hypergraphs

VARIANTS = list(GreedyVariant)


def k4_k2_2k1():
    return disjoint_union(clique(4), matching_copies(1), isolated(2))


@pytest.mark.parametrize("variant", VARIANTS)
def test_empty_graph(variant):
    result = order(UniformHypergraph(5, 2), variant)
    assert result.profile.scaled == [0] * 5
    assert result.certificate.within_bound
    assert sorted(result.ordering) == list(range(5))


def test_proof_rule_first_step():
    result = order(k4_k2_2k1(), GreedyVariant.PROOF_RULE)
    step = result.trace[0]
    assert (step.t, step.case, step.n_before) == (8, NEGATIVE, 0)
    assert step.deleted_vertex == 6 and step.deleted_degree == 0
    assert step.n_after == 49  # 7/4 = p(n-1) after scaling by 28
    assert result.ordering[-1] == 6


def test_exact_greedy_first_step():
    # |49 - 28 d| over d in {0, 1, 3} = {49, 21, 35}
    result = order(k4_k2_2k1(), GreedyVariant.EXACT_GREEDY)
    step = result.trace[0]
    assert step.deleted_degree == 1 and step.deleted_vertex == 4
    assert step.n_after == 21


def test_variant_parse():
    assert GreedyVariant.parse("proof") is GreedyVariant.PROOF_RULE
    assert GreedyVariant.parse("exact") is GreedyVariant.EXACT_GREEDY
    with pytest.raises(ValueError):
        GreedyVariant.parse("random")


@pytest.mark.parametrize("make", [BucketDegreeQueue, SortedDegreeQueue])
def test_degree_selector_queries(make):
    queue = make([3, 3, 1, 0])
    assert queue.min_vertex() == 3
    assert queue.max_vertex() == 0
    q = make([3, 1, 0])
    # 21 < 35 < 49 in scaled units
    assert q.nearest_degree(49, 28) == 1


@pytest.mark.parametrize("make", [BucketDegreeQueue, SortedDegreeQueue])
def test_nearest_tie_prefers_non_positive_result(make):
    # target exactly halfway between degrees 1 and 2: prefer degree 2
    q = make([1, 2, 2, 1])
    assert q.nearest_degree(3, 2) == 1
    # below every degree, above every degree
    assert q.nearest_degree(-5, 2) == 0
    assert q.nearest_degree(100, 2) == 1


@pytest.mark.parametrize("make", [BucketDegreeQueue, SortedDegreeQueue])
def test_empty_queue(make):
    q = make([0])
    q.remove(0, 0)
    for query in (q.min_vertex, q.max_vertex, lambda: q.nearest_degree(0, 1)):
        with pytest.raises(EmptyGraph):
            query()


def test_queue_choice():
    assert isinstance(degree_queue(clique(4)), BucketDegreeQueue)
    assert isinstance(degree_queue(clique(5, 3)), SortedDegreeQueue)


def test_step_invariant_examples():
    ctx = Context(8, 2, 7)
    good = StepTrace(8, 6, 0, NEGATIVE, 0, 49, GreedyVariant.PROOF_RULE)
    assert check_step_invariants(good, ctx).ok
    # N_before = 0 forces N_after into [0, m C(t-1,k-1)]
    bad = StepTrace(8, 0, 3, NEGATIVE, 0, 49 - 3 * 28, GreedyVariant.PROOF_RULE)
    verdict = check_step_invariants(bad, ctx)
    assert not verdict.ok and "negative shrink" in verdict.failures
    with pytest.raises(WrongVariant):
        check_step_invariants(StepTrace(8, 4, 1, NEGATIVE, 0, 21, GreedyVariant.EXACT_GREEDY), ctx)


@pytest.mark.parametrize("seed", range(5))
def test_proof_rule_random_g20(seed):
    H = random_uniform(20, 2, 60 + 10 * seed, seed)
    result = order(H, GreedyVariant.PROOF_RULE)
    ctx = Context.of(H)
    assert all(check_step_invariants(step, ctx).ok for step in result.trace)
    assert result.certificate.within_bound


@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_n=12, ks=(2, 3, 4)))
def test_greedy_properties(H):
    ctx = Context.of(H)
    bound = theorem_bound_scaled(ctx)
    den = ctx.denominator
    proof = order(H, GreedyVariant.PROOF_RULE)
    exact = order(H, GreedyVariant.EXACT_GREEDY)
    for result in (proof, exact):
        assert result.certificate.within_bound
        assert result.profile.max_abs_scaled <= bound
        assert result.profile.scaled == evaluate_ordering(H, result.ordering).scaled
        # the trace's running value is the profile read backwards
        for step in result.trace:
            assert result.profile.rows[step.t - 2][2] == step.n_after
            assert abs(step.n_after) <= bound
        assert result == order(H, result.variant)
    cap = binomial(H.n - 1, H.k - 1)
    for step in proof.trace:
        assert check_step_invariants(step, ctx).ok
        assert step.n_after <= ctx.m * cap
        assert -step.n_after <= (den - ctx.m) * cap
    # exact greedy never does worse than the proof-rule choice from the same live set
    for step in exact.trace:
        live = set(exact.ordering[: step.t])
        degrees = [
            sum(1 for e in H.edges if v in e and set(e) <= live) for v in live
        ]
        d = min(degrees) if step.n_before <= 0 else max(degrees)
        inc = ctx.m * binomial(step.t - 1, H.k - 1)
        assert abs(step.n_after) <= abs(step.n_before + inc - d * den)
