"""Graded discrepancy of graphs and k-uniform hypergraphs."""

from .constructions import (
    ConstructionReport,
    clique,
    disjoint_union,
    extremal_graph,
    extremal_hypergraph,
    filler_bounded_degree,
    isolated,
    matching_copies,
    random_uniform,
)
from .discrepancy import (
    BoundCertificate,
    Context,
    PrefixProfile,
    ScaledDisc,
    certify,
    evaluate_ordering,
    first_deletion_bound,
    local_disc_scaled,
    one_sided_parts,
    theorem_bound_scaled,
)
from .greedy import GreedyVariant, OrderingResult, StepTrace, check_step_invariants, order
from .hypergraph import DeletionState, UniformHypergraph, binomial, new_hypergraph
from .oracle import exact_grdisc_dp, exact_grdisc_enum

__version__ = "0.1.0"
