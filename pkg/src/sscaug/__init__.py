"""Controllability-bound-preserving edge augmentation for directed networks.

The package computes two lower bounds on the dimension of the strong
structurally controllable subspace of a leader-driven Laplacian network
(zero-forcing based and distance based), densifies graphs while preserving
either bound, and validates the bounds numerically against sampled
controllability-matrix ranks.
"""

from .graph import (
    INF,
    DiGraph,
    GraphParseError,
    bfs_distances_from,
    bfs_distances_to,
    complement_edges,
    distance_matrix,
    format_edge_list,
    parse_edge_list,
    random_digraph,
    read_edge_list,
    to_dot,
    write_edge_list,
)
from .zero_forcing import (
    AugmentResult,
    ZfResult,
    augment_zf,
    closed_form_zf_edges,
    derived_set,
    zf_bound,
)
from .pmi import (
    PmiSequence,
    TooManyCandidatesError,
    dl_matrix,
    epsilon_star,
    is_pmi,
    longest_pmi_exact,
    longest_pmi_greedy,
    make_sequence,
)
from .distance_augment import (
    LevelPartition,
    VerificationError,
    augment_distance_best_of,
    augment_distance_randomized,
    dpea,
    dpea_common_edges,
)
from .controllability import (
    RankReport,
    controllability_dimension,
    input_matrix,
    sample_and_validate,
    weighted_laplacian,
)
from .bench import BenchConfig, BenchRow, format_csv, run_bench

__version__ = "0.1.0"

__all__ = [
    "INF",
    "DiGraph",
    "GraphParseError",
    "bfs_distances_from",
    "bfs_distances_to",
    "complement_edges",
    "distance_matrix",
    "format_edge_list",
    "parse_edge_list",
    "random_digraph",
    "read_edge_list",
    "to_dot",
    "write_edge_list",
    "AugmentResult",
    "ZfResult",
    "augment_zf",
    "closed_form_zf_edges",
    "derived_set",
    "zf_bound",
    "PmiSequence",
    "TooManyCandidatesError",
    "dl_matrix",
    "epsilon_star",
    "is_pmi",
    "longest_pmi_exact",
    "longest_pmi_greedy",
    "make_sequence",
    "LevelPartition",
    "VerificationError",
    "augment_distance_best_of",
    "augment_distance_randomized",
    "dpea",
    "dpea_common_edges",
    "RankReport",
    "controllability_dimension",
    "input_matrix",
    "sample_and_validate",
    "weighted_laplacian",
    "BenchConfig",
    "BenchRow",
    "format_csv",
    "run_bench",
]
