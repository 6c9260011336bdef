"""Lifetime-maximizing data-aggregation trees for energy-annotated sensor graphs.

The toolkit builds aggregation trees with the centralized
lifetime-maximizing construction (bottleneck sweep plus hop-minimal
rooting), two baselines for comparison, a brute-force optimum oracle,
and a round-based lifetime simulator. See the ``clmt`` CLI for the
batteries-included workflows.
"""

from .builders import (
    ALGORITHMS,
    BuildOutcome,
    SweepEvent,
    build_clmt,
    build_espan,
    build_spanning,
    find_bottleneck,
    resolve_builder,
)
from .errors import (
    ClmtError,
    ConfigError,
    ContractError,
    DisconnectedError,
    EnumerationLimitError,
    GenerationError,
    InvalidNodeError,
    TopologyFormatError,
)
from .generate import ExperimentConfig, instance_stream, random_connected_graph, random_geometric_graph
from .graph import Edge, SensorGraph, edge_key
from .oracle import OracleResult, cut_vertices, enumerate_spanning_trees, optimal_tree_energy
from .serialize import (
    export_dot,
    parse_topology,
    read_outcome,
    timeline_csv,
    write_outcome,
    write_topology,
)
from .sim import SimConfig, SimReport
from .tree import (
    AggregationTree,
    branch_energy,
    hop_distances,
    shortest_path_tree,
    tree_energy,
    validate,
    validation_errors,
)

__all__ = [
    "ALGORITHMS",
    "AggregationTree",
    "BuildOutcome",
    "ClmtError",
    "ConfigError",
    "ContractError",
    "DisconnectedError",
    "Edge",
    "EnumerationLimitError",
    "ExperimentConfig",
    "GenerationError",
    "InvalidNodeError",
    "OracleResult",
    "SensorGraph",
    "SimConfig",
    "SimReport",
    "SweepEvent",
    "TopologyFormatError",
    "branch_energy",
    "build_clmt",
    "build_espan",
    "build_spanning",
    "cut_vertices",
    "edge_key",
    "enumerate_spanning_trees",
    "export_dot",
    "find_bottleneck",
    "hop_distances",
    "instance_stream",
    "optimal_tree_energy",
    "parse_topology",
    "random_connected_graph",
    "random_geometric_graph",
    "read_outcome",
    "resolve_builder",
    "shortest_path_tree",
    "timeline_csv",
    "tree_energy",
    "validate",
    "validation_errors",
    "write_outcome",
    "write_topology",
]
