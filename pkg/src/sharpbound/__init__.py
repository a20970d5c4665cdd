"""Characteristics, sharp-bound evaluators, and exhaustive verification
for digraphs, rooted trees, and integer partition sequences."""

from .bounds import (
    CaseId,
    LeafInterval,
    conj1_bound,
    conj1_case,
    conj2_bound,
    conj3_bound,
    conj3_case,
    conj4_bound,
    conj4_case,
    feasible_cases,
    partition_nval_lower,
    partition_nval_upper,
    tree_leaf_interval,
)
from .digraphs import (
    Digraph,
    DigraphCharacteristics,
    characteristics,
    connected_components,
    in_class,
    strongly_connected_components,
)
from .documents import GraphDocument, parse_document, to_dot, to_json_dict
from .enumeration import (
    EnumerationSpec,
    enumerate_digraphs,
    enumerate_partitions,
    enumerate_rooted_trees,
    generate,
)
from .fixtures import WitnessFixture
from .structures import (
    PartitionCharacteristics,
    PartitionInstance,
    RootedTree,
    RootedTreeCharacteristics,
    partition_characteristics,
    tree_characteristics,
    tree_to_partition,
)
from .verify import (
    VerificationReport,
    check_fixture,
    cross_check_tree_partition,
    verify_case_coverage,
    verify_sharpness,
    verify_validity,
)

__version__ = "0.1.0"

__all__ = [
    "CaseId",
    "Digraph",
    "DigraphCharacteristics",
    "EnumerationSpec",
    "GraphDocument",
    "LeafInterval",
    "PartitionCharacteristics",
    "PartitionInstance",
    "RootedTree",
    "RootedTreeCharacteristics",
    "VerificationReport",
    "WitnessFixture",
    "characteristics",
    "check_fixture",
    "conj1_bound",
    "conj1_case",
    "conj2_bound",
    "conj3_bound",
    "conj3_case",
    "conj4_bound",
    "conj4_case",
    "connected_components",
    "cross_check_tree_partition",
    "enumerate_digraphs",
    "enumerate_partitions",
    "enumerate_rooted_trees",
    "feasible_cases",
    "generate",
    "in_class",
    "parse_document",
    "partition_characteristics",
    "partition_nval_lower",
    "partition_nval_upper",
    "strongly_connected_components",
    "to_dot",
    "to_json_dict",
    "tree_characteristics",
    "tree_leaf_interval",
    "tree_to_partition",
    "verify_case_coverage",
    "verify_sharpness",
    "verify_validity",
]
