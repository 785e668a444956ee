"""
harness package – Executable theorem checks over deterministic corpora.

Modules:
    corpus               – CorpusConfig, random connected / extension-built rigid graphs
    oracles              – Brute-force M-components and circuits for small graphs
    theorems             – PropertyResult, motion_dims and the verify_* properties
    verification_runner  – VerificationRunner: runs suites and prints a summary
"""

from .corpus import (
    CorpusConfig, GluingCase, gluing_pairs, named_graphs, one_extension, oracle_corpus,
    random_connected_graph, random_corpus, random_rigid_graph, zero_extension,
)
from .oracles import brute_circuits, brute_m_components
from .theorems import (
    InstanceRecord, MotionDims, PropertyResult,
    component_dofs, expected_glued_rank, motion_dims, motion_violations,
    verify_cone_circuit, verify_cone_mconnected, verify_dimension_monotonicity, verify_dof_bound,
    verify_gluing_rank, verify_hendrickson_necessity, verify_low_dimension_agreement,
    verify_mconnected_redundant, verify_mconnected_theorem, verify_motion_recursion,
    verify_oracle_circuits, verify_oracle_components,
)
from .verification_runner import SUITES, SuiteResult, VerificationRunner, expand_suites
