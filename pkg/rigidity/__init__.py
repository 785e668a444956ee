"""
rigidity package – The generic rigidity matroid and global rigidity decisions.

Modules:
    rank_cache          – Thread-safe memo table for randomized rank answers
    engine              – Rigidity matrix, rank oracle, bridges, M-components, MatroidReport
    global_rigidity     – Stresses, stress matrices, stress certificates, Hendrickson, H-graphs
    reconstructibility  – Rule cascade for full reconstructibility
"""

from .rank_cache import RANK_CACHE, RankCache
from .engine import (
    MatroidReport, MatroidStructure, RigidityMatrix,
    analyze, bridges, dof, edge_set_rank, find_basis, fundamental_circuit,
    is_circuit, is_independent, is_m_connected, is_redundantly_rigid, is_rigid,
    m_components, rank_d, rigid_rank_target, rigidity_matrix, separability_witness,
)
from .global_rigidity import (
    Decision, GlobalRigidityVerdict, HendricksonReport, StressCertificate,
    StressMatrix, StressVector,
    hendrickson_check, is_globally_rigid, is_h_graph, is_stress, random_stress,
    replay_certificate, stress_certificate, stress_matrix, stress_space_basis,
)
from .reconstructibility import (
    Reconstructibility, ReconstructibilityVerdict, Rule,
    check_decomposition, classify_reconstructibility, separator_decompositions,
)
