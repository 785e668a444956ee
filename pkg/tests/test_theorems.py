import pytest

from errors import HypothesisError
from graphs.generators import (
    complete_graph, complete_minus_edge, cycle_graph, empty_graph, path_graph, wheel_graph,
)
from graphs.graph_core import VertexPartitionSpec, disjoint_union
from harness.corpus import CorpusConfig, gluing_pairs, oracle_corpus, random_corpus
from harness.theorems import (
    NOT_APPLICABLE, PASS, MotionDims,
    check_dof_bound, component_dofs, expected_glued_rank, motion_dims, motion_violations,
    verify_cone_circuit, verify_cone_mconnected, verify_dimension_monotonicity, verify_dof_bound,
    verify_gluing_rank, verify_hendrickson_necessity, verify_low_dimension_agreement,
    verify_mconnected_redundant, verify_mconnected_theorem, verify_motion_recursion,
    verify_oracle_circuits, verify_oracle_components,
)


def statuses(result):
    return [r.status for r in result.records]


# ── Global rigidity ⇒ M-connectivity ─────────────────────

def test_complete_graphs_are_m_connected():
    corpus = [complete_graph(n) for n in range(5, 9)]
    result = verify_mconnected_theorem(corpus, 3)
    assert result.passed
    assert result.tested == 4


def test_ring6_is_recorded_as_not_applicable(ring6):
    result = verify_mconnected_theorem([complete_graph(5), ring6], 3)
    assert statuses(result) == [PASS, NOT_APPLICABLE]
    assert result.passed
    assert result.as_dict()["not_applicable"] == 1


def test_not_applicable_reasons():
    result = verify_mconnected_theorem([empty_graph(6), complete_graph(3)], 3)
    assert statuses(result) == [NOT_APPLICABLE, NOT_APPLICABLE]
    assert result.records[0].details == {"reason": "no edges"}
    assert result.records[1].details == {"reason": "fewer than d+2 vertices"}
    assert result.passed and result.tested == 0


def test_random_planar_corpus_hendrickson():
    corpus = random_corpus(CorpusConfig(size=25, seed=2, dim=2, include_named=False))
    assert verify_mconnected_theorem(corpus, 2).passed
    assert verify_hendrickson_necessity(corpus, 2).passed


# ── Dimension monotonicity ───────────────────────────────

def test_monotonicity(ring6, k4):
    result = verify_dimension_monotonicity([ring6], 3)
    assert statuses(result) == [PASS]
    assert verify_dimension_monotonicity([k4], 2).tested == 1


@pytest.mark.slow
def test_monotonicity_skips_figure2a(figure2a):
    result = verify_dimension_monotonicity([figure2a], 3)
    assert statuses(result) == [NOT_APPLICABLE]


# ── Coning ───────────────────────────────────────────────

def test_cone_circuit_equivalence(k4, k4_minus_edge):
    assert verify_cone_circuit([cycle_graph(n) for n in (3, 4, 5)], 1).tested == 3
    result = verify_cone_circuit([k4, k4_minus_edge], 2)
    assert result.passed
    assert result.records[0].details == {"circuit": True, "cone_circuit": True}
    assert result.records[1].details == {"circuit": False, "cone_circuit": False}


def test_cone_mconnected_equivalence(c4, tree):
    two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
    result = verify_cone_mconnected([two_triangles, c4, tree], 1)
    assert result.passed
    assert [r.details["cone_m_connected"] for r in result.records] == [False, True, False]


# ── Degrees of freedom ───────────────────────────────────

def test_dof_bound_not_applicable_on_figure1(figure1):
    status, details = check_dof_bound(figure1, 3)
    assert status == NOT_APPLICABLE
    assert details["connectivity"] == 3
    assert sum(component_dofs(figure1, 3)) < 6


@pytest.mark.slow
def test_dof_bound_equality_on_figure2a(figure2a):
    result = verify_dof_bound(figure2a, 3)
    (record,) = result.records
    assert record.status == PASS
    assert record.details["sum"] == 6 == record.details["bound"]
    assert sorted(record.details["dofs"]) == [0, 6]


@pytest.mark.slow
def test_dof_bound_on_figure2b(figure2b):
    result = verify_dof_bound(figure2b, 3)
    assert result.passed


# ── Motion dimensions ────────────────────────────────────

def test_motion_dims(ring6, k5):
    assert motion_dims(ring6, 3).dims == (1, 3, 6)
    assert motion_dims(k5, 3).dims == (1, 3, 6)
    two_k4 = disjoint_union(complete_graph(4), complete_graph(4))
    assert motion_dims(two_k4, 2).k(1) == 2


def test_motion_recursion_at_equality(ring6):
    assert motion_violations(motion_dims(ring6, 3), 3) == []
    assert motion_violations(MotionDims((0, 3, 6)), 3) != []


def test_motion_recursion_filter(ring6):
    result = verify_motion_recursion([ring6, complete_graph(6), path_graph(6)], 3)
    assert statuses(result) == [PASS, PASS, NOT_APPLICABLE]


def test_motion_recursion_needs_three_dimensions(ring6):
    with pytest.raises(HypothesisError):
        verify_motion_recursion([ring6], 2)


# ── Gluing ───────────────────────────────────────────────

def test_expected_glued_ranks():
    assert expected_glued_rank(8, 3, 2) == 17
    assert expected_glued_rank(7, 2, 1) == 10


def test_gluing_examples(k5, k4):
    cases = [
        (k5, k5, VertexPartitionSpec.first_k(3), 3),
        (k5, k5, VertexPartitionSpec.first_k(2), 3),
        (k4, k4, VertexPartitionSpec.first_k(1), 2),
        (path_graph(4), k4, VertexPartitionSpec.first_k(1), 2),
    ]
    result = verify_gluing_rank(cases)
    assert statuses(result) == [PASS, PASS, PASS, NOT_APPLICABLE]
    assert result.records[1].details["rank"] == 17
    assert result.records[2].details["rank"] == 10
    assert result.dim is None
    assert result.as_dict()["dim"] is None
    assert [r.details["dim"] for r in result.records] == [3, 3, 2, 2]


def test_gluing_with_fixed_dimension_records_it(k5):
    result = verify_gluing_rank([(k5, k5, VertexPartitionSpec.first_k(3), 2)], d=3)
    assert result.dim == 3
    assert result.records[0].details["dim"] == 3


def test_gluing_pairs_pass():
    result = verify_gluing_rank(gluing_pairs(seed=0))
    assert result.passed
    assert result.tested >= 20


# ── Low dimensions ───────────────────────────────────────

@pytest.mark.parametrize("d", [1, 2])
def test_low_dimension_agreement(d):
    corpus = [wheel_graph(5), cycle_graph(6), complete_minus_edge(5), path_graph(5), complete_graph(5)]
    corpus += random_corpus(CorpusConfig(size=20, seed=3, dim=2, include_named=False))
    assert verify_low_dimension_agreement(corpus, d).passed
    assert verify_mconnected_redundant(corpus, d).passed


# ── Oracles ──────────────────────────────────────────────

@pytest.mark.parametrize("d", [2, 3])
def test_oracle_agreement(d):
    corpus = oracle_corpus(seed=0, count=25)
    components = verify_oracle_components(corpus, d)
    circuits = verify_oracle_circuits(corpus, d)
    assert components.passed and circuits.passed
    assert components.tested == 25


def test_property_result_serialisation(k5):
    data = verify_mconnected_theorem([k5], 3, workers=1).as_dict()
    assert data["property"] == "mconnected"
    assert data["passed"] is True
    assert data["violations"] == []
    assert data["records"][0]["status"] == PASS
