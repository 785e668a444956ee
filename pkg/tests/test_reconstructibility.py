import pytest

from errors import GraphInputError
from graphs.generators import complete_graph, empty_graph, glued_complete_pair
from graphs.graph_core import VertexPartitionSpec, disjoint_union, glue, glue_decomposition
from rigidity.reconstructibility import (
    Reconstructibility, Rule, _classify, _Options, check_decomposition, classify_reconstructibility,
    separator_decompositions,
)
from settings import DEFAULT_SEED, DEFAULT_TRIALS, GLOBAL_TRIALS, MODULUS


def k5_chain():
    """Three K5's glued along two triangles; 9 vertices."""
    pair = glued_complete_pair(3)   # K5's on {0..4} and {0, 1, 2, 5, 6}
    return glue(pair, complete_graph(5), VertexPartitionSpec(((2, 0), (5, 1), (6, 2))))


def test_complete_graph_via_global_rigidity(k5):
    verdict = classify_reconstructibility(k5, 3)
    assert verdict.decision == Reconstructibility.FULLY
    assert verdict.rule == Rule.GLOBALLY_RIGID
    assert verdict.certificate["global_rigidity"]["decision"] == "GloballyRigid"


def test_glued_pair_via_gluing():
    verdict = classify_reconstructibility(glued_complete_pair(3), 3)
    assert verdict.decision == Reconstructibility.FULLY
    assert verdict.rule == Rule.GLUING
    assert len(verdict.certificate["overlap"]) == 3
    assert all(p["decision"] == "FullyReconstructible" for p in verdict.certificate["pieces"])


def test_glued_pair_with_supplied_decomposition():
    k5 = complete_graph(5)
    g, left, right = glue_decomposition(k5, k5, VertexPartitionSpec.first_k(3))
    verdict = classify_reconstructibility(g, 3, decompositions=[(left, right)])
    assert verdict.rule == Rule.GLUING
    assert verdict.certificate["V1"] == sorted(left)
    assert verdict.certificate["V2"] == sorted(right)


def test_gluing_needs_search_depth():
    verdict = classify_reconstructibility(glued_complete_pair(3), 3, max_depth=0)
    assert verdict.decision == Reconstructibility.UNKNOWN
    assert verdict.as_dict() == {"decision": "Unknown", "rule": None, "certificate": None}


def test_k5_chain_needs_two_levels():
    g = k5_chain()
    assert (g.n, g.m) == (9, 24)
    assert classify_reconstructibility(g, 3).rule == Rule.GLUING
    assert classify_reconstructibility(g, 3, max_depth=1).decision == Reconstructibility.UNKNOWN


def test_unknown_near_depth_cap_is_not_reused():
    g = k5_chain()
    opts = _Options(3, DEFAULT_TRIALS, DEFAULT_SEED, MODULUS, GLOBAL_TRIALS, max_depth=2)
    memo = {}
    assert _classify(g, opts, [], 1, memo).decision == Reconstructibility.UNKNOWN
    assert g.to_bytes() not in memo
    verdict = _classify(g, opts, [], 0, memo)
    assert verdict.decision == Reconstructibility.FULLY
    assert verdict.rule == Rule.GLUING


def test_figure1_not_fully_reconstructible(figure1):
    verdict = classify_reconstructibility(figure1, 3)
    assert verdict.decision == Reconstructibility.NOT_FULLY
    assert verdict.rule == Rule.M_SEPARABLE
    assert verdict.certificate["E1"] and verdict.certificate["E2"]


@pytest.mark.slow
def test_ring6_is_unknown(ring6):
    verdict = classify_reconstructibility(ring6, 3)
    assert verdict.decision == Reconstructibility.UNKNOWN
    assert verdict.rule is None


def test_rejects_isolated_vertices():
    g = disjoint_union(complete_graph(5), empty_graph(1))
    with pytest.raises(GraphInputError):
        classify_reconstructibility(g, 3)


def test_rejects_the_line(k5):
    with pytest.raises(GraphInputError):
        classify_reconstructibility(k5, 1)


def test_check_decomposition_errors():
    g = glued_complete_pair(3)
    everything = set(range(g.n))
    with pytest.raises(GraphInputError):
        check_decomposition(g, {0, 1, 2, 3, 4}, {0, 1, 2, 5})
    with pytest.raises(GraphInputError):
        check_decomposition(g, {0, 1, 2, 3, 4}, {0, 1, 5, 6})
    with pytest.raises(GraphInputError):
        check_decomposition(g, everything, {0, 1})
    assert check_decomposition(g, {0, 1, 2, 3, 4}, {0, 1, 2, 5, 6}) == (
        frozenset({0, 1, 2, 3, 4}), frozenset({0, 1, 2, 5, 6}),
    )


def test_separator_decompositions_of_glued_pair():
    g = glued_complete_pair(3)
    found = separator_decompositions(g)
    assert (frozenset({0, 1, 2, 5, 6}), frozenset({0, 1, 2, 3, 4})) in found
    for v1, v2 in found:
        assert v1 | v2 == frozenset(range(g.n))
