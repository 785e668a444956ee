import pytest

from errors import GraphInputError
from graphs.generators import (
    FIGURE1_INNER, complete_bipartite, complete_graph, degree_four_reduction,
    figure1_outer_ring, figure2_core_vertices, figure2a_outer_ring, glued_complete_pair,
    ring_of_k5, ring_of_k5_hinge, wheel_graph,
)
from graphs.graph_core import every_edge_in_clique, induced_subgraph


def test_complete_graph_counts():
    assert (complete_graph(5).n, complete_graph(5).m) == (5, 10)
    assert (complete_graph(1).n, complete_graph(1).m) == (1, 0)
    assert complete_graph(4).edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_complete_bipartite_counts():
    assert (complete_bipartite(5, 5).n, complete_bipartite(5, 5).m) == (10, 25)
    assert complete_bipartite(1, 1).edges == ((0, 1),)
    assert complete_bipartite(2, 3).m == 6


def test_wheel():
    w = wheel_graph(5)
    assert (w.n, w.m) == (6, 10)


def test_ring_of_k5_counts(ring6):
    assert (ring6.n, ring6.m) == (18, 54)
    ring3 = ring_of_k5(3)
    assert (ring3.n, ring3.m) == (9, 27)


def test_ring_of_k5_degree_four_tips(ring6):
    degrees = ring6.degrees()
    for i in range(6):
        _, _, tip = ring_of_k5_hinge(6, i)
        assert degrees[tip] == 4


def test_ring_of_k5_cliques(ring6):
    for i in range(6):
        a, b, t = ring_of_k5_hinge(6, i)
        a1, b1, _ = ring_of_k5_hinge(6, i + 1)
        assert induced_subgraph(ring6, {a, b, t, a1, b1}).is_complete()
    assert every_edge_in_clique(ring6, 5)


def test_ring_of_k5_too_short():
    with pytest.raises(GraphInputError):
        ring_of_k5(2)


def test_figure1_counts(figure1):
    assert (figure1.n, figure1.m) == (14, 40)
    assert induced_subgraph(figure1, FIGURE1_INNER).is_complete()


def test_figure1_outer_ring():
    outer = figure1_outer_ring()
    assert (outer.n, outer.m) == (12, 30)


def test_figure2a_counts(figure2a):
    assert (figure2a.n, figure2a.m) == (37, 118)
    assert sum(1 for d in figure2a.degrees() if d == 4) == 9
    assert every_edge_in_clique(figure2a, 5)


def test_figure2a_outer_ring():
    outer = figure2a_outer_ring()
    assert (outer.n, outer.m) == (36, 108)


def test_figure2a_reduction(figure2a):
    reduced = degree_four_reduction(figure2a)
    assert (reduced.n, reduced.m) == (28, 78)


def test_figure2b_counts(figure2b):
    assert (figure2b.n, figure2b.m) == (38, 122)
    assert sum(1 for d in figure2b.degrees() if d == 4) == 10
    core = induced_subgraph(figure2b, figure2_core_vertices(figure2b))
    assert (core.n, core.m) == (6, 14)
    assert every_edge_in_clique(figure2b, 5)


def test_glued_complete_pair():
    g = glued_complete_pair(3)
    assert (g.n, g.m) == (7, 17)
    with pytest.raises(GraphInputError):
        glued_complete_pair(0)
