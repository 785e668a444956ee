import pytest

from graphs.generators import complete_graph
from graphs.graph_core import is_connected
from harness.corpus import (
    CorpusConfig, gluing_pairs, named_graphs, one_extension, oracle_corpus, random_connected_graph,
    random_corpus, random_rigid_graph, zero_extension,
)
from linalg.field import field_rng
from rigidity.engine import is_rigid
from settings import CORPUS_MAX_EDGES, CORPUS_MAX_VERTICES, GLUING_PAIRS


def test_empty_corpus():
    assert random_corpus(CorpusConfig(size=0)) == []


def test_corpus_is_deterministic():
    config = CorpusConfig(size=30, seed=4, include_named=False)
    assert random_corpus(config) == random_corpus(CorpusConfig(size=30, seed=4, include_named=False))
    assert random_corpus(config) != random_corpus(CorpusConfig(size=30, seed=5, include_named=False))


def test_default_corpus_respects_caps():
    corpus = random_corpus()
    assert len(corpus) >= 200
    assert all(g.n <= CORPUS_MAX_VERTICES and g.m <= CORPUS_MAX_EDGES for g in corpus)


def test_named_graphs_come_first():
    names = [name for name, _ in named_graphs()]
    assert len(names) == len(set(names))
    corpus = random_corpus(CorpusConfig(size=len(names) + 4))
    assert corpus[:len(names)] == [g for _, g in named_graphs()]


def test_random_connected_graph_is_connected():
    rng = field_rng(0)
    for n in range(2, 9):
        assert is_connected(random_connected_graph(rng, n, 0.1))


def test_zero_extension_of_k4_stays_rigid():
    g = zero_extension(complete_graph(4), 2, field_rng(1))
    assert (g.n, g.m) == (5, 8)
    assert is_rigid(g, 2)


def test_one_extension_keeps_edge_count_balance():
    g = complete_graph(4)
    h = one_extension(g, 3, field_rng(2))
    assert h.n == g.n + 1
    assert h.m == g.m - 1 + 3 + 1


@pytest.mark.parametrize("d", [2, 3])
def test_random_rigid_graphs_are_rigid(d):
    rng = field_rng(d)
    for n in range(d + 1, d + 7):
        assert is_rigid(random_rigid_graph(rng, d, n, 0.25), d)


def test_oracle_corpus_sizes():
    corpus = oracle_corpus(seed=0)
    assert len(corpus) == 60
    assert all(0 < g.m <= 12 for g in corpus)


def test_gluing_pairs():
    cases = gluing_pairs()
    assert len(cases) == GLUING_PAIRS
    assert [(c.g1.n, c.g2.n, c.spec.k, c.dim) for c in cases[:3]] == [(5, 5, 3, 3), (5, 5, 2, 3), (4, 4, 1, 2)]
