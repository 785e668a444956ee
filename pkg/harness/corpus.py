"""
corpus.py – Deterministic graph corpora for the theorem suites.

A corpus mixes three sources:
    named      – every family generator, filtered by the size caps
    random     – Erdős–Rényi graphs conditioned on connectivity
    extension  – rigid graphs grown from K_{d+1} by 0- and 1-extensions

0-extensions (new vertex of degree d) and 1-extensions (split an edge
uv with a new vertex joined to u, v and d-1 others) preserve rigidity
in R^d, so extension graphs are rigid by construction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from graphs.graph_core import Graph, VertexPartitionSpec, disjoint_union, is_connected
from graphs.generators import (
    complete_bipartite, complete_graph, complete_minus_edge, cycle_graph,
    figure1_graph, figure2a_graph, figure2b_graph, glued_complete_pair,
    path_graph, ring_of_k5, wheel_graph,
)
from linalg.field import field_rng
from settings import (
    CORPUS_EDGE_PROBABILITY, CORPUS_EXTRA_EDGE_PROBABILITY, CORPUS_MAX_EDGES,
    CORPUS_MAX_VERTICES, CORPUS_RANDOM_MAX_VERTICES, CORPUS_RANDOM_MIN_VERTICES,
    CORPUS_SIZE, DEFAULT_DIM, DEFAULT_SEED, GLUING_PAIRS, ORACLE_CORPUS_MAX_EDGES,
)

logger = logging.getLogger(__name__)

_CONNECT_ATTEMPTS = 50


@dataclass
class CorpusConfig:
    """Family mix, size bounds and count of a corpus."""
    size: int = CORPUS_SIZE
    seed: int = DEFAULT_SEED
    dim: int = DEFAULT_DIM                    # dimension of extension-built graphs
    include_named: bool = True
    min_vertices: int = CORPUS_RANDOM_MIN_VERTICES
    max_vertices: int = CORPUS_RANDOM_MAX_VERTICES
    edge_probability: float = CORPUS_EDGE_PROBABILITY
    extra_edge_probability: float = CORPUS_EXTRA_EDGE_PROBABILITY
    vertex_cap: int = CORPUS_MAX_VERTICES
    edge_cap: int = CORPUS_MAX_EDGES


# ══════════════════════════════════════════════════════════
#  Named graphs
# ══════════════════════════════════════════════════════════

def named_graphs() -> list[tuple[str, Graph]]:
    """Every example family at its standard parameters."""
    two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
    return [
        *[(f"K{n}", complete_graph(n)) for n in range(3, 9)],
        ("K5-e", complete_minus_edge(5)),
        ("K4-e", complete_minus_edge(4)),
        ("K33", complete_bipartite(3, 3)),
        ("K55", complete_bipartite(5, 5)),
        *[(f"C{n}", cycle_graph(n)) for n in (4, 5, 6)],
        ("P4", path_graph(4)),
        ("W5", wheel_graph(5)),
        ("2xK3", two_triangles),
        *[(f"ring{k}", ring_of_k5(k)) for k in (3, 4, 6)],
        ("glued2", glued_complete_pair(2)),
        ("glued3", glued_complete_pair(3)),
        ("figure1", figure1_graph()),
        ("figure2a", figure2a_graph()),
        ("figure2b", figure2b_graph()),
    ]


# ══════════════════════════════════════════════════════════
#  Random builders
# ══════════════════════════════════════════════════════════

def random_connected_graph(rng: np.random.Generator, n: int, prob: float) -> Graph:
    """G(n, prob) conditioned on connectivity (resampled, then path-patched)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = Graph(n)
    for _ in range(_CONNECT_ATTEMPTS):
        keep = rng.random(len(pairs)) < prob
        g = Graph(n, tuple(e for e, k in zip(pairs, keep) if k))
        if is_connected(g):
            return g
    logger.debug("G(%d, %.2f) stayed disconnected, adding a spanning path", n, prob)
    return Graph.from_edges(n, list(g.edges) + [(i, i + 1) for i in range(n - 1)])


def zero_extension(g: Graph, d: int, rng: np.random.Generator) -> Graph:
    """Add a vertex joined to d distinct existing vertices."""
    nbrs = rng.choice(g.n, size=d, replace=False)
    return Graph.from_edges(g.n + 1, list(g.edges) + [(int(u), g.n) for u in nbrs])


def one_extension(g: Graph, d: int, rng: np.random.Generator) -> Graph:
    """Delete an edge uv, add a vertex joined to u, v and d-1 further vertices."""
    u, v = g.edges[int(rng.integers(g.m))]
    others = [w for w in range(g.n) if w not in (u, v)]
    extra = rng.choice(len(others), size=d - 1, replace=False)
    nbrs = [u, v] + [others[int(i)] for i in extra]
    kept = [e for e in g.edges if e != (u, v)]
    return Graph.from_edges(g.n + 1, kept + [(int(w), g.n) for w in nbrs])


def random_rigid_graph(rng: np.random.Generator, d: int, n: int, extra_prob: float) -> Graph:
    """Rigid graph on n >= d+1 vertices by a random extension sequence."""
    g = complete_graph(d + 1)
    while g.n < n:
        if g.n >= d + 1 and rng.random() < 0.5:
            g = one_extension(g, d, rng)
        else:
            g = zero_extension(g, d, rng)
        if rng.random() < extra_prob:
            a, b = (int(x) for x in rng.choice(g.n, size=2, replace=False))
            g = Graph.from_edges(g.n, list(g.edges) + [(a, b)])
    return g


def _within_caps(g: Graph, config: CorpusConfig) -> bool:
    return g.n <= config.vertex_cap and g.m <= config.edge_cap


def random_corpus(config: CorpusConfig | None = None) -> list[Graph]:
    """Deterministic corpus of config.size graphs (named graphs first)."""
    config = config or CorpusConfig()
    if config.size <= 0:
        return []
    rng = field_rng(config.seed)
    corpus: list[Graph] = []
    if config.include_named:
        corpus.extend(g for _, g in named_graphs() if _within_caps(g, config))
    i = 0
    while len(corpus) < config.size:
        n = int(rng.integers(config.min_vertices, config.max_vertices + 1))
        if i % 2 == 0:
            g = random_connected_graph(rng, n, config.edge_probability)
        else:
            d = config.dim if i % 4 == 1 else max(1, config.dim - 1)
            g = random_rigid_graph(rng, d, max(n, d + 1), config.extra_edge_probability)
        i += 1
        if _within_caps(g, config):
            corpus.append(g)
    logger.info("built corpus of %d graphs (seed %d)", len(corpus[:config.size]), config.seed)
    return corpus[:config.size]


def oracle_corpus(seed: int = DEFAULT_SEED, count: int = 60,
                  max_edges: int = ORACLE_CORPUS_MAX_EDGES) -> list[Graph]:
    """Small connected graphs with at most *max_edges* edges for the brute oracles."""
    rng = field_rng(seed)
    found = [g for _, g in named_graphs() if g.m <= max_edges]
    while len(found) < count:
        n = int(rng.integers(4, 8))
        prob = float(rng.uniform(0.4, 0.8))
        g = random_connected_graph(rng, n, prob)
        if g.m <= max_edges:
            found.append(g)
    return found[:count]


@dataclass(frozen=True)
class GluingCase:
    g1: Graph
    g2: Graph
    spec: VertexPartitionSpec
    dim: int


def gluing_pairs(seed: int = DEFAULT_SEED, count: int = GLUING_PAIRS) -> list[GluingCase]:
    """Pairs of rigid graphs and how many vertices to identify, over d in {2, 3}."""
    rng = field_rng(seed)
    cases = [
        GluingCase(complete_graph(5), complete_graph(5), VertexPartitionSpec.first_k(3), 3),
        GluingCase(complete_graph(5), complete_graph(5), VertexPartitionSpec.first_k(2), 3),
        GluingCase(complete_graph(4), complete_graph(4), VertexPartitionSpec.first_k(1), 2),
    ]
    while len(cases) < count:
        d = int(rng.integers(2, 4))
        g1 = random_rigid_graph(rng, d, int(rng.integers(d + 1, d + 5)), CORPUS_EXTRA_EDGE_PROBABILITY)
        g2 = random_rigid_graph(rng, d, int(rng.integers(d + 1, d + 5)), CORPUS_EXTRA_EDGE_PROBABILITY)
        k = int(rng.integers(0, min(g1.n, g2.n, d + 1) + 1))
        cases.append(GluingCase(g1, g2, VertexPartitionSpec.first_k(k), d))
    return cases[:count]
