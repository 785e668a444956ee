"""
generators.py – Named graph families.

Covers the standard families (complete, bipartite, cycles, wheels)
and every example graph used by the theorem harness:

    ring_of_k5(k)       – closed chain of k K5's sharing an edge pairwise
    figure1_graph()     – 3-connected, redundantly rigid, M-separable in 3D
    figure2_family(K')  – outer ring of twelve K5's around a core K'
    figure2a_graph()    – figure2_family(K5)
    figure2b_graph()    – figure2_family(K6 - e)
    glued_complete_pair – two copies of K_{d+2} glued along three pairs

The figure graphs are fixed edge lists produced by the construction
rules below; their rank identities are checked in the test suite.
"""

from __future__ import annotations

import itertools

from errors import GraphInputError
from graphs.graph_core import (
    Graph, VertexPartitionSpec,
    cliques, cone, delete_edges, delete_vertices, edge_subgraph, glue,
)


# ══════════════════════════════════════════════════════════
#  Standard families
# ══════════════════════════════════════════════════════════

def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise GraphInputError(f"complete graph needs n >= 0, got {n}")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts {0..a-1} and {a..a+b-1}."""
    if a < 0 or b < 0:
        raise GraphInputError(f"bipartite sides must be non-negative, got ({a}, {b})")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(max(n, 0), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(rim: int) -> Graph:
    """Cone over the cycle C_rim (rim + 1 vertices)."""
    return cone(cycle_graph(rim))


def complete_minus_edge(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2))[1:])


# ══════════════════════════════════════════════════════════
#  Rings of K5's
# ══════════════════════════════════════════════════════════

def ring_of_k5(k: int) -> Graph:
    """k copies of K5 in a closed chain.

    Vertex a_i = 3i, b_i = 3i + 1, t_i = 3i + 2. Copy i spans
    {a_i, b_i, t_i, a_{i+1}, b_{i+1}}; copies i and i+1 share the
    edge a_{i+1} b_{i+1}. n = 3k, |E| = 9k.
    """
    if k < 3:
        raise GraphInputError(f"ring_of_k5 needs k >= 3, got {k}")
    edges = []
    for i in range(k):
        j = (i + 1) % k
        block = (3 * i, 3 * i + 1, 3 * i + 2, 3 * j, 3 * j + 1)
        edges.extend(itertools.combinations(block, 2))
    return Graph.from_edges(3 * k, edges)


def ring_of_k5_hinge(k: int, i: int) -> tuple[int, int, int]:
    """(a_i, b_i, t_i) labels of ring_of_k5(k)."""
    i %= k
    return 3 * i, 3 * i + 1, 3 * i + 2


# ── figure1 ──────────────────────────────────────────────
# b_k, c_k, d_k, e_k = 4k .. 4k+3 for k in Z_3; o1 = 12, o2 = 13.

FIGURE1_INNER = (0, 4, 8, 12, 13)   # b_0, b_1, b_2, o1, o2


def figure1_graph() -> Graph:
    edges = [(12, 13)]
    for k in range(3):
        b, c, d, e = 4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3
        nk = 4 * ((k + 1) % 3)
        edges += [(b, c), (c, d), (d, b)]
        edges += [(e, b), (e, c), (e, d)]
        edges += [(e, nk), (e, nk + 1), (e, nk + 2)]
        edges += [(e, nk + 3), (b, nk)]
        edges += [(b, 12), (b, 13)]
    return Graph.from_edges(14, edges)


def figure1_outer_ring() -> Graph:
    """The three outer K5's (30 edges on 12 vertices)."""
    g = figure1_graph()
    inner = set(FIGURE1_INNER)
    return edge_subgraph(g, [e for e in g.edges if not set(e) <= inner])


# ── figure2a / figure2b ──────────────────────────────────
# Outer band O_x = x, inner band I_x = 12 + x (x in Z_12), apexes
# W_0..W_7 = 24..31, core vertex j = 32 + j (core 0..3 are corners).

_BAND = 12
_APEX_BASE = 24
_CORE_BASE = 32


def _band_segment(z: int) -> tuple[int, int, int, int]:
    z1 = (z + 1) % _BAND
    return z, z1, _BAND + z, _BAND + z1


def figure2_family(core: Graph) -> Graph:
    """Outer ring of twelve K5's around *core*.

    Each of the twelve band segments {O_z, O_{z+1}, I_z, I_{z+1}}
    (a K4) receives one extra vertex: corner c of the core takes
    z = 3c, apexes W_{2c} and W_{2c+1} take z = 3c+1 and 3c+2.
    """
    if core.n < 4:
        raise GraphInputError("the core needs its four corner vertices 0..3")
    edges = []
    for x in range(_BAND):
        o, o1, i, i1 = _band_segment(x)
        edges += [(o, o1), (i, i1), (i, o), (i, o1), (i1, o)]
    for c in range(4):
        corner = _CORE_BASE + c
        edges += [(corner, w) for w in _band_segment(3 * c)]
        for side, z in enumerate((3 * c + 1, 3 * c + 2)):
            apex = _APEX_BASE + 2 * c + side
            edges += [(apex, w) for w in _band_segment(z)]
    edges += [(_CORE_BASE + a, _CORE_BASE + b) for a, b in core.edges]
    return Graph.from_edges(_CORE_BASE + core.n, edges)


def figure2a_graph() -> Graph:
    """37 vertices, 118 edges; the core is K5 (corners plus hub o = 36)."""
    return figure2_family(complete_graph(5))


def figure2b_graph() -> Graph:
    """38 vertices, 122 edges; the core is K6 minus the edge (o, o2)."""
    core = Graph.from_edges(6, [e for e in itertools.combinations(range(6), 2) if e != (4, 5)])
    return figure2_family(core)


def figure2_core_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(range(_CORE_BASE, g.n))


def figure2a_outer_ring() -> Graph:
    """figure2a without its core edges: 36 vertices, 108 edges."""
    g = figure2a_graph()
    core = set(figure2_core_vertices(g))
    return edge_subgraph(g, [e for e in g.edges if not set(e) <= core])


def degree_four_reduction(g: Graph) -> Graph:
    """Delete every degree-4 vertex, then one edge from each remaining K5."""
    four = [v for v, deg in enumerate(g.degrees()) if deg == 4]
    reduced = delete_vertices(g, four)
    removed = set()
    for clique in cliques(reduced, 5):
        pairs = list(itertools.combinations(clique, 2))
        if not any(p in removed for p in pairs):
            removed.add(pairs[0])
    return delete_edges(reduced, removed)


# ══════════════════════════════════════════════════════════
#  Gluing
# ══════════════════════════════════════════════════════════

def glued_complete_pair(d: int, pairs: int = 3) -> Graph:
    """Two copies of K_{d+2} identified along *pairs* vertex pairs."""
    if d < 1:
        raise GraphInputError(f"dimension must be >= 1, got {d}")
    k = complete_graph(d + 2)
    return glue(k, k, VertexPartitionSpec.first_k(pairs))
