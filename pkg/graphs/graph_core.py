"""
graph_core.py – Simple undirected graphs in canonical form.

A Graph is an immutable value: vertices are the dense integers
0..n-1 and the edge list is sorted, deduplicated and oriented u < v.
Two graphs built from the same edge multiset are identical, down to
their byte representation (used as the rank-cache key).

Every editing operation returns a new canonical Graph; deletions
reindex the surviving vertices compactly, preserving their order.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from errors import GraphInputError

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


# ══════════════════════════════════════════════════════════
#  Graph value type
# ══════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a canonical edge ordering."""

    vertex_count: int
    edges: tuple[Edge, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {self.vertex_count}")
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        previous = None
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise GraphInputError(
                    f"edge ({u}, {v}) is not a canonical pair in [0, {self.vertex_count})"
                )
            if previous is not None and (u, v) <= previous:
                raise GraphInputError("edge list is not sorted and deduplicated")
            previous = (u, v)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})

    # ── Construction ──────────────────────────────────────

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Iterable[int]]) -> Graph:
        """Canonicalise an arbitrary edge multiset.

        Pairs are oriented, parallel edges collapse, self-loops and
        out-of-range endpoints raise GraphInputError.
        """
        canon = set()
        for pair in edges:
            u, v = (int(x) for x in pair)
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={vertex_count}")
            canon.add((min(u, v), max(u, v)))
        return cls(int(vertex_count), tuple(sorted(canon)))

    # ── Basic queries ─────────────────────────────────────

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_index(self, edge: Edge) -> int:
        """Position of *edge* in the canonical order."""
        key = (min(edge), max(edge))
        try:
            return self._index[key]
        except KeyError:
            raise GraphInputError(f"edge {key} is not in the graph") from None

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return self.adjacency()[v]

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_complete(self) -> bool:
        n = self.vertex_count
        return self.m == n * (n - 1) // 2

    def to_bytes(self) -> bytes:
        """Canonical byte representation (vertex count + edge array)."""
        head = self.vertex_count.to_bytes(4, "little")
        return head + np.asarray(self.edges, dtype=np.int32).reshape(-1, 2).tobytes()

    def sparse_adjacency(self) -> csr_matrix:
        n = self.vertex_count
        if not self.edges:
            return csr_matrix((n, n), dtype=np.int8)
        arr = np.asarray(self.edges, dtype=np.int64)
        rows = np.concatenate([arr[:, 0], arr[:, 1]])
        cols = np.concatenate([arr[:, 1], arr[:, 0]])
        data = np.ones(rows.size, dtype=np.int8)
        return csr_matrix((data, (rows, cols)), shape=(n, n))

    def to_networkx(self) -> nx.Graph:
        """Same vertices and edges as an nx.Graph (labels 0..n-1)."""
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.vertex_count))
        nxg.add_edges_from(self.edges)
        return nxg

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise GraphInputError(f"vertex {v} out of range for n={self.vertex_count}")


@dataclass(frozen=True)
class VertexPartitionSpec:
    """Pairs (vertex of G1, vertex of G2) identified by glue()."""

    identified_pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.identified_pairs)
        object.__setattr__(self, "identified_pairs", pairs)
        left = [a for a, _ in pairs]
        right = [b for _, b in pairs]
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise GraphInputError("a vertex appears twice in the identified pairs")

    @property
    def k(self) -> int:
        return len(self.identified_pairs)

    @classmethod
    def first_k(cls, k: int) -> VertexPartitionSpec:
        """Identify vertex i of G1 with vertex i of G2 for i < k."""
        return cls(tuple((i, i) for i in range(k)))


# ══════════════════════════════════════════════════════════
#  Editing operations
# ══════════════════════════════════════════════════════════

def delete_vertex(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    remap = lambda x: x - 1 if x > v else x  # noqa: E731
    kept = [(remap(a), remap(b)) for a, b in g.edges if v not in (a, b)]
    return Graph.from_edges(g.n - 1, kept)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    drop = set(vertices)
    for v in drop:
        g._check_vertex(v)
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


def delete_edge(g: Graph, edge: Edge) -> Graph:
    idx = g.edge_index(edge)
    return Graph(g.n, g.edges[:idx] + g.edges[idx + 1:])


def delete_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    drop = {g.edge_index(e) for e in edges}
    return Graph(g.n, tuple(e for i, e in enumerate(g.edges) if i not in drop))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    return Graph.from_edges(g.n, list(g.edges) + [(u, v)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by a vertex set, reindexed in vertex order."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[a], pos[b]) for a, b in g.edges if a in pos and b in pos]
    return Graph.from_edges(len(keep), edges)


def edge_subgraph(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Subgraph induced by an edge set, spanning only incident vertices."""
    chosen = sorted({g.edges[g.edge_index(e)] for e in edges})
    verts = sorted({x for e in chosen for x in e})
    pos = {v: i for i, v in enumerate(verts)}
    return Graph.from_edges(len(verts), [(pos[a], pos[b]) for a, b in chosen])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = [(a + g1.n, b + g1.n) for a, b in g2.edges]
    return Graph.from_edges(g1.n + g2.n, list(g1.edges) + shifted)


def cone(g: Graph) -> Graph:
    """Add vertex n joined to every existing vertex."""
    apex = g.n
    return Graph.from_edges(g.n + 1, list(g.edges) + [(u, apex) for u in range(g.n)])


def glue(g1: Graph, g2: Graph, spec: VertexPartitionSpec) -> Graph:
    """Disjoint union with the identified pairs merged.

    G1 keeps its labels; unidentified G2 vertices follow in order.
    Parallel edges collapse.
    """
    graph, _, _ = glue_decomposition(g1, g2, spec)
    return graph


def glue_decomposition(
    g1: Graph, g2: Graph, spec: VertexPartitionSpec,
) -> tuple[Graph, frozenset[int], frozenset[int]]:
    """glue() plus the vertex sets occupied by each half in the result."""
    for a, b in spec.identified_pairs:
        g1._check_vertex(a)
        g2._check_vertex(b)
    partner = {b: a for a, b in spec.identified_pairs}
    mapping: dict[int, int] = {}
    nxt = g1.n
    for v in range(g2.n):
        if v in partner:
            mapping[v] = partner[v]
        else:
            mapping[v] = nxt
            nxt += 1
    edges = list(g1.edges) + [(mapping[a], mapping[b]) for a, b in g2.edges]
    glued = Graph.from_edges(nxt, edges)
    return glued, frozenset(range(g1.n)), frozenset(mapping.values())


# ══════════════════════════════════════════════════════════
#  Structural helpers
# ══════════════════════════════════════════════════════════

def component_labels(g: Graph) -> tuple[int, np.ndarray]:
    return connected_components(g.sparse_adjacency(), directed=False)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    count, _ = component_labels(g)
    return count == 1


def is_biconnected(g: Graph) -> bool:
    """2-connected: at least 3 vertices and no cut vertex."""
    if g.n < 3:
        return False
    return nx.is_biconnected(g.to_networkx())


def has_isolated_vertices(g: Graph) -> bool:
    return any(d == 0 for d in g.degrees())


def cliques(g: Graph, size: int) -> list[tuple[int, ...]]:
    """All vertex sets of *size* inducing a complete subgraph, sorted."""
    found = []
    # enumerate_all_cliques yields by nondecreasing size
    for clique in nx.enumerate_all_cliques(g.to_networkx()):
        if len(clique) > size:
            break
        if len(clique) == size:
            found.append(tuple(sorted(clique)))
    return sorted(found)


def every_edge_in_clique(g: Graph, size: int) -> bool:
    covered: set[Edge] = set()
    for clique in cliques(g, size):
        covered.update(itertools.combinations(clique, 2))
    return all(e in covered for e in g.edges)
