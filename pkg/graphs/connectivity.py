"""
connectivity.py – Vertex connectivity and small separators (networkx).

Connectivity is networkx's flow-based node connectivity (Menger). The
separator search takes the minimum cuts from nx.all_node_cuts and, for
the larger sizes the reconstructibility rules also need, scans vertex
subsets in lexicographic order up to a candidate limit.
"""

from __future__ import annotations

import itertools
import logging

import networkx as nx

from graphs.graph_core import Graph, is_connected

logger = logging.getLogger(__name__)

Separator = tuple[frozenset[int], list[frozenset[int]]]


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s–t paths (s, t non-adjacent)."""
    return nx.node_connectivity(g.to_networkx(), s, t)


def vertex_connectivity(g: Graph) -> int:
    """Largest k such that deleting fewer than k vertices leaves g connected.

    K_n has connectivity n - 1; disconnected graphs have 0.
    """
    if g.n <= 1 or not is_connected(g):
        return 0
    kappa = nx.node_connectivity(g.to_networkx())
    logger.debug("vertex connectivity of n=%d m=%d graph: %d", g.n, g.m, kappa)
    return kappa


def is_k_connected(g: Graph, k: int) -> bool:
    return g.n >= k + 1 and vertex_connectivity(g) >= k


def _split(nxg: nx.Graph, subset) -> Separator | None:
    """(S, components of g - S) if S induces a connected graph and separates."""
    if not nx.is_connected(nxg.subgraph(subset)):
        return None
    rest = nxg.subgraph(v for v in nxg if v not in subset)
    parts = sorted((frozenset(c) for c in nx.connected_components(rest)), key=min)
    if len(parts) < 2:
        return None
    return frozenset(subset), parts


def vertex_separators(g: Graph, min_size: int, max_size: int, limit: int) -> list[Separator]:
    """Separators S (min_size <= |S| <= max_size) inducing a connected subgraph.

    Returns (S, components of g - S) pairs, component vertex sets in the
    original labelling, smaller separators first. At most *limit*
    candidate subsets above the minimum cut size are examined.
    """
    if g.n < 3 or not is_connected(g):
        return []
    nxg = g.to_networkx()
    kappa = vertex_connectivity(g)
    top = min(max_size, g.n - 2)
    found: list[Separator] = []

    start = max(min_size, kappa)
    if start == kappa and kappa <= top:
        cuts = sorted(tuple(sorted(c)) for c in nx.all_node_cuts(nxg, k=kappa) if len(c) == kappa)
        found += [s for s in (_split(nxg, c) for c in cuts) if s is not None]
        start += 1

    examined = 0
    for size in range(start, top + 1):
        for subset in itertools.combinations(range(g.n), size):
            examined += 1
            if examined > limit:
                logger.info("separator search stopped after %d candidates", limit)
                return found
            split = _split(nxg, subset)
            if split is not None:
                found.append(split)
    return found
