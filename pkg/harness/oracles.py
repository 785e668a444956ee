"""
oracles.py – Exponential brute-force oracles for small graphs.

Both oracles read ranks of edge subsets straight off one sampled
framework (row-subset rank of its rigidity matrix), independently of
the engine's basis and circuit machinery. They refuse inputs beyond
their edge caps with OracleSizeError.
"""

from __future__ import annotations

import itertools
import logging

from errors import OracleSizeError
from graphs.graph_core import Edge, Graph
from linalg.field import rank
from linalg.framework import sample_framework, trial_seeds
from rigidity.engine import rigidity_matrix
from settings import (
    BRUTE_CIRCUITS_MAX_EDGES, BRUTE_COMPONENTS_MAX_EDGES, DEFAULT_SEED, DEFAULT_TRIALS, MODULUS,
)

logger = logging.getLogger(__name__)


class SubsetRank:
    """Memoized rank of row subsets (bitmasks over the canonical edge order)."""

    def __init__(self, g: Graph, d: int, seed: int = DEFAULT_SEED, modulus: int = MODULUS):
        # a child stream the engine does not draw from at the default trial count
        fw_seed = trial_seeds(seed, DEFAULT_TRIALS + 1)[-1]
        self.graph = g
        self.matrix = rigidity_matrix(sample_framework(g, d, fw_seed, modulus)).matrix
        self._memo: dict[int, int] = {0: 0}

    def __call__(self, mask: int) -> int:
        if mask not in self._memo:
            rows = [i for i in range(self.graph.m) if mask >> i & 1]
            self._memo[mask] = rank(self.matrix.select_rows(rows))
        return self._memo[mask]


def _edges_of(g: Graph, mask: int) -> list[Edge]:
    return [e for i, e in enumerate(g.edges) if mask >> i & 1]


def _submasks(mask: int):
    """Non-empty proper submasks containing the lowest set bit of *mask*."""
    low = mask & -mask
    rest = mask ^ low
    sub = rest
    while True:
        candidate = sub | low
        if candidate != mask:
            yield candidate
        if sub == 0:
            return
        sub = (sub - 1) & rest


def brute_m_components(g: Graph, d: int, seed: int = DEFAULT_SEED,
                       modulus: int = MODULUS) -> list[list[Edge]]:
    """Finest partition of E reachable by splitting along additive 2-partitions."""
    if g.m > BRUTE_COMPONENTS_MAX_EDGES:
        raise OracleSizeError(
            f"brute_m_components accepts at most {BRUTE_COMPONENTS_MAX_EDGES} edges, got {g.m}"
        )
    r = SubsetRank(g, d, seed, modulus)
    pending = [(1 << g.m) - 1] if g.m else []
    final: list[int] = []
    while pending:
        mask = pending.pop()
        total = r(mask)
        for part in _submasks(mask):
            other = mask ^ part
            if r(part) + r(other) == total:
                pending.extend([part, other])
                break
        else:
            final.append(mask)
    classes = [_edges_of(g, mask) for mask in final]
    return sorted(classes, key=lambda cls: cls[0])


def brute_circuits(g: Graph, d: int, seed: int = DEFAULT_SEED,
                   modulus: int = MODULUS) -> list[list[Edge]]:
    """Every minimal dependent edge set, by subset enumeration in size order."""
    if g.m > BRUTE_CIRCUITS_MAX_EDGES:
        raise OracleSizeError(
            f"brute_circuits accepts at most {BRUTE_CIRCUITS_MAX_EDGES} edges, got {g.m}"
        )
    r = SubsetRank(g, d, seed, modulus)
    found: list[int] = []
    for size in range(1, g.m + 1):
        for combo in itertools.combinations(range(g.m), size):
            mask = sum(1 << i for i in combo)
            if any(c & mask == c for c in found):
                continue
            # every proper subset is independent once no smaller circuit fits inside
            if r(mask) < size:
                found.append(mask)
    logger.debug("%d circuits in n=%d m=%d graph (d=%d)", len(found), g.n, g.m, d)
    return [_edges_of(g, mask) for mask in found]
