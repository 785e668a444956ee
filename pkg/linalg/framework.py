"""
framework.py – Surrogate generic frameworks.

Generic real coordinates are replaced by uniform random points of the
prime field. A polynomial of degree D that is not identically zero
vanishes at such a point with probability at most D / p, so every
rank computed from a sampled framework equals the generic rank except
with negligible probability.

Randomness is counter-based (Philox) and splittable: a run seed is
spawned into independent per-trial seeds with SeedSequence.spawn.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from errors import GraphInputError
from graphs.graph_core import Graph
from linalg.field import FieldMatrix, field_rng
from settings import MODULUS


@dataclass(frozen=True)
class Framework:
    """A graph with d field coordinates per vertex."""

    graph: Graph
    dim: int
    points: tuple[tuple[int, ...], ...]
    seed: int
    modulus: int = MODULUS

    def __post_init__(self):
        if len(self.points) != self.graph.n:
            raise GraphInputError(f"{len(self.points)} points for {self.graph.n} vertices")
        if any(len(pt) != self.dim for pt in self.points):
            raise GraphInputError(f"every point needs exactly {self.dim} coordinates")

    def coordinate_matrix(self) -> FieldMatrix:
        """n × d matrix P whose row v is p(v)."""
        return FieldMatrix.from_rows(self.points, cols=self.dim, modulus=self.modulus)


def sample_framework(g: Graph, d: int, seed: int, modulus: int = MODULUS) -> Framework:
    """Uniform random field points, deterministic in (g, d, seed, modulus)."""
    if d < 1:
        raise GraphInputError(f"dimension must be >= 1, got {d}")
    rng = field_rng(seed)
    coords = rng.integers(0, modulus, size=(g.n, d), dtype=np.int64)
    points = tuple(tuple(int(x) for x in row) for row in coords)
    return Framework(g, d, points, int(seed), modulus)


def trial_seeds(seed: int, trials: int) -> list[int]:
    """Independent 64-bit child seeds of *seed*, one per trial."""
    children = np.random.SeedSequence(int(seed)).spawn(trials)
    return [int(child.generate_state(1, np.uint64)[0]) for child in children]
