"""
engine.py – The d-dimensional generic rigidity matroid of a graph.

Architecture:
    rigidity_matrix(fw)     – |E| × nd matrix R(G, p) over the prime field
    rank_d(g, d)            – max rank of R over `trials` sampled frameworks
    _structure(g, d)        – one reduction of R^T on the best framework:
                                pivot columns   → greedy basis B
                                kernel vectors  → fundamental circuits C(e, B)
    m_components(g, d)      – union-find over the fundamental circuits,
                              certified by the rank additivity check
    analyze(g, d)           – everything above in a MatroidReport

Rank answers can only err downwards (a sampled point may be special,
never "more generic" than generic), so the max over trials is kept.
All answers are memoized in RANK_CACHE.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from errors import GraphInputError, ProbabilisticRankError
from graphs.graph_core import Edge, Graph, delete_edge, edge_subgraph
from linalg.field import FieldMatrix, FieldVector, null_space, rank, transpose
from linalg.framework import Framework, sample_framework, trial_seeds
from rigidity.rank_cache import RANK_CACHE
from settings import DEFAULT_SEED, DEFAULT_TRIALS, MODULUS
from utils.union_find import UnionFind

logger = logging.getLogger(__name__)


# ══════════════════════════════════════════════════════════
#  Rigidity matrix
# ══════════════════════════════════════════════════════════

@dataclass(frozen=True)
class RigidityMatrix:
    """R(G, p): row uv holds p(u) - p(v) in u's columns, p(v) - p(u) in v's."""

    framework: Framework
    matrix: FieldMatrix


def rigidity_matrix(fw: Framework) -> RigidityMatrix:
    g, d, p = fw.graph, fw.dim, fw.modulus
    rows = []
    for u, v in g.edges:
        row = [0] * (g.n * d)
        for k in range(d):
            diff = (fw.points[u][k] - fw.points[v][k]) % p
            row[u * d + k] = diff
            row[v * d + k] = (-diff) % p
        rows.append(row)
    return RigidityMatrix(fw, FieldMatrix.from_rows(rows, cols=g.n * d, modulus=p))


# ══════════════════════════════════════════════════════════
#  Sampling and the rank oracle
# ══════════════════════════════════════════════════════════

@dataclass(frozen=True)
class _Sample:
    """Best framework over the trials and its rigidity-matrix rank."""

    rigidity: RigidityMatrix
    rank: int
    seeds: tuple[int, ...]


def _check_args(d: int, trials: int) -> None:
    if d < 1:
        raise GraphInputError(f"dimension must be >= 1, got {d}")
    if trials < 1:
        raise GraphInputError(f"trials must be >= 1, got {trials}")


def _best_sample(g: Graph, d: int, trials: int, seed: int, modulus: int) -> _Sample:
    _check_args(d, trials)

    def compute() -> _Sample:
        seeds = trial_seeds(seed, trials)
        best: _Sample | None = None
        for child in seeds:
            rig = rigidity_matrix(sample_framework(g, d, child, modulus))
            r = rank(rig.matrix)
            if best is None or r > best.rank:
                if best is not None:
                    logger.warning(
                        "rank trial disagreement on n=%d m=%d d=%d: %d < %d",
                        g.n, g.m, d, best.rank, r,
                    )
                best = _Sample(rig, r, tuple(seeds))
        logger.debug("r_%d of n=%d m=%d graph = %d", d, g.n, g.m, best.rank)
        return best

    key = ("sample", g.to_bytes(), d, trials, seed, modulus)
    return RANK_CACHE.get_or_compute(key, compute)


def rank_d(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
           modulus: int = MODULUS) -> int:
    """r_d(G), the rank of the generic d-dimensional rigidity matroid."""
    return _best_sample(g, d, trials, seed, modulus).rank


def trial_seed_list(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                    modulus: int = MODULUS) -> tuple[int, ...]:
    return _best_sample(g, d, trials, seed, modulus).seeds


def edge_set_rank(g: Graph, edges: Iterable[Edge], d: int, trials: int = DEFAULT_TRIALS,
                  seed: int = DEFAULT_SEED, modulus: int = MODULUS) -> int:
    """Rank of the subgraph induced by an edge set."""
    return rank_d(edge_subgraph(g, edges), d, trials, seed, modulus)


def rigid_rank_target(n: int, d: int) -> int:
    """d|V| - C(d+1, 2), the rank of a rigid graph on n >= d+1 vertices."""
    return d * n - comb(d + 1, 2)


def dof(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
        modulus: int = MODULUS) -> int | None:
    """dof_d(G) = d|V| - C(d+1,2) - r_d(G); None when |V| < d+1."""
    if g.n < d + 1:
        return None
    return rigid_rank_target(g.n, d) - rank_d(g, d, trials, seed, modulus)


# ══════════════════════════════════════════════════════════
#  Rigidity predicates
# ══════════════════════════════════════════════════════════

def is_rigid(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
             modulus: int = MODULUS) -> bool:
    """Gluck's rank criterion; graphs on at most d+1 vertices are rigid iff complete."""
    _check_args(d, trials)
    if g.n <= d + 1:
        return g.is_complete()
    return rank_d(g, d, trials, seed, modulus) == rigid_rank_target(g.n, d)


def is_redundantly_rigid(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                         modulus: int = MODULUS) -> bool:
    """Rigid, and rigid after deleting any single edge."""
    if not is_rigid(g, d, trials, seed, modulus):
        return False
    if g.n <= d + 1:
        # a complete graph minus an edge is not complete
        return g.m == 0
    # for a rigid graph, G - e stays rigid exactly when e is not a bridge
    return not bridges(g, d, trials, seed, modulus)


def is_independent(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                   modulus: int = MODULUS) -> bool:
    return rank_d(g, d, trials, seed, modulus) == g.m


def is_circuit(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
               modulus: int = MODULUS) -> bool:
    """Dependent, with every single-edge deletion independent."""
    if g.m == 0 or rank_d(g, d, trials, seed, modulus) != g.m - 1:
        return False
    return all(is_independent(delete_edge(g, e), d, trials, seed, modulus) for e in g.edges)


# ══════════════════════════════════════════════════════════
#  Matroid structure
# ══════════════════════════════════════════════════════════

@dataclass(frozen=True)
class MatroidStructure:
    """Basis, fundamental circuits and stresses of the best trial framework.

    circuits[j] is C(e_j, B) for the j-th non-basis edge e_j; it is the
    support of stresses[j], the stress with coefficient 1 on e_j.
    """

    graph: Graph
    dim: int
    rank: int
    basis: tuple[int, ...]
    circuits: tuple[tuple[int, ...], ...]
    stresses: tuple[FieldVector, ...]
    rigidity: RigidityMatrix = field(repr=False)


def _structure(g: Graph, d: int, trials: int, seed: int, modulus: int) -> MatroidStructure:
    sample = _best_sample(g, d, trials, seed, modulus)

    def compute() -> MatroidStructure:
        kernel, pivots = null_space(transpose(sample.rigidity.matrix))
        circuits = tuple(tuple(i for i, x in enumerate(vec) if x) for vec in kernel)
        return MatroidStructure(
            g, d, len(pivots), tuple(pivots), circuits, tuple(kernel), sample.rigidity,
        )

    key = ("structure", g.to_bytes(), d, trials, seed, modulus)
    return RANK_CACHE.get_or_compute(key, compute)


def find_basis(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
               modulus: int = MODULUS) -> list[Edge]:
    """Greedy maximal independent edge set in canonical order."""
    st = _structure(g, d, trials, seed, modulus)
    return [g.edges[i] for i in st.basis]


def bridges(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
            modulus: int = MODULUS) -> list[Edge]:
    """Edges whose deletion drops the rank (coloops: in no circuit)."""
    st = _structure(g, d, trials, seed, modulus)
    covered = {i for circ in st.circuits for i in circ}
    return [e for i, e in enumerate(g.edges) if i not in covered]


def fundamental_circuit(g: Graph, d: int, basis: Iterable[Edge], e: Edge,
                        trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                        modulus: int = MODULUS) -> list[Edge]:
    """The unique circuit inside basis ∪ {e}.

    A basis edge f belongs to it iff its coefficient in the dependency
    of e on the basis is nonzero, i.e. iff (basis ∪ {e}) - f is independent.
    """
    cols = sorted({g.edge_index(f) for f in basis})
    target = g.edge_index(e)
    if target in cols:
        raise GraphInputError(f"edge {g.edges[target]} already belongs to the basis")
    st = _structure(g, d, trials, seed, modulus)
    sub = transpose(st.rigidity.matrix).select_columns(cols + [target])
    kernel, _ = null_space(sub)
    if not kernel:
        raise GraphInputError(f"edge {g.edges[target]} is independent of the given basis")
    if len(kernel) > 1:
        raise GraphInputError("the given edge set is not independent")
    picked = cols + [target]
    return sorted(g.edges[picked[i]] for i, x in enumerate(kernel[0]) if x)


def m_components(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                 modulus: int = MODULUS) -> list[list[Edge]]:
    """Edge sets of the M-connected components, ordered by first edge.

    Edges on a common fundamental circuit are merged; every resulting
    class E1 must then satisfy r(E1) + r(E - E1) = r(E).
    """
    st = _structure(g, d, trials, seed, modulus)
    uf = UnionFind(g.m)
    for circ in st.circuits:
        uf.union_all(circ)
    classes = [[g.edges[i] for i in grp] for grp in uf.groups()]
    if len(classes) > 1:
        total = st.rank
        for cls in classes:
            members = set(cls)
            rest = [e for e in g.edges if e not in members]
            r1 = edge_set_rank(g, cls, d, trials, seed, modulus)
            r2 = edge_set_rank(g, rest, d, trials, seed, modulus)
            if r1 + r2 != total:
                logger.warning(
                    "additivity check failed for a class of %d edges: %d + %d != %d",
                    len(cls), r1, r2, total,
                )
                raise ProbabilisticRankError(
                    f"component ranks {r1} + {r2} != {total}; retry with another seed"
                )
    return classes


def is_m_connected(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                   modulus: int = MODULUS) -> bool:
    if g.m == 0:
        raise GraphInputError("M-connectivity needs at least one edge")
    return len(m_components(g, d, trials, seed, modulus)) == 1


def separability_witness(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                         modulus: int = MODULUS) -> tuple[list[Edge], list[Edge]] | None:
    """(first component, union of the others), or None when M-connected."""
    if g.m == 0:
        return None
    classes = m_components(g, d, trials, seed, modulus)
    if len(classes) == 1:
        return None
    return classes[0], sorted(e for cls in classes[1:] for e in cls)


# ══════════════════════════════════════════════════════════
#  Aggregate report
# ══════════════════════════════════════════════════════════

@dataclass
class MatroidReport:
    """All matroid-level facts of (G, d) for one (trials, seed, modulus)."""

    graph: Graph
    dim: int
    rank: int
    dof: int | None
    is_rigid: bool
    is_redundantly_rigid: bool
    is_independent: bool
    bridges: list[Edge]
    components: list[list[Edge]]
    is_m_connected: bool | None
    separability_witness: tuple[list[Edge], list[Edge]] | None
    trials: int
    seed: int
    seeds: list[int]
    modulus: int
    witness_ranks: tuple[int, int] | None = None

    def as_dict(self) -> dict:
        witness = None
        if self.separability_witness is not None:
            e1, e2 = self.separability_witness
            witness = {
                "E1": [list(e) for e in e1],
                "E2": [list(e) for e in e2],
                "ranks": list(self.witness_ranks) if self.witness_ranks else None,
            }
        return {
            "n": self.graph.n,
            "m": self.graph.m,
            "dim": self.dim,
            "rank": self.rank,
            "dof": self.dof,
            "rigid": self.is_rigid,
            "redundantly_rigid": self.is_redundantly_rigid,
            "independent": self.is_independent,
            "bridges": [list(e) for e in self.bridges],
            "components": [[list(e) for e in cls] for cls in self.components],
            "m_connected": self.is_m_connected,
            "witness": witness,
            "seed": self.seed,
            "seeds": list(self.seeds),
            "trials": self.trials,
            "modulus": str(self.modulus),
        }


def analyze(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
            modulus: int = MODULUS) -> MatroidReport:
    opts = (trials, seed, modulus)
    components = m_components(g, d, *opts) if g.m else []
    witness = separability_witness(g, d, *opts)
    witness_ranks = None
    if witness is not None:
        witness_ranks = (edge_set_rank(g, witness[0], d, *opts), edge_set_rank(g, witness[1], d, *opts))
    report = MatroidReport(
        graph=g,
        dim=d,
        rank=rank_d(g, d, *opts),
        dof=dof(g, d, *opts),
        is_rigid=is_rigid(g, d, *opts),
        is_redundantly_rigid=is_redundantly_rigid(g, d, *opts),
        is_independent=is_independent(g, d, *opts),
        bridges=bridges(g, d, *opts),
        components=components,
        is_m_connected=(len(components) == 1) if g.m else None,
        separability_witness=witness,
        trials=trials,
        seed=seed,
        seeds=list(trial_seed_list(g, d, *opts)),
        modulus=modulus,
        witness_ranks=witness_ranks,
    )
    logger.debug("rank cache: %d hits, %d misses, %d entries", RANK_CACHE.hits, RANK_CACHE.misses, len(RANK_CACHE))
    return report
