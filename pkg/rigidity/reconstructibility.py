"""
reconstructibility.py – Theorem-driven classification of full reconstructibility.

Rules are tried in order; the first one that fires decides:

    1. globally rigid on >= d+2 vertices              → FullyReconstructible
    2. not M-connected (witness attached)             → NotFullyReconstructible
    3. union of two induced, rigid, fully
       reconstructible pieces on >= d+1 vertices that
       overlap in a connected subgraph on >= 3 vertices → FullyReconstructible

Anything else is Unknown. Rule 3 only inspects decompositions passed in
by the caller plus small connected vertex separators; pieces are
classified recursively up to CLASSIFY_MAX_DEPTH levels.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from errors import GraphInputError
from graphs.connectivity import vertex_separators
from graphs.graph_core import Graph, has_isolated_vertices, induced_subgraph, is_connected
from rigidity.engine import is_rigid, separability_witness
from rigidity.global_rigidity import is_globally_rigid
from settings import (
    CLASSIFY_MAX_DEPTH, DEFAULT_SEED, DEFAULT_TRIALS, GLOBAL_TRIALS, MODULUS,
    SEPARATOR_MAX_SIZE, SEPARATOR_MIN_SIZE, SEPARATOR_SEARCH_LIMIT,
)

logger = logging.getLogger(__name__)

Decomposition = tuple[frozenset[int], frozenset[int]]


class Reconstructibility(str, Enum):
    FULLY = "FullyReconstructible"
    NOT_FULLY = "NotFullyReconstructible"
    UNKNOWN = "Unknown"


class Rule(str, Enum):
    GLOBALLY_RIGID = "globally-rigid"
    M_SEPARABLE = "m-separable"
    GLUING = "gluing"


@dataclass
class ReconstructibilityVerdict:
    decision: Reconstructibility
    rule: Rule | None = None
    certificate: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "decision": self.decision.value,
            "rule": self.rule.value if self.rule else None,
            "certificate": self.certificate or None,
        }


@dataclass(frozen=True)
class _Options:
    dim: int
    trials: int
    seed: int
    modulus: int
    global_trials: int
    max_depth: int


# ══════════════════════════════════════════════════════════
#  Decompositions
# ══════════════════════════════════════════════════════════

def check_decomposition(g: Graph, v1: Iterable[int], v2: Iterable[int]) -> Decomposition:
    """Validate (V1, V2) as a gluing of two induced subgraphs of g."""
    a, b = frozenset(v1), frozenset(v2)
    for v in a | b:
        g._check_vertex(v)
    if a | b != frozenset(range(g.n)):
        raise GraphInputError("decomposition does not cover every vertex")
    for u, v in g.edges:
        if not ({u, v} <= a or {u, v} <= b):
            raise GraphInputError(f"edge ({u}, {v}) lies in neither half of the decomposition")
    overlap = a & b
    if len(overlap) < 3 or not is_connected(induced_subgraph(g, overlap)):
        raise GraphInputError("overlap must induce a connected subgraph on at least 3 vertices")
    return a, b


def separator_decompositions(g: Graph, limit: int = SEPARATOR_SEARCH_LIMIT) -> list[Decomposition]:
    """(S ∪ C, V - C) for every small connected separator S and component C of g - S."""
    everything = frozenset(range(g.n))
    found: list[Decomposition] = []
    seen: set[Decomposition] = set()
    for sep, parts in vertex_separators(g, SEPARATOR_MIN_SIZE, SEPARATOR_MAX_SIZE, limit):
        for part in parts:
            pair = (sep | part, everything - part)
            if pair not in seen:
                seen.add(pair)
                found.append(pair)
    return found


# ══════════════════════════════════════════════════════════
#  Classification
# ══════════════════════════════════════════════════════════

def _classify(g: Graph, opts: _Options, decompositions: list[Decomposition], depth: int,
              memo: dict[bytes, ReconstructibilityVerdict]) -> ReconstructibilityVerdict:
    key = g.to_bytes()
    if key in memo and not decompositions:
        return memo[key]
    d = opts.dim
    common = (opts.trials, opts.seed, opts.modulus)

    # ── Rule 1 ──
    if g.n >= d + 2:
        verdict = is_globally_rigid(g, d, opts.global_trials, opts.seed, opts.modulus)
        if verdict.globally_rigid:
            result = ReconstructibilityVerdict(
                Reconstructibility.FULLY, Rule.GLOBALLY_RIGID, {"global_rigidity": verdict.as_dict()},
            )
            memo[key] = result
            return result

    # ── Rule 2 ──
    witness = separability_witness(g, d, *common)
    if witness is not None:
        e1, e2 = witness
        result = ReconstructibilityVerdict(
            Reconstructibility.NOT_FULLY, Rule.M_SEPARABLE,
            {"E1": [list(e) for e in e1], "E2": [list(e) for e in e2]},
        )
        memo[key] = result
        return result

    # ── Rule 3 ──
    if depth < opts.max_depth and g.m:
        candidates = list(decompositions) + [
            pair for pair in separator_decompositions(g) if pair not in decompositions
        ]
        logger.debug("depth %d: %d candidate decompositions for n=%d", depth, len(candidates), g.n)
        for v1, v2 in candidates:
            pieces = [induced_subgraph(g, v1), induced_subgraph(g, v2)]
            if any(p.n < d + 1 or not is_rigid(p, d, *common) for p in pieces):
                continue
            sub = []
            for piece in pieces:
                verdict = _classify(piece, opts, [], depth + 1, memo)
                if verdict.decision != Reconstructibility.FULLY:
                    break
                sub.append(verdict.as_dict())
            else:
                result = ReconstructibilityVerdict(
                    Reconstructibility.FULLY, Rule.GLUING,
                    {
                        "V1": sorted(v1),
                        "V2": sorted(v2),
                        "overlap": sorted(v1 & v2),
                        "pieces": sub,
                    },
                )
                memo[key] = result
                return result

    # Unknown depends on the remaining depth budget, so it is never memoised
    return ReconstructibilityVerdict(Reconstructibility.UNKNOWN)


def classify_reconstructibility(
    g: Graph,
    d: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    modulus: int = MODULUS,
    decompositions: Iterable[tuple[Iterable[int], Iterable[int]]] = (),
    global_trials: int = GLOBAL_TRIALS,
    max_depth: int = CLASSIFY_MAX_DEPTH,
) -> ReconstructibilityVerdict:
    """Decide full reconstructibility of g in C^d where a known rule applies."""
    if d < 2:
        raise GraphInputError(f"reconstructibility rules need d >= 2, got {d}")
    if has_isolated_vertices(g):
        raise GraphInputError("graph has isolated vertices; the rules assume none")
    checked = [check_decomposition(g, v1, v2) for v1, v2 in decompositions]
    opts = _Options(d, trials, seed, modulus, global_trials, max_depth)
    verdict = _classify(g, opts, checked, 0, {})
    logger.info(
        "reconstructibility of n=%d m=%d in d=%d: %s (%s)",
        g.n, g.m, d, verdict.decision.value, verdict.rule.value if verdict.rule else "no rule",
    )
    return verdict
