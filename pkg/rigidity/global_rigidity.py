"""
global_rigidity.py – Stresses, stress matrices and global rigidity decisions.

A stress ω of a framework (G, p) is a vector in ker(R(G, p)^T). Its
stress matrix Ω has -ω_uv off the diagonal on edges and row sums zero.
For n >= d + 2, G is globally rigid in R^d iff a generic framework has
a stress whose matrix has rank n - d - 1; the randomized test below
samples framework and stress and looks for that rank.

A GloballyRigid verdict carries the seeds that produced the certificate,
so it can be replayed bit-exactly. A NotGloballyRigid verdict from the
stress test is one-sided Monte Carlo and records its error bound.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from errors import GraphInputError, HypothesisError, NoStressError, ProbabilisticRankError
from graphs.connectivity import vertex_connectivity
from graphs.graph_core import Graph, is_biconnected
from linalg.field import FieldMatrix, FieldVector, apply, kernel_basis, random_kernel_element, rank, transpose
from linalg.framework import Framework, sample_framework, trial_seeds
from rigidity.engine import is_redundantly_rigid, rigidity_matrix
from settings import DEFAULT_SEED, DEFAULT_TRIALS, GLOBAL_TRIALS, MODULUS, MODULUS_ALT, MODULUS_M61

logger = logging.getLogger(__name__)


# ══════════════════════════════════════════════════════════
#  Stresses
# ══════════════════════════════════════════════════════════

@dataclass(frozen=True)
class StressVector:
    """Per-edge stress in canonical edge order, with its framework provenance."""

    values: FieldVector
    dim: int
    seed: int
    modulus: int = MODULUS

    def is_zero(self) -> bool:
        return not any(self.values)

    def support(self) -> list[int]:
        return [i for i, w in enumerate(self.values) if w]


@dataclass(frozen=True)
class StressMatrix:
    matrix: FieldMatrix
    stress: StressVector

    def rank(self) -> int:
        return rank(self.matrix)


def _stress_of(fw: Framework, values: FieldVector) -> StressVector:
    return StressVector(tuple(values), fw.dim, fw.seed, fw.modulus)


def stress_space_basis(fw: Framework) -> list[StressVector]:
    """Basis of S(G, p) = ker(R(G, p)^T); one vector per dependent edge."""
    rt = transpose(rigidity_matrix(fw).matrix)
    return [_stress_of(fw, vec) for vec in kernel_basis(rt)]


def is_stress(fw: Framework, values: FieldVector) -> bool:
    if len(values) != fw.graph.m:
        return False
    rt = transpose(rigidity_matrix(fw).matrix)
    return not any(apply(rt, values))


def stress_matrix(fw: Framework, omega: StressVector) -> StressMatrix:
    """Ω with Ω[u][v] = -ω_uv on edges and Ω[v][v] = Σ_u ω_uv."""
    if not is_stress(fw, omega.values):
        raise GraphInputError("vector is not an equilibrium stress of the framework")
    p = fw.modulus
    rows = [[0] * fw.graph.n for _ in range(fw.graph.n)]
    for (u, v), w in zip(fw.graph.edges, omega.values):
        rows[u][v] = (rows[u][v] - w) % p
        rows[v][u] = (rows[v][u] - w) % p
        rows[u][u] = (rows[u][u] + w) % p
        rows[v][v] = (rows[v][v] + w) % p
    return StressMatrix(FieldMatrix.from_rows(rows, cols=fw.graph.n, modulus=p), omega)


def random_stress(fw: Framework, seed: int) -> StressVector:
    """Uniform random stress of fw; NoStressError on a trivial stress space."""
    rt = transpose(rigidity_matrix(fw).matrix)
    return _stress_of(fw, random_kernel_element(rt, seed))


# ══════════════════════════════════════════════════════════
#  Global rigidity
# ══════════════════════════════════════════════════════════

class Decision(str, Enum):
    GLOBALLY_RIGID = "GloballyRigid"
    NOT_GLOBALLY_RIGID = "NotGloballyRigid"
    TRIVIALLY_RIGID_SMALL = "TriviallyRigidSmall"


@dataclass(frozen=True)
class StressCertificate:
    """Seeds that replay a stress matrix of the target rank."""

    framework_seed: int
    stress_seed: int
    rank: int


@dataclass
class GlobalRigidityVerdict:
    graph: Graph
    dim: int
    decision: Decision
    certificate: StressCertificate | None = None
    trials_used: int = 0
    failure_probability_note: str = ""
    seed: int = DEFAULT_SEED
    modulus: int = MODULUS
    method: str = "stress"
    trial_ranks: list[int] = field(default_factory=list)
    confirmed: bool | None = None

    @property
    def globally_rigid(self) -> bool:
        return self.decision in (Decision.GLOBALLY_RIGID, Decision.TRIVIALLY_RIGID_SMALL)

    def as_dict(self) -> dict:
        cert = None
        if self.certificate is not None:
            cert = {
                "framework_seed": self.certificate.framework_seed,
                "stress_seed": self.certificate.stress_seed,
                "rank": self.certificate.rank,
            }
        return {
            "decision": self.decision.value,
            "globally_rigid": self.globally_rigid,
            "method": self.method,
            "certificate": cert,
            "trials_used": self.trials_used,
            "trial_ranks": list(self.trial_ranks),
            "failure_probability_note": self.failure_probability_note,
            "seed": self.seed,
            "modulus": str(self.modulus),
            "confirmed": self.confirmed,
        }


def _monte_carlo_note(g: Graph, d: int, trials: int, modulus: int) -> str:
    # degree of the rank-(n-d-1) minor in coordinates and stress coefficients
    degree = g.n * d * max(g.m, 1)
    return (
        f"one-sided Monte Carlo over GF({modulus}): a missed certificate has "
        f"probability <= ({degree}/{modulus})^{trials}; transfer from GF(p) to "
        f"characteristic zero is assumed"
    )


def stress_certificate(g: Graph, d: int, trials: int = GLOBAL_TRIALS, seed: int = DEFAULT_SEED,
                       modulus: int = MODULUS) -> GlobalRigidityVerdict:
    """Randomized stress-matrix rank test, in any dimension, for n >= d + 2."""
    if g.n < d + 2:
        raise HypothesisError(f"the stress test needs at least d+2 = {d + 2} vertices, got {g.n}")
    if trials < 1:
        raise GraphInputError(f"trials must be >= 1, got {trials}")
    target = g.n - d - 1
    note = _monte_carlo_note(g, d, trials, modulus)
    ranks: list[int] = []
    for child in trial_seeds(seed, trials):
        fw_seed, stress_seed = trial_seeds(child, 2)
        fw = sample_framework(g, d, fw_seed, modulus)
        try:
            omega = random_stress(fw, stress_seed)
        except NoStressError:
            # no stress at all: this framework carries no certificate
            ranks.append(0)
            continue
        r = stress_matrix(fw, omega).rank()
        ranks.append(r)
        logger.debug("stress matrix rank %d (target %d) for n=%d d=%d", r, target, g.n, d)
        if r == target:
            return GlobalRigidityVerdict(
                g, d, Decision.GLOBALLY_RIGID, StressCertificate(fw_seed, stress_seed, r),
                len(ranks), note, seed, modulus, "stress", ranks,
            )
    return GlobalRigidityVerdict(
        g, d, Decision.NOT_GLOBALLY_RIGID, None, len(ranks), note, seed, modulus, "stress", ranks,
    )


def replay_certificate(g: Graph, d: int, cert: StressCertificate, modulus: int = MODULUS) -> int:
    """Recompute the stress-matrix rank a certificate claims."""
    fw = sample_framework(g, d, cert.framework_seed, modulus)
    return stress_matrix(fw, random_stress(fw, cert.stress_seed)).rank()


def _other_modulus(modulus: int) -> int:
    return MODULUS_ALT if modulus == MODULUS_M61 else MODULUS_M61


def is_globally_rigid(g: Graph, d: int, trials: int = GLOBAL_TRIALS, seed: int = DEFAULT_SEED,
                      modulus: int = MODULUS, confirm: bool = False) -> GlobalRigidityVerdict:
    """Global rigidity of G in R^d.

    n <= d+1 is decided by completeness and d = 1 by 2-connectivity, both
    exactly; everything else goes through stress_certificate. With
    *confirm* a stress-test verdict is rerun under the other modulus and
    must agree.
    """
    if d < 1:
        raise GraphInputError(f"dimension must be >= 1, got {d}")
    if g.n <= d + 1:
        decision = Decision.TRIVIALLY_RIGID_SMALL if g.is_complete() else Decision.NOT_GLOBALLY_RIGID
        return GlobalRigidityVerdict(
            g, d, decision, None, 0, "exact: at most d+1 vertices, rigid iff complete",
            seed, modulus, "small",
        )
    if d == 1:
        decision = Decision.GLOBALLY_RIGID if is_biconnected(g) else Decision.NOT_GLOBALLY_RIGID
        return GlobalRigidityVerdict(
            g, d, decision, None, 0, "exact: 2-connectivity on the line", seed, modulus, "connectivity",
        )
    verdict = stress_certificate(g, d, trials, seed, modulus)
    if confirm:
        second = stress_certificate(g, d, trials, seed, _other_modulus(modulus))
        if second.decision != verdict.decision:
            logger.warning(
                "global rigidity verdicts disagree across moduli: %s vs %s",
                verdict.decision.value, second.decision.value,
            )
            raise ProbabilisticRankError("global rigidity verdict changed under the second modulus")
        verdict.confirmed = True
    return verdict


# ══════════════════════════════════════════════════════════
#  Hendrickson conditions and H-graphs
# ══════════════════════════════════════════════════════════

@dataclass(frozen=True)
class HendricksonReport:
    connectivity: int
    is_d_plus_1_connected: bool
    is_redundantly_rigid: bool

    @property
    def passes_hendrickson(self) -> bool:
        return self.is_d_plus_1_connected and self.is_redundantly_rigid

    def as_dict(self) -> dict:
        return {
            "connectivity": self.connectivity,
            "d_plus_1_connected": self.is_d_plus_1_connected,
            "redundantly_rigid": self.is_redundantly_rigid,
            "passes": self.passes_hendrickson,
        }


def hendrickson_check(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                      modulus: int = MODULUS) -> HendricksonReport:
    """(d+1)-connectivity (exact) and redundant rigidity (randomized)."""
    if g.n < d + 2:
        raise HypothesisError(
            f"Hendrickson's conditions assume at least d+2 = {d + 2} vertices, got {g.n}"
        )
    kappa = vertex_connectivity(g)
    return HendricksonReport(
        connectivity=kappa,
        is_d_plus_1_connected=kappa >= d + 1,
        is_redundantly_rigid=is_redundantly_rigid(g, d, trials, seed, modulus),
    )


def is_h_graph(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
               modulus: int = MODULUS, global_trials: int = GLOBAL_TRIALS) -> bool:
    """Satisfies Hendrickson's conditions without being globally rigid."""
    if not hendrickson_check(g, d, trials, seed, modulus).passes_hendrickson:
        return False
    verdict = is_globally_rigid(g, d, global_trials, seed, modulus)
    return verdict.decision == Decision.NOT_GLOBALLY_RIGID
