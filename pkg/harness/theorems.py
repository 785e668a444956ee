"""
theorems.py – Executable checks of rigidity theorems over graph corpora.

Every verify_* function returns a PropertyResult holding one record per
corpus instance. An instance is "pass", "violation", or "n/a" when the
theorem's hypotheses do not hold for it; n/a instances are recorded,
not dropped. Instances are checked in a thread pool and merged back
in corpus order.

Suites:
    mconnected    – globally rigid on >= d+2 vertices ⇒ M-connected
    monotonicity  – M-connected in R^d ⇒ M-connected in every R^d', d' < d
    cone          – G circuit in R^d ⇔ cone(G) circuit in R^{d+1};
                    cone(G) M-connected ⇔ G connected without bridges
    dofbound      – (d+1)-connected, redundantly rigid, M-separable ⇒
                    Σ dof(H_i) >= C(d+1, 2) over the M-components
    motion        – k_i >= 2k_{i+1} - k_{i+2} + 1 and its closed form
    gluing        – rank of two rigid graphs glued on k vertices
    hendrickson   – globally rigid ⇒ (d+1)-connected and redundantly rigid
    lowdim        – d <= 2: stress test ≡ exact characterisation,
                    M-connected ⇒ redundantly rigid
    oracle        – engine components and circuits ≡ brute-force oracles
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from errors import HypothesisError
from graphs.connectivity import is_k_connected, vertex_connectivity
from graphs.graph_core import (
    Graph, VertexPartitionSpec, cone, edge_subgraph, glue, has_isolated_vertices,
    is_biconnected, is_connected,
)
from harness.oracles import brute_circuits, brute_m_components
from rigidity.engine import (
    bridges, is_circuit, is_independent, is_m_connected, is_redundantly_rigid, is_rigid,
    m_components, rank_d, rigid_rank_target,
)
from rigidity.global_rigidity import Decision, hendrickson_check, is_globally_rigid, stress_certificate
from settings import (
    BRUTE_CIRCUITS_MAX_EDGES, DEFAULT_SEED, DEFAULT_TRIALS, GLOBAL_TRIALS, HARNESS_WORKERS, MODULUS,
    ORACLE_CORPUS_MAX_EDGES,
)
from utils.persistence import graph_to_dict

logger = logging.getLogger(__name__)

PASS, VIOLATION, NOT_APPLICABLE = "pass", "violation", "n/a"


# ══════════════════════════════════════════════════════════
#  Results
# ══════════════════════════════════════════════════════════

@dataclass
class InstanceRecord:
    index: int
    graph: Graph
    status: str
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "n": self.graph.n,
            "m": self.graph.m,
            "status": self.status,
            "details": self.details,
        }


@dataclass
class PropertyResult:
    """Outcome of one property over one corpus; passes iff no violations."""
    name: str
    corpus: str
    dim: int | None   # None when instances carry their own dimension
    seed: int
    records: list[InstanceRecord] = field(default_factory=list)

    @property
    def tested(self) -> int:
        return sum(1 for r in self.records if r.status != NOT_APPLICABLE)

    @property
    def not_applicable(self) -> int:
        return sum(1 for r in self.records if r.status == NOT_APPLICABLE)

    @property
    def violations(self) -> list[dict]:
        return [
            {"graph": graph_to_dict(r.graph), "details": r.details}
            for r in self.records if r.status == VIOLATION
        ]

    @property
    def passed(self) -> bool:
        return all(r.status != VIOLATION for r in self.records)

    def as_dict(self) -> dict:
        return {
            "property": self.name,
            "corpus": self.corpus,
            "dim": self.dim,
            "passed": self.passed,
            "instances": len(self.records),
            "tested": self.tested,
            "not_applicable": self.not_applicable,
            "violations": self.violations,
            "records": [r.as_dict() for r in self.records],
            "seeds": [self.seed],
        }


Outcome = tuple[str, dict]


def _evaluate(name: str, corpus: Sequence[Graph], dim: int | None, seed: int,
              check: Callable[[Graph], Outcome], corpus_name: str = "corpus",
              workers: int = HARNESS_WORKERS) -> PropertyResult:
    """Run *check* on every instance, merged back in corpus order."""
    if workers > 1 and len(corpus) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(check, corpus))
    else:
        outcomes = [check(g) for g in corpus]
    return _collect(name, corpus, dim, seed, outcomes, corpus_name)


def _collect(name: str, corpus: Sequence[Graph], dim: int | None, seed: int,
             outcomes: Sequence[Outcome], corpus_name: str) -> PropertyResult:
    result = PropertyResult(name, f"{corpus_name} ({len(corpus)} graphs)", dim, seed)
    for i, (g, (status, details)) in enumerate(zip(corpus, outcomes)):
        result.records.append(InstanceRecord(i, g, status, details))
        if status == VIOLATION:
            logger.warning("%s violated on instance %d (n=%d m=%d): %s", name, i, g.n, g.m, details)
    logger.info(
        "%s: %d tested, %d n/a, %d violations",
        name, result.tested, result.not_applicable, len(result.violations),
    )
    return result


def _verdict(ok: bool, details: dict | None = None) -> Outcome:
    return (PASS if ok else VIOLATION), (details or {})


# ══════════════════════════════════════════════════════════
#  Global rigidity and M-connectivity
# ══════════════════════════════════════════════════════════

def verify_mconnected_theorem(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                              seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                              workers: int = HARNESS_WORKERS) -> PropertyResult:
    """Globally rigid graphs on at least d+2 vertices are M-connected."""
    def check(g: Graph) -> Outcome:
        if g.n < d + 2:
            return NOT_APPLICABLE, {"reason": "fewer than d+2 vertices"}
        if g.m == 0:
            return NOT_APPLICABLE, {"reason": "no edges"}
        if not is_globally_rigid(g, d, GLOBAL_TRIALS, seed, modulus).globally_rigid:
            return NOT_APPLICABLE, {"reason": "not globally rigid"}
        return _verdict(is_m_connected(g, d, trials, seed, modulus))

    return _evaluate("mconnected", corpus, d, seed, check, workers=workers)


def verify_hendrickson_necessity(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                                 seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                                 workers: int = HARNESS_WORKERS) -> PropertyResult:
    """Globally rigid graphs on at least d+2 vertices satisfy Hendrickson's conditions."""
    def check(g: Graph) -> Outcome:
        if g.n < d + 2:
            return NOT_APPLICABLE, {"reason": "fewer than d+2 vertices"}
        if not is_globally_rigid(g, d, GLOBAL_TRIALS, seed, modulus).globally_rigid:
            return NOT_APPLICABLE, {"reason": "not globally rigid"}
        report = hendrickson_check(g, d, trials, seed, modulus)
        return _verdict(report.passes_hendrickson, report.as_dict())

    return _evaluate("hendrickson", corpus, d, seed, check, workers=workers)


def verify_dimension_monotonicity(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                                  seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                                  workers: int = HARNESS_WORKERS) -> PropertyResult:
    """M-connectivity in R^d descends to every lower dimension."""
    def check(g: Graph) -> Outcome:
        if g.m == 0 or not is_m_connected(g, d, trials, seed, modulus):
            return NOT_APPLICABLE, {"reason": f"not M-connected in R^{d}"}
        failed = [k for k in range(1, d) if not is_m_connected(g, k, trials, seed, modulus)]
        return _verdict(not failed, {"failed_dims": failed} if failed else None)

    return _evaluate("monotonicity", corpus, d, seed, check, workers=workers)


# ══════════════════════════════════════════════════════════
#  Coning
# ══════════════════════════════════════════════════════════

def verify_cone_circuit(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                        seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                        workers: int = HARNESS_WORKERS) -> PropertyResult:
    """G is a circuit in R^d iff cone(G) is a circuit in R^{d+1}."""
    def check(g: Graph) -> Outcome:
        if g.m == 0 or has_isolated_vertices(g):
            return NOT_APPLICABLE, {"reason": "isolated vertices or no edges"}
        base = is_circuit(g, d, trials, seed, modulus)
        coned = is_circuit(cone(g), d + 1, trials, seed, modulus)
        return _verdict(base == coned, {"circuit": base, "cone_circuit": coned})

    return _evaluate("cone-circuit", corpus, d, seed, check, workers=workers)


def verify_cone_mconnected(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                           seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                           workers: int = HARNESS_WORKERS) -> PropertyResult:
    """cone(G) is M-connected in R^{d+1} iff G is connected and bridgeless in R^d."""
    def check(g: Graph) -> Outcome:
        if g.n < 2:
            return NOT_APPLICABLE, {"reason": "fewer than 2 vertices"}
        lhs = is_m_connected(cone(g), d + 1, trials, seed, modulus)
        rhs = is_connected(g) and not bridges(g, d, trials, seed, modulus)
        return _verdict(lhs == rhs, {"cone_m_connected": lhs, "connected_bridgeless": rhs})

    return _evaluate("cone-mconnected", corpus, d, seed, check, workers=workers)


# ══════════════════════════════════════════════════════════
#  Degrees of freedom of M-components
# ══════════════════════════════════════════════════════════

def component_dofs(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                   modulus: int = MODULUS) -> list[int]:
    """d|V(H)| - C(d+1,2) - r_d(H) for every M-component H (edge-induced)."""
    dofs = []
    for cls in m_components(g, d, trials, seed, modulus):
        h = edge_subgraph(g, cls)
        dofs.append(rigid_rank_target(h.n, d) - rank_d(h, d, trials, seed, modulus))
    return dofs


def check_dof_bound(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                    modulus: int = MODULUS) -> Outcome:
    kappa = vertex_connectivity(g)
    if kappa < d + 1:
        return NOT_APPLICABLE, {"reason": "not (d+1)-connected", "connectivity": kappa}
    if not is_redundantly_rigid(g, d, trials, seed, modulus):
        return NOT_APPLICABLE, {"reason": "not redundantly rigid"}
    dofs = component_dofs(g, d, trials, seed, modulus)
    if len(dofs) < 2:
        return NOT_APPLICABLE, {"reason": "M-connected"}
    bound = comb(d + 1, 2)
    return _verdict(sum(dofs) >= bound, {"dofs": dofs, "sum": sum(dofs), "bound": bound})


def verify_dof_bound(g: Graph | Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                     seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                     workers: int = HARNESS_WORKERS) -> PropertyResult:
    """Sum of component dofs of a highly connected M-separable graph is >= C(d+1,2)."""
    graphs = [g] if isinstance(g, Graph) else list(g)
    return _evaluate(
        "dofbound", graphs, d, seed,
        lambda h: check_dof_bound(h, d, trials, seed, modulus), workers=workers,
    )


# ══════════════════════════════════════════════════════════
#  Infinitesimal motion dimensions
# ══════════════════════════════════════════════════════════

@dataclass(frozen=True)
class MotionDims:
    """k_i = n·i - r_i(G): infinitesimal motion space dimension in C^i."""
    dims: tuple[int, ...]

    def k(self, i: int) -> int:
        return self.dims[i - 1]


def motion_dims(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                modulus: int = MODULUS) -> MotionDims:
    return MotionDims(tuple(g.n * i - rank_d(g, i, trials, seed, modulus) for i in range(1, d + 1)))


def motion_violations(k: MotionDims, d: int) -> list[str]:
    """Failures of the three-term recursion and of its closed-form bound."""
    failures = []
    x = k.k(d) - comb(d + 1, 2)
    y = k.k(d - 1) - comb(d, 2)
    for i in range(1, d - 1):
        if k.k(i) < 2 * k.k(i + 1) - k.k(i + 2) + 1:
            failures.append(f"recursion fails at i={i}")
        if k.k(i) < comb(i + 1, 2) + (d - i) * (y - x) + x:
            failures.append(f"closed form fails at i={i}")
    return failures


def verify_motion_recursion(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                            seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                            workers: int = HARNESS_WORKERS) -> PropertyResult:
    if d < 3:
        raise HypothesisError(f"the motion recursion needs d >= 3, got {d}")

    def check(g: Graph) -> Outcome:
        if is_independent(g, d - 2, trials, seed, modulus):
            return NOT_APPLICABLE, {"reason": f"M-independent in R^{d - 2}"}
        k = motion_dims(g, d, trials, seed, modulus)
        failures = motion_violations(k, d)
        return _verdict(not failures, {"k": list(k.dims), "failures": failures} if failures else {"k": list(k.dims)})

    return _evaluate("motion", corpus, d, seed, check, workers=workers)


# ══════════════════════════════════════════════════════════
#  Gluing
# ══════════════════════════════════════════════════════════

def expected_glued_rank(n: int, d: int, k: int) -> int:
    """Rank of two rigid graphs glued along k < d vertex pairs."""
    return d * n - comb(d + 1, 2) - comb(d - k + 1, 2)


def check_gluing_rank(g1: Graph, g2: Graph, spec: VertexPartitionSpec, d: int,
                      trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                      modulus: int = MODULUS) -> tuple[Graph, Outcome]:
    glued = glue(g1, g2, spec)
    for part in (g1, g2):
        if part.n < d + 1 or not is_rigid(part, d, trials, seed, modulus):
            return glued, (NOT_APPLICABLE, {"reason": "a piece is not rigid on >= d+1 vertices"})
    k = spec.k
    if k >= d:
        return glued, _verdict(is_rigid(glued, d, trials, seed, modulus), {"k": k, "expect": "rigid"})
    expected = expected_glued_rank(glued.n, d, k)
    got = rank_d(glued, d, trials, seed, modulus)
    return glued, _verdict(got == expected, {"k": k, "rank": got, "expected": expected})


def verify_gluing_rank(cases, d: int | None = None, trials: int = DEFAULT_TRIALS,
                       seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                       workers: int = HARNESS_WORKERS) -> PropertyResult:
    """Cases are (g1, g2, spec, dim) tuples or objects with those attributes."""
    items = [
        (c.g1, c.g2, c.spec, c.dim) if hasattr(c, "g1") else tuple(c)
        for c in cases
    ]
    glued, outcomes = [], []
    for g1, g2, spec, dim in items:
        dim = dim if d is None else d
        g, (status, details) = check_gluing_rank(g1, g2, spec, dim, trials, seed, modulus)
        glued.append(g)
        outcomes.append((status, {**details, "dim": dim}))
    return _collect("gluing", glued, d, seed, outcomes, "glued pairs")


# ══════════════════════════════════════════════════════════
#  Low dimensions
# ══════════════════════════════════════════════════════════

def exact_globally_rigid(g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                         modulus: int = MODULUS) -> bool:
    """Combinatorial characterisation for d <= 2 (n >= d+2)."""
    if d == 1:
        return is_biconnected(g)
    if d == 2:
        return is_k_connected(g, 3) and is_redundantly_rigid(g, 2, trials, seed, modulus)
    raise HypothesisError(f"no combinatorial characterisation in dimension {d}")


def verify_low_dimension_agreement(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                                   seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                                   workers: int = HARNESS_WORKERS) -> PropertyResult:
    """The stress test agrees with the exact characterisation in R^1 and R^2."""
    def check(g: Graph) -> Outcome:
        if g.n < d + 2:
            return NOT_APPLICABLE, {"reason": "fewer than d+2 vertices"}
        stress = stress_certificate(g, d, GLOBAL_TRIALS, seed, modulus).decision == Decision.GLOBALLY_RIGID
        exact = exact_globally_rigid(g, d, trials, seed, modulus)
        return _verdict(stress == exact, {"stress": stress, "exact": exact})

    return _evaluate("lowdim-global", corpus, d, seed, check, workers=workers)


def verify_mconnected_redundant(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                                seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                                workers: int = HARNESS_WORKERS) -> PropertyResult:
    """For d <= 2, M-connected graphs without isolated vertices are redundantly rigid."""
    def check(g: Graph) -> Outcome:
        if g.m == 0 or has_isolated_vertices(g):
            return NOT_APPLICABLE, {"reason": "isolated vertices or no edges"}
        if not is_m_connected(g, d, trials, seed, modulus):
            return NOT_APPLICABLE, {"reason": "not M-connected"}
        return _verdict(is_redundantly_rigid(g, d, trials, seed, modulus))

    return _evaluate("lowdim-redundant", corpus, d, seed, check, workers=workers)


# ══════════════════════════════════════════════════════════
#  Brute-force oracle agreement
# ══════════════════════════════════════════════════════════

def verify_oracle_components(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                             seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                             workers: int = HARNESS_WORKERS,
                             max_edges: int = ORACLE_CORPUS_MAX_EDGES) -> PropertyResult:
    def check(g: Graph) -> Outcome:
        if g.m == 0 or g.m > max_edges:
            return NOT_APPLICABLE, {"reason": "edge count outside the oracle range"}
        engine = m_components(g, d, trials, seed, modulus)
        brute = brute_m_components(g, d, seed, modulus)
        return _verdict(engine == brute, {"engine": len(engine), "brute": len(brute)})

    return _evaluate("oracle-components", corpus, d, seed, check, workers=workers)


def verify_oracle_circuits(corpus: Sequence[Graph], d: int, trials: int = DEFAULT_TRIALS,
                           seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                           workers: int = HARNESS_WORKERS,
                           max_edges: int = BRUTE_CIRCUITS_MAX_EDGES) -> PropertyResult:
    """is_circuit matches brute-force circuit membership; circuits span >= d+2 vertices."""
    def check(g: Graph) -> Outcome:
        if g.m == 0 or g.m > max_edges:
            return NOT_APPLICABLE, {"reason": "edge count outside the oracle range"}
        circuits = brute_circuits(g, d, seed, modulus)
        problems = []
        whole = list(g.edges) in circuits
        if whole != is_circuit(g, d, trials, seed, modulus):
            problems.append("is_circuit disagrees with enumeration on the whole graph")
        for circ in circuits:
            sub = edge_subgraph(g, circ)
            if sub.n < d + 2:
                problems.append(f"circuit on {sub.n} vertices")
            if not is_circuit(sub, d, trials, seed, modulus):
                problems.append(f"enumerated circuit {circ} fails is_circuit")
        return _verdict(not problems, {"circuits": len(circuits), "problems": problems})

    return _evaluate("oracle-circuits", corpus, d, seed, check, workers=workers)
