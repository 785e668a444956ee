"""
verification_runner.py – Batch execution of the theorem suites.

Runs the requested suites over deterministic corpora, collects their
PropertyResults and prints a per-suite summary table to stderr.

Usage (from CLI):
    python main.py verify --suite all --seed 0

Architecture:
    VerificationRunner builds each corpus once (lazily) and hands it to
    the verify_* functions of harness.theorems; no theorem logic lives
    here. Suite results keep corpus order, so a fixed seed always yields
    the same report.
"""

from __future__ import annotations

import logging
import sys
import time
from dataclasses import dataclass, field
from functools import cached_property

from errors import GraphInputError
from graphs.graph_core import Graph
from harness.corpus import CorpusConfig, gluing_pairs, oracle_corpus, random_corpus
from harness.theorems import (
    PropertyResult,
    verify_cone_circuit, verify_cone_mconnected, verify_dimension_monotonicity, verify_dof_bound,
    verify_gluing_rank, verify_hendrickson_necessity, verify_low_dimension_agreement,
    verify_mconnected_redundant, verify_mconnected_theorem, verify_motion_recursion,
    verify_oracle_circuits, verify_oracle_components,
)
from settings import (
    CORPUS_SIZE, DEFAULT_DIM, DEFAULT_SEED, DEFAULT_TRIALS, GLUING_PAIRS, HARNESS_WORKERS, MODULUS,
)
from utils.helpers import banner, format_table

logger = logging.getLogger(__name__)

SUITES = (
    "mconnected", "monotonicity", "cone", "dofbound", "motion",
    "gluing", "oracle", "hendrickson", "lowdim",
)


# ══════════════════════════════════════════════════════════
#  Per-suite result
# ══════════════════════════════════════════════════════════

@dataclass
class SuiteResult:
    """All property results of one suite."""
    name: str = ""
    results: list[PropertyResult] = field(default_factory=list)
    duration_sec: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "properties": [r.as_dict() for r in self.results],
        }


def expand_suites(names: list[str] | str) -> list[str]:
    """Resolve 'all' and validate suite names, keeping the canonical order."""
    requested = [names] if isinstance(names, str) else list(names)
    if "all" in requested:
        return list(SUITES)
    unknown = [s for s in requested if s not in SUITES]
    if unknown:
        raise GraphInputError(f"unknown suite(s): {', '.join(unknown)}")
    return [s for s in SUITES if s in requested]


# ══════════════════════════════════════════════════════════
#  Verification Runner
# ══════════════════════════════════════════════════════════

class VerificationRunner:
    """Run *suites* in dimension *dim* over corpora derived from *seed*.

    Parameters
    ----------
    suites : list of suite names, or "all"
    dim : int
        Dimension of the suites that take one (cone suites use 1..dim-1
        as base dimension, lowdim always uses 1 and 2).
    corpus_size, oracle_size, lowdim_size, gluing_size : int
        Corpus sizes; the defaults are the acceptance sizes.
    """

    def __init__(self, suites: list[str] | str = "all", dim: int = DEFAULT_DIM,
                 trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED, modulus: int = MODULUS,
                 corpus_size: int = CORPUS_SIZE, oracle_size: int = 60, lowdim_size: int = 100,
                 gluing_size: int = GLUING_PAIRS, workers: int = HARNESS_WORKERS,
                 summary: bool = True) -> None:
        if dim < 1:
            raise GraphInputError(f"dimension must be >= 1, got {dim}")
        self._suites = expand_suites(suites)
        self._dim = dim
        self._trials = trials
        self._seed = seed
        self._modulus = modulus
        self._corpus_size = corpus_size
        self._oracle_size = oracle_size
        self._lowdim_size = lowdim_size
        self._gluing_size = gluing_size
        self._workers = workers
        self._summary = summary
        self._results: list[SuiteResult] = []

    # ── Corpora ───────────────────────────────────────────

    @cached_property
    def corpus(self) -> list[Graph]:
        return random_corpus(CorpusConfig(size=self._corpus_size, seed=self._seed, dim=self._dim))

    @cached_property
    def small_corpus(self) -> list[Graph]:
        return oracle_corpus(self._seed, self._oracle_size)

    @cached_property
    def lowdim_corpus(self) -> list[Graph]:
        config = CorpusConfig(size=self._lowdim_size, seed=self._seed, dim=2, include_named=False)
        return random_corpus(config)

    # ── Public entry point ────────────────────────────────

    def run(self) -> list[SuiteResult]:
        """Execute every requested suite, then print and return results."""
        for name in self._suites:
            logger.info("=== Suite %s (d=%d, seed=%d) ===", name, self._dim, self._seed)
            start = time.monotonic()
            results = getattr(self, f"_suite_{name}")()
            suite = SuiteResult(name, results, time.monotonic() - start)
            self._results.append(suite)
            logger.info("Suite %s: %s in %.1fs", name, "pass" if suite.passed else "FAIL", suite.duration_sec)
        if self._summary:
            self._print_summary()
        return self._results

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self._results)

    def as_dict(self) -> dict:
        return {
            "dim": self._dim,
            "seed": self._seed,
            "trials": self._trials,
            "modulus": str(self._modulus),
            "passed": self.passed,
            "suites": [s.as_dict() for s in self._results],
        }

    # ── Suites ────────────────────────────────────────────

    def _opts(self) -> dict:
        return {"trials": self._trials, "seed": self._seed, "modulus": self._modulus}

    def _suite_mconnected(self) -> list[PropertyResult]:
        return [verify_mconnected_theorem(self.corpus, self._dim, workers=self._workers, **self._opts())]

    def _suite_monotonicity(self) -> list[PropertyResult]:
        return [verify_dimension_monotonicity(self.corpus, self._dim, workers=self._workers, **self._opts())]

    def _suite_cone(self) -> list[PropertyResult]:
        results = []
        for base in range(1, max(self._dim, 2)):
            results.append(verify_cone_circuit(self.corpus, base, workers=self._workers, **self._opts()))
            results.append(verify_cone_mconnected(self.corpus, base, workers=self._workers, **self._opts()))
        return results

    def _suite_dofbound(self) -> list[PropertyResult]:
        return [verify_dof_bound(self.corpus, self._dim, workers=self._workers, **self._opts())]

    def _suite_motion(self) -> list[PropertyResult]:
        return [verify_motion_recursion(self.corpus, max(self._dim, 3), workers=self._workers, **self._opts())]

    def _suite_gluing(self) -> list[PropertyResult]:
        return [verify_gluing_rank(gluing_pairs(self._seed, self._gluing_size), **self._opts())]

    def _suite_oracle(self) -> list[PropertyResult]:
        results = []
        for d in sorted({2, self._dim}):
            results.append(verify_oracle_components(self.small_corpus, d, workers=self._workers, **self._opts()))
            results.append(verify_oracle_circuits(self.small_corpus, d, workers=self._workers, **self._opts()))
        return results

    def _suite_hendrickson(self) -> list[PropertyResult]:
        return [verify_hendrickson_necessity(self.corpus, self._dim, workers=self._workers, **self._opts())]

    def _suite_lowdim(self) -> list[PropertyResult]:
        results = []
        for d in (1, 2):
            results.append(verify_low_dimension_agreement(self.lowdim_corpus, d, workers=self._workers, **self._opts()))
            results.append(verify_mconnected_redundant(self.lowdim_corpus, d, workers=self._workers, **self._opts()))
        return results

    # ── Summary printout ──────────────────────────────────

    def _print_summary(self) -> None:
        out = sys.stderr
        if not self._results:
            print("\nNo suites run.", file=out)
            return
        print("\n" + banner(f"Verification Results  ({len(self._results)} suites, seed {self._seed})"), file=out)
        rows = []
        for suite in self._results:
            for r in suite.results:
                dim = "all" if r.dim is None else f"d={r.dim}"
                rows.append([
                    f"{suite.name}/{r.name}", dim, r.tested, r.not_applicable,
                    len(r.violations), "pass" if r.passed else "FAIL",
                ])
        print(format_table(["Property", "Dim", "Tested", "N/A", "Viol", "Result"], rows), file=out)
        total = sum(s.duration_sec for s in self._results)
        print(f"\n  Total time : {total:.1f}s", file=out)
        print(f"  Overall    : {'pass' if self.passed else 'FAIL'}", file=out)
        print("=" * 58 + "\n", file=out)
