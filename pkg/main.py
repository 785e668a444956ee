"""
main.py - Entry point for the generic rigidity toolkit.

Subcommands:
- generate : write a named graph family as canonical graph JSON
- analyze  : run the requested checks on a graph file, emit a JSON report
- verify   : run theorem suites over deterministic corpora

Exit codes: 0 success, 1 a verified property was violated,
2 invalid input (graph file, family spec, flags), 3 engine failure.

Run:  python main.py analyze graph.json --dim 3 --checks all
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field

from errors import GraphInputError, RigidityError
from graphs.graph_core import Graph, VertexPartitionSpec, cone, glue
from graphs.generators import (
    complete_bipartite, complete_graph, cycle_graph, figure1_graph, figure2a_graph,
    figure2b_graph, glued_complete_pair, path_graph, ring_of_k5, wheel_graph,
)
from harness.verification_runner import SUITES, VerificationRunner, expand_suites
from rigidity.engine import analyze
from rigidity.global_rigidity import hendrickson_check, is_globally_rigid
from rigidity.reconstructibility import classify_reconstructibility
from settings import (
    DEFAULT_DIM, DEFAULT_MODULUS_NAME, DEFAULT_SEED, DEFAULT_TRIALS, GLOBAL_TRIALS, MODULI,
)
from utils.persistence import dumps_graph, load_graph, save_report, write_text

VERSION = "1.0.0"

logger = logging.getLogger(__name__)

CHECKS = ("rank", "rigid", "redundant", "bridges", "mconn", "hendrickson", "global", "classify")
FAMILIES = (
    "complete:n", "bipartite:a,b", "ring-of-k5:k", "figure1", "figure2a", "figure2b",
    "cone:<file>", "glue:<file>,<file>,<pairs>", "cycle:n", "path:n", "wheel:n", "glued-complete:d",
)

# report keys contributed by each matroid-level check
_MATROID_KEYS = {
    "rank": ("n", "m", "rank", "dof", "independent"),
    "rigid": ("rigid",),
    "redundant": ("redundantly_rigid",),
    "bridges": ("bridges",),
    "mconn": ("components", "m_connected", "witness"),
}


# ══════════════════════════════════════════════════════════
#  RUN CONFIGURATION
# ══════════════════════════════════════════════════════════

@dataclass
class RunConfig:
    """Everything one CLI invocation needs; validated on construction."""
    command: str
    input_path: str | None = None
    output_path: str | None = None
    dim: int = DEFAULT_DIM
    trials: int = DEFAULT_TRIALS
    global_trials: int = GLOBAL_TRIALS
    seed: int = DEFAULT_SEED
    modulus_name: str = DEFAULT_MODULUS_NAME
    checks: list[str] = field(default_factory=lambda: ["all"])
    family: str | None = None
    suites: list[str] = field(default_factory=lambda: ["all"])
    confirm: bool = False
    corpus_size: int | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise GraphInputError(f"--dim must be >= 1, got {self.dim}")
        if self.trials < 1 or self.global_trials < 1:
            raise GraphInputError("--trials and --global-trials must be >= 1")
        if self.seed < 0:
            raise GraphInputError(f"--seed must be non-negative, got {self.seed}")
        if self.modulus_name not in MODULI:
            raise GraphInputError(f"unknown modulus {self.modulus_name!r}")
        unknown = [c for c in self.checks if c != "all" and c not in CHECKS]
        if unknown:
            raise GraphInputError(f"unknown check(s): {', '.join(unknown)}")

    @property
    def modulus(self) -> int:
        return MODULI[self.modulus_name]

    @property
    def expanded_checks(self) -> list[str]:
        if "all" in self.checks:
            return list(CHECKS)
        return [c for c in CHECKS if c in self.checks]

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "dim": self.dim,
            "trials": self.trials,
            "global_trials": self.global_trials,
            "seed": self.seed,
            "modulus": self.modulus_name,
            "checks": self.expanded_checks if self.command == "analyze" else None,
        }


# ══════════════════════════════════════════════════════════
#  FAMILY SPECS
# ══════════════════════════════════════════════════════════

def _ints(text: str, count: int, family: str) -> list[int]:
    parts = text.split(",") if text else []
    if len(parts) != count:
        raise GraphInputError(f"family {family!r} takes {count} integer argument(s), got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphInputError(f"family {family!r} needs integer arguments, got {text!r}") from None


def _parse_pairs(text: str) -> VertexPartitionSpec:
    """Either a count k (identify i with i for i < k) or 'a-b+c-d+...'."""
    if text.isdigit():
        return VertexPartitionSpec.first_k(int(text))
    try:
        pairs = [tuple(int(x) for x in item.split("-")) for item in text.split("+") if item]
    except ValueError:
        raise GraphInputError(f"malformed pair list {text!r}") from None
    if any(len(p) != 2 for p in pairs):
        raise GraphInputError(f"malformed pair list {text!r}")
    return VertexPartitionSpec(tuple(pairs))


def parse_family(spec: str) -> Graph:
    """Build the graph named by a family spec such as 'ring-of-k5:6'."""
    name, _, arg = spec.partition(":")
    if name == "complete":
        return complete_graph(*_ints(arg, 1, name))
    if name == "bipartite":
        return complete_bipartite(*_ints(arg, 2, name))
    if name == "ring-of-k5":
        return ring_of_k5(*_ints(arg, 1, name))
    if name == "cycle":
        return cycle_graph(*_ints(arg, 1, name))
    if name == "path":
        return path_graph(*_ints(arg, 1, name))
    if name == "wheel":
        return wheel_graph(*_ints(arg, 1, name))
    if name == "glued-complete":
        return glued_complete_pair(*_ints(arg, 1, name))
    if name in ("figure1", "figure2a", "figure2b"):
        if arg:
            raise GraphInputError(f"family {name!r} takes no arguments")
        return {"figure1": figure1_graph, "figure2a": figure2a_graph, "figure2b": figure2b_graph}[name]()
    if name == "cone":
        if not arg:
            raise GraphInputError("family 'cone' needs a graph file")
        return cone(load_graph(arg))
    if name == "glue":
        parts = arg.rsplit(",", 2)
        if len(parts) != 3:
            raise GraphInputError("family 'glue' takes <file>,<file>,<pairs>")
        return glue(load_graph(parts[0]), load_graph(parts[1]), _parse_pairs(parts[2]))
    raise GraphInputError(f"unknown family {spec!r}; expected one of: {', '.join(FAMILIES)}")


# ══════════════════════════════════════════════════════════
#  COMMANDS
# ══════════════════════════════════════════════════════════

def build_report(g: Graph, config: RunConfig) -> dict:
    """Merged report of every requested check, deterministic in (g, config)."""
    d, seed, modulus = config.dim, config.seed, config.modulus
    checks = config.expanded_checks
    report: dict = {"version": VERSION, "config": config.as_dict(), "n": g.n, "m": g.m}

    if any(c in _MATROID_KEYS for c in checks):
        matroid = analyze(g, d, config.trials, seed, modulus).as_dict()
        for check in checks:
            for key in _MATROID_KEYS.get(check, ()):
                report[key] = matroid[key]
        report["seeds"] = matroid["seeds"]

    if "hendrickson" in checks:
        if g.n >= d + 2:
            report["hendrickson"] = hendrickson_check(g, d, config.trials, seed, modulus).as_dict()
        else:
            report["hendrickson"] = {"applicable": False, "reason": f"fewer than {d + 2} vertices"}

    if "global" in checks:
        verdict = is_globally_rigid(g, d, config.global_trials, seed, modulus, confirm=config.confirm)
        report["global"] = verdict.as_dict()

    if "classify" in checks:
        try:
            verdict = classify_reconstructibility(
                g, d, config.trials, seed, modulus, global_trials=config.global_trials,
            )
            report["classify"] = verdict.as_dict()
        except GraphInputError as exc:
            report["classify"] = {"decision": None, "rule": None, "error": str(exc)}
    return report


def cmd_generate(config: RunConfig) -> int:
    if not config.family:
        raise GraphInputError("generate needs a family spec")
    g = parse_family(config.family)
    write_text(dumps_graph(g), config.output_path)
    logger.info("Generated %s: n=%d m=%d", config.family, g.n, g.m)
    return 0


def cmd_analyze(config: RunConfig) -> int:
    if not config.input_path:
        raise GraphInputError("analyze needs a graph file")
    g = load_graph(config.input_path)
    logger.info("Analyzing %s (n=%d m=%d) in d=%d", config.input_path, g.n, g.m, config.dim)
    save_report(build_report(g, config), config.output_path)
    return 0


def cmd_verify(config: RunConfig) -> int:
    kwargs = {}
    if config.corpus_size is not None:
        kwargs["corpus_size"] = config.corpus_size
    runner = VerificationRunner(
        expand_suites(config.suites), config.dim, config.trials, config.seed, config.modulus, **kwargs,
    )
    runner.run()
    report = {"version": VERSION, "config": config.as_dict(), **runner.as_dict()}
    save_report(report, config.output_path)
    return 0 if runner.passed else 1


COMMANDS = {"generate": cmd_generate, "analyze": cmd_analyze, "verify": cmd_verify}


# ══════════════════════════════════════════════════════════
#  ARGUMENT PARSING
# ══════════════════════════════════════════════════════════

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", "-d", type=int, default=DEFAULT_DIM, help="Dimension d (default 3).")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                        help="Rank trials; the max over trials is kept (default 3).")
    common.add_argument("--global-trials", type=int, default=GLOBAL_TRIALS,
                        help="Stress-matrix trials for global rigidity (default 5).")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Run seed (default 0).")
    common.add_argument("--modulus", choices=sorted(MODULI), default=DEFAULT_MODULUS_NAME,
                        help="Prime field: m61 = 2^61-1, alt = 2^62-57.")
    common.add_argument("--output", "-o", default=None, help="Output file (default: standard output).")
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("--verbose", "-v", action="store_true", help="Debug logging.")
    noise.add_argument("--quiet", "-q", action="store_true", help="Warnings and errors only.")

    parser = argparse.ArgumentParser(description="Generic rigidity toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", parents=[common], help="Write a named graph family as JSON.")
    gen.add_argument("family", help="One of: " + ", ".join(FAMILIES))

    ana = sub.add_parser("analyze", parents=[common], help="Analyze a graph file.")
    ana.add_argument("input", help="Graph JSON file.")
    ana.add_argument("--checks", default="all",
                     help="Comma-separated subset of: " + ", ".join(CHECKS) + ", all.")
    ana.add_argument("--confirm", action="store_true",
                     help="Confirm a stress-test verdict under the second modulus.")

    ver = sub.add_parser("verify", parents=[common], help="Run theorem suites.")
    ver.add_argument("--suite", default="all",
                     help="Comma-separated subset of: " + ", ".join(SUITES) + ", all.")
    ver.add_argument("--corpus-size", type=int, default=None, help="Override the random corpus size.")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        output_path=args.output,
        dim=args.dim,
        trials=args.trials,
        global_trials=args.global_trials,
        seed=args.seed,
        modulus_name=args.modulus,
        checks=[c.strip() for c in getattr(args, "checks", "all").split(",") if c.strip()],
        family=getattr(args, "family", None),
        suites=[s.strip() for s in getattr(args, "suite", "all").split(",") if s.strip()],
        confirm=getattr(args, "confirm", False),
        corpus_size=getattr(args, "corpus_size", None),
    )


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        config = config_from_args(args)
        return COMMANDS[config.command](config)
    except GraphInputError as exc:
        logger.error("Invalid input: %s", exc)
        return 2
    except OSError as exc:
        logger.error("Cannot write output: %s", exc)
        return 2
    except RigidityError as exc:
        logger.error("Engine failure: %s", exc)
        return 3


# ── Run ───────────────────────────────────────────────────
if __name__ == "__main__":
    sys.exit(main())
