"""
persistence.py  –  Graph and report files.

Graph JSON is {"n": <int>, "edges": [[u, v], ...]}, written compact and
in canonical edge order so that generate → read → write is byte-stable.
Reports are indented JSON. Every file is UTF-8 and newline-terminated.
"""

import json
import logging
import sys

from errors import GraphInputError
from graphs.graph_core import Graph
from settings import ENCODING, REPORT_INDENT

logger = logging.getLogger(__name__)


# ==============================================================
#  Graph JSON
# ==============================================================

def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def graph_from_dict(data) -> Graph:
    """Validate and canonicalise a decoded graph document."""
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphInputError('graph JSON must be an object with "n" and "edges"')
    n, edges = data["n"], data["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphInputError(f'"n" must be a non-negative integer, got {n!r}')
    if not isinstance(edges, list):
        raise GraphInputError('"edges" must be a list of pairs')
    pairs = []
    for item in edges:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise GraphInputError(f"malformed edge entry {item!r}")
        pairs.append(item)
    return Graph.from_edges(n, pairs)


def dumps_graph(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), separators=(",", ":")) + "\n"


def loads_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"graph file is not valid JSON: {exc}") from exc
    return graph_from_dict(data)


def load_graph(path: str) -> Graph:
    """Read a graph file; unreadable or corrupt files raise GraphInputError."""
    try:
        with open(path, "r", encoding=ENCODING) as f:
            text = f.read()
    except OSError as exc:
        logger.error("Cannot read graph file %s: %s", path, exc)
        raise GraphInputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return loads_graph(text)


def save_graph(g: Graph, path: str) -> None:
    write_text(dumps_graph(g), path)
    logger.info("Wrote graph n=%d m=%d to %s", g.n, g.m, path)


# ==============================================================
#  Reports
# ==============================================================

def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=REPORT_INDENT) + "\n"


def write_text(text: str, path: str | None = None) -> None:
    """Write *text* to *path*, or to standard output when path is None or '-'."""
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding=ENCODING, newline="\n") as f:
        f.write(text)


def save_report(report: dict, path: str | None = None) -> None:
    write_text(dumps_report(report), path)
