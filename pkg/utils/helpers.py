"""helpers.py - Plain-text formatting for summaries printed to stderr."""

from typing import Sequence


def format_table(headers: Sequence[str], rows: Sequence[Sequence[object]], indent: int = 4) -> str:
    """Left-align the first column, right-align the rest."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    pad = " " * indent
    lines = []
    for j, row in enumerate(cells):
        parts = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        lines.append(pad + "  ".join(parts))
        if j == 0:
            lines.append(pad + "-" * (sum(widths) + 2 * (len(widths) - 1)))
    return "\n".join(lines)


def banner(title: str, width: int = 58) -> str:
    rule = "=" * width
    return f"{rule}\n  {title}\n{rule}"
