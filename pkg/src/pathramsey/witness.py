"""Plain-text witness files.

Three ASCII lines, each newline-terminated::

    n k
    <hostmask: C(n,2) chars of 1/0 in edge_index order, or '*' for K_n>
    <colors:   C(n,2) chars, one color digit per edge, '-' for non-edges>

A bare graph is stored as a one-color witness.
"""

from __future__ import annotations

from os import PathLike
from pathlib import Path as FsPath

from .errors import InputError
from .graph import MAX_VERTICES, EdgeColoring, Graph, edge_pairs, num_pairs


class WitnessFormatError(InputError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def dumps(coloring: EdgeColoring) -> str:
    if coloring.k > 10:
        raise InputError("witness format stores one digit per edge; k must be <= 10")
    host = coloring.host
    if host.is_complete():
        mask = "*"
    else:
        mask = "".join("1" if host.has_edge(i, j) else "0" for i, j in edge_pairs(host.n))
    colors = "".join("-" if c < 0 else str(c) for c in coloring.colors)
    return f"{coloring.n} {coloring.k}\n{mask}\n{colors}\n"


def graph_to_coloring(g: Graph) -> EdgeColoring:
    return EdgeColoring.from_function(g, 1, lambda i, j: 0)


def loads(text: str) -> EdgeColoring:
    try:
        text.encode("ascii")
    except UnicodeEncodeError as exc:
        line = text.count("\n", 0, exc.start) + 1
        col = exc.start - (text.rfind("\n", 0, exc.start) + 1) + 1
        raise WitnessFormatError("non-ASCII character", line, col) from None

    lines = text.split("\n")
    if not text.endswith("\n") or len(lines) < 4:
        raise WitnessFormatError(
            "file truncated; expected 3 newline-terminated lines", len(lines), len(lines[-1]) + 1
        )
    if len(lines) > 4:
        raise WitnessFormatError("unexpected content after line 3", 4, 1)

    header, mask, colors = lines[:3]
    parts = header.split(" ")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise WitnessFormatError("header must be 'n k' in decimal", 1, 1)
    n, k = int(parts[0]), int(parts[1])
    if not (1 <= n <= MAX_VERTICES):
        raise WitnessFormatError(f"n must be in 1..{MAX_VERTICES}", 1, 1)
    if not (1 <= k <= 10):
        raise WitnessFormatError("k must be in 1..10", 1, len(parts[0]) + 2)

    pairs = edge_pairs(n)
    m = num_pairs(n)
    if mask == "*":
        present = [True] * m
    else:
        if len(mask) != m:
            raise WitnessFormatError(f"hostmask has {len(mask)} characters, expected {m} or '*'", 2, min(len(mask), m) + 1)
        present = []
        for pos, ch in enumerate(mask):
            if ch not in "01":
                raise WitnessFormatError(f"hostmask character {ch!r} is not 0 or 1", 2, pos + 1)
            present.append(ch == "1")

    if len(colors) != m:
        raise WitnessFormatError(f"color line has {len(colors)} characters, expected {m}", 3, min(len(colors), m) + 1)
    values = []
    for pos, ch in enumerate(colors):
        if present[pos]:
            if not ch.isdigit() or int(ch) >= k:
                raise WitnessFormatError(f"edge {pairs[pos]} needs a color digit below {k}, got {ch!r}", 3, pos + 1)
            values.append(int(ch))
        else:
            if ch != "-":
                raise WitnessFormatError(f"non-edge {pairs[pos]} must be '-', got {ch!r}", 3, pos + 1)
            values.append(-1)

    host = Graph(n, [pr for pr, here in zip(pairs, present) if here])
    return EdgeColoring(host, k, values)


def write(coloring: EdgeColoring, path: str | PathLike[str]) -> None:
    FsPath(path).write_text(dumps(coloring), encoding="ascii")


def read(path: str | PathLike[str]) -> EdgeColoring:
    data = FsPath(path).read_bytes()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        col = exc.start - (data.rfind(b"\n", 0, exc.start) + 1) + 1
        raise WitnessFormatError("non-ASCII byte", line, col) from None
    return loads(text)
