"""Graphs, edge colorings and per-color target patterns.

Vertices are ``0..n-1``. Unordered pairs are ranked lexicographically
((0,1), (0,2), ..., (1,2), ...) by :func:`edge_index`; colorings store one
entry per pair in that order, ``-1`` marking pairs that are not host edges.

Color names: with three colors 0 is green,
1 red and 2 blue; with two colors 0 is red and 1 blue.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .errors import InputError

MAX_VERTICES = 32

COLOR_NAMES = {
    1: ("color0",),
    2: ("red", "blue"),
    3: ("green", "red", "blue"),
}


def color_name(color: int, k: int) -> str:
    names = COLOR_NAMES.get(k)
    if names is None:
        return f"color{color}"
    return names[color]


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(i: int, j: int, n: int) -> int:
    """Rank of the pair ``(i, j)``, ``i < j < n``, in lexicographic order."""
    if not (0 <= i < j < n):
        raise InputError(f"edge_index needs 0 <= i < j < n, got ({i}, {j}) with n={n}")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """All pairs of an n-vertex graph, listed in edge_index order."""
    return list(combinations(range(n), 2))


def _check_order(n: int) -> None:
    if not isinstance(n, int) or not (1 <= n <= MAX_VERTICES):
        raise InputError(f"vertex count must be in 1..{MAX_VERTICES}, got {n!r}")


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is held as one bitmask per vertex. Instances are immutable.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        _check_order(n)
        adj = [0] * n
        for e in edges:
            i, j = e
            if i == j:
                raise InputError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"edge {e} has an endpoint outside 0..{n - 1}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._n = n
        self._adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> Graph:
        n = len(adj)
        _check_order(n)
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row >> v & 1:
                raise InputError(f"bad adjacency row for vertex {v}")
            for u in range(n):
                if (row >> u & 1) != (adj[u] >> v & 1):
                    raise InputError("adjacency rows are not symmetric")
        g = cls.__new__(cls)
        g._n = n
        g._adj = tuple(adj)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in edge_pairs(self._n) if self._adj[i] >> j & 1]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self._adj[i] >> j & 1)

    def is_complete(self) -> bool:
        return self.edge_count == num_pairs(self._n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges})"


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph.from_adjacency([full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise InputError(f"vertex {v} out of range for a graph on {g.n} vertices")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v].bit_count()


def neighbors(g: Graph, v: int) -> set[int]:
    _check_vertex(g, v)
    row = g.adj[v]
    return {u for u in range(g.n) if row >> u & 1}


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)


def max_degree(g: Graph) -> int:
    return max(row.bit_count() for row in g.adj)


class EdgeColoring:
    """Assignment of one of ``k`` colors to every edge of ``host``."""

    __slots__ = ("_host", "_k", "_colors")

    def __init__(self, host: Graph, k: int, colors: Sequence[int]) -> None:
        if k < 1:
            raise InputError(f"number of colors must be >= 1, got {k}")
        n = host.n
        if len(colors) != num_pairs(n):
            raise InputError(f"expected {num_pairs(n)} color entries, got {len(colors)}")
        for (i, j), c in zip(edge_pairs(n), colors):
            if host.has_edge(i, j):
                if not (0 <= c < k):
                    raise InputError(f"edge ({i}, {j}) has color {c}, outside 0..{k - 1}")
            elif c != -1:
                raise InputError(f"non-edge ({i}, {j}) carries color {c}")
        self._host = host
        self._k = k
        self._colors = tuple(int(c) for c in colors)

    @classmethod
    def from_function(cls, host: Graph, k: int, fn: Callable[[int, int], int]) -> EdgeColoring:
        """Color each host edge ``(i, j)``, ``i < j``, with ``fn(i, j)``."""
        colors = [fn(i, j) if host.has_edge(i, j) else -1 for i, j in edge_pairs(host.n)]
        return cls(host, k, colors)

    @classmethod
    def complete(cls, n: int, k: int, colors: Sequence[int]) -> EdgeColoring:
        return cls(complete_graph(n), k, colors)

    @property
    def host(self) -> Graph:
        return self._host

    @property
    def n(self) -> int:
        return self._host.n

    @property
    def k(self) -> int:
        return self._k

    @property
    def colors(self) -> tuple[int, ...]:
        return self._colors

    def color_of(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        c = self._colors[edge_index(i, j, self.n)]
        if c < 0:
            raise InputError(f"({i}, {j}) is not a host edge")
        return c

    def lift(self, shift: int, k: int) -> EdgeColoring:
        """Same coloring with every color ``c`` renamed to ``c + shift``."""
        return self.recolor(range(shift, shift + self._k), k)

    def recolor(self, mapping: Sequence[int], k: Optional[int] = None) -> EdgeColoring:
        """Rename color ``c`` to ``mapping[c]``."""
        k = self._k if k is None else k
        return EdgeColoring(self._host, k, [mapping[c] if c >= 0 else -1 for c in self._colors])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (self._host, self._k, self._colors) == (other._host, other._k, other._colors)

    def __hash__(self) -> int:
        return hash((self._host, self._k, self._colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, k={self._k}, colors={''.join('-' if c < 0 else str(c) for c in self._colors)})"


def color_class(c: EdgeColoring, color: int) -> Graph:
    """Spanning subgraph of the host formed by the edges of one color."""
    if not (0 <= color < c.k):
        raise InputError(f"color {color} out of range for k={c.k}")
    pairs = edge_pairs(c.n)
    return Graph(c.n, [pairs[e] for e, col in enumerate(c.colors) if col == color])


def apply_vertex_permutation(c: EdgeColoring, perm: Sequence[int]) -> EdgeColoring:
    """Relabel vertex ``v`` as ``perm[v]``.

    Edge ``{i, j}`` of the result carries the color of
    ``{perm^-1(i), perm^-1(j)}``. The permutation must map host edges onto
    host edges.
    """
    n = c.n
    if sorted(perm) != list(range(n)):
        raise InputError(f"not a permutation of 0..{n - 1}: {list(perm)}")
    host = c.host
    colors = [-1] * num_pairs(n)
    for (i, j), col in zip(edge_pairs(n), c.colors):
        if col < 0:
            continue
        a, b = sorted((perm[i], perm[j]))
        if not host.has_edge(a, b):
            raise InputError(f"permutation maps edge ({i}, {j}) onto non-edge ({a}, {b})")
        colors[edge_index(a, b, n)] = col
    return EdgeColoring(host, c.k, colors)


@dataclass(frozen=True)
class Path:
    """Forbidden path on ``order`` vertices."""

    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise InputError(f"path order must be >= 1, got {self.order}")

    def __str__(self) -> str:
        return f"P{self.order}"


@dataclass(frozen=True)
class Matching:
    """Forbidden matching of ``size`` disjoint edges."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InputError(f"matching size must be >= 1, got {self.size}")

    def __str__(self) -> str:
        return f"{self.size}K2"


Pattern = Union[Path, Matching]

_PATH_RE = re.compile(r"P([0-9]+)")
_MATCHING_RE = re.compile(r"([0-9]+)K2")


def parse_pattern(text: str) -> Pattern:
    """Parse ``P<k>`` (path on k vertices) or ``<q>K2`` (q disjoint edges)."""
    m = _PATH_RE.fullmatch(text)
    if m:
        return Path(int(m.group(1)))
    m = _MATCHING_RE.fullmatch(text)
    if m:
        return Matching(int(m.group(1)))
    raise InputError(f"cannot parse target {text!r}; expected P<k> or <q>K2")


@dataclass(frozen=True)
class TargetSpec:
    """One forbidden pattern per color, in color order."""

    patterns: tuple[Pattern, ...]

    def __post_init__(self) -> None:
        if not self.patterns:
            raise InputError("a target spec needs at least one color")
        for p in self.patterns:
            if not isinstance(p, (Path, Matching)):
                raise InputError(f"not a pattern: {p!r}")

    @classmethod
    def of(cls, *patterns: Pattern | str) -> TargetSpec:
        return cls(tuple(parse_pattern(p) if isinstance(p, str) else p for p in patterns))

    @classmethod
    def parse(cls, text: str | Sequence[str]) -> TargetSpec:
        tokens = text.split() if isinstance(text, str) else list(text)
        return cls(tuple(parse_pattern(t) for t in tokens))

    @classmethod
    def paths(cls, *orders: int) -> TargetSpec:
        return cls(tuple(Path(p) for p in orders))

    @property
    def k(self) -> int:
        return len(self.patterns)

    def __iter__(self) -> Iterator[Pattern]:
        return iter(self.patterns)

    def __getitem__(self, color: int) -> Pattern:
        return self.patterns[color]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.patterns) + ")"
