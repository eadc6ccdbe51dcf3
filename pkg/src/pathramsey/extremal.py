"""Extremal numbers for paths: the Faudree-Schelp bound, closed forms for
ex(n, P4), ex(n, P5), ex(n, P6), an exhaustive reference, and the graphs that
attain the bound."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import InputError, ResourceError
from .graph import Graph, edge_pairs
from .oracles import has_path_of_order

BRUTEFORCE_MAX_VERTICES = 8


@dataclass(frozen=True)
class ExtremalParams:
    """Host order ``nv`` and forbidden path order ``p``.

    With ``n = p - 1`` the host splits as ``nv = n*t + r``, ``0 <= r < n``.
    """

    nv: int
    p: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise InputError(f"forbidden path order must be >= 2, got {self.p}")
        if self.nv < 1:
            raise InputError(f"host order must be >= 1, got {self.nv}")

    @property
    def n(self) -> int:
        return self.p - 1

    @property
    def t(self) -> int:
        return self.nv // self.n

    @property
    def r(self) -> int:
        return self.nv % self.n


def fs_bound(params: ExtremalParams) -> int:
    """Largest edge count of a graph on ``nv`` vertices with no path on ``p``
    vertices: ``t*C(n,2) + C(r,2)``."""
    return params.t * comb(params.n, 2) + comb(params.r, 2)


def ex_formula(nv: int, p: int) -> int:
    """Closed forms for ex(nv, P4), ex(nv, P5) and ex(nv, P6), ``nv >= 3``."""
    if p not in (4, 5, 6):
        raise InputError(f"closed form only known for p in (4, 5, 6), got {p}")
    if nv < 3:
        raise InputError(f"closed form stated for nv >= 3, got {nv}")
    if p == 4:
        return nv if nv % 3 == 0 else nv - 1
    if p == 5:
        rem = nv % 4
        if rem == 0:
            return 3 * nv // 2
        if rem == 2:
            return 3 * nv // 2 - 2
        return (3 * nv - 3) // 2
    rem = nv % 5
    if rem == 0:
        return 2 * nv
    if rem in (1, 4):
        return 2 * nv - 2
    return 2 * nv - 3


def ex_bruteforce(nv: int, p: int) -> tuple[int, Graph]:
    """Exhaustive ex(nv, Pp) with a maximizing graph.

    Walks labeled graphs edge by edge (include before exclude). A branch is
    dropped once it contains a path on ``p`` vertices, since every supergraph
    does too, or once it cannot beat the best count found so far.
    """
    if nv > BRUTEFORCE_MAX_VERTICES:
        raise ResourceError(f"exhaustive ex limited to {BRUTEFORCE_MAX_VERTICES} vertices, got {nv}")
    if nv < 1:
        raise InputError(f"host order must be >= 1, got {nv}")
    if p < 2:
        raise InputError(f"forbidden path order must be >= 2, got {p}")
    pairs = edge_pairs(nv)
    total = len(pairs)
    chosen: list[tuple[int, int]] = []
    best: list[tuple[int, int]] = []

    def go(pos: int) -> None:
        nonlocal best
        if len(chosen) + (total - pos) <= len(best):
            return
        if pos == total:
            best = list(chosen)
            return
        chosen.append(pairs[pos])
        if not has_path_of_order(Graph(nv, chosen), p):
            go(pos + 1)
        chosen.pop()
        go(pos + 1)

    go(0)
    return len(best), Graph(nv, best)


class Variant(enum.Enum):
    CLIQUES = "cliques"
    ODD_JOIN = "odd-join"


def extremal_graph(t: int, n: int, r: int, variant: Variant = Variant.CLIQUES, l: Optional[int] = None) -> Graph:
    """Graphs meeting the Faudree-Schelp bound with equality.

    ``CLIQUES``: ``t`` copies of ``K_n`` plus a ``K_r``.
    ``ODD_JOIN`` (``n`` odd, ``t > 0``, ``r = (n +- 1)/2``): ``l`` copies of
    ``K_n`` plus the join of ``K_{(n-1)/2}`` with an independent set on the
    remaining vertices.

    Blocks are laid out consecutively from vertex 0; in the join the clique
    part comes first.
    """
    if n < 1 or t < 0 or not (0 <= r < n):
        raise InputError(f"need n >= 1, t >= 0, 0 <= r < n; got t={t}, n={n}, r={r}")
    nv = n * t + r
    if nv < 1:
        raise InputError("graph would have no vertices")
    edges: list[tuple[int, int]] = []

    def clique(start: int, size: int) -> None:
        edges.extend((start + i, start + j) for i in range(size) for j in range(i + 1, size))

    if variant is Variant.CLIQUES:
        for b in range(t):
            clique(b * n, n)
        clique(n * t, r)
        return Graph(nv, edges)

    if n % 2 == 0 or t == 0 or 2 * r not in (n - 1, n + 1):
        raise InputError(f"odd-join variant needs n odd, t > 0, r = (n+-1)/2; got t={t}, n={n}, r={r}")
    if l is None or not (0 <= l < t):
        raise InputError(f"odd-join variant needs 0 <= l < t, got l={l}")
    for b in range(l):
        clique(b * n, n)
    start = l * n
    a = (n - 1) // 2
    clique(start, a)
    edges.extend((start + i, j) for i in range(a) for j in range(start + a, nv))
    return Graph(nv, edges)
