"""Explicit colorings giving lower bounds.

Two-color results use 0 = red, 1 = blue; three-color results use
0 = green, 1 = red, 2 = blue.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import InputError, ResourceError
from .graph import MAX_VERTICES, EdgeColoring, Graph, complete_graph, edge_pairs

RED2, BLUE2 = 0, 1
GREEN, RED, BLUE = 0, 1, 2


def _check_size(nv: int) -> None:
    if nv > MAX_VERTICES:
        raise ResourceError(f"construction needs {nv} vertices, limit is {MAX_VERTICES}")


def two_color_lower(n: int, m: int) -> EdgeColoring:
    """Red/blue coloring of ``K_{m + n//2 - 2}`` with no red ``P_n`` and no
    blue ``P_m``.

    Blue is a clique on the first ``m - 1`` vertices; every edge touching the
    remaining ``n//2 - 1`` vertices is red, so a red path alternates into
    that block and has at most ``2*(n//2 - 1) + 1 < n`` vertices.
    """
    if not (2 <= n <= m):
        raise InputError(f"need 2 <= n <= m, got n={n}, m={m}")
    nv = m + n // 2 - 2
    _check_size(nv)
    clique = m - 1
    return EdgeColoring.from_function(
        complete_graph(nv), 2, lambda i, j: BLUE2 if j < clique else RED2
    )


def three_color_lower(n: int, m: int) -> EdgeColoring:
    """:func:`two_color_lower` with an empty green class prepended; good for
    the targets ``(P3, Pn, Pm)``."""
    return two_color_lower(n, m).lift(1, 3)


def schelp_blocks(m: int, intra: Optional[Sequence[int]] = None) -> tuple[Graph, EdgeColoring]:
    """Four blocks ``A1..A4`` of size ``m`` on ``4m`` vertices.

    The host omits all A1-A2 and A3-A4 pairs. A1-A3 and A2-A4 edges are red,
    A1-A4 and A2-A3 edges are blue. Edges inside block ``i`` get color
    ``intra[i]`` (red for every block by default).
    """
    if m < 1:
        raise InputError(f"block size must be >= 1, got {m}")
    nv = 4 * m
    _check_size(nv)
    if intra is None:
        intra = (RED2,) * 4
    if len(intra) != 4 or any(c not in (RED2, BLUE2) for c in intra):
        raise InputError(f"intra must give a red/blue color per block, got {intra!r}")

    red_pairs = {frozenset((0, 2)), frozenset((1, 3))}
    blue_pairs = {frozenset((0, 3)), frozenset((1, 2))}
    missing = {frozenset((0, 1)), frozenset((2, 3))}

    host = Graph(nv, [(i, j) for i, j in edge_pairs(nv) if frozenset((i // m, j // m)) not in missing])

    def color(i: int, j: int) -> int:
        bi, bj = i // m, j // m
        if bi == bj:
            return intra[bi]
        pair = frozenset((bi, bj))
        if pair in red_pairs:
            return RED2
        assert pair in blue_pairs
        return BLUE2

    return host, EdgeColoring.from_function(host, 2, color)


def matching_lower(n: int, m: int) -> EdgeColoring:
    """Coloring of ``K_{2m + n - 2}`` with no green ``P3``, no red ``nK2`` and
    no blue ``mK2``.

    Red is the join of a clique on the first ``n - 1`` vertices with the
    other ``2m - 1`` vertices; blue is the clique on those ``2m - 1``.
    """
    if not (3 <= n <= m):
        raise InputError(f"need 3 <= n <= m, got n={n}, m={m}")
    nv = 2 * m + n - 2
    _check_size(nv)
    core = n - 1
    return EdgeColoring.from_function(complete_graph(nv), 3, lambda i, j: RED if i < core else BLUE)


def k4_factorization() -> EdgeColoring:
    """``K4`` split into its three perfect matchings, one per color; no color
    class contains a ``P3``."""
    classes = {(0, 1): 0, (2, 3): 0, (0, 2): 1, (1, 3): 1, (0, 3): 2, (1, 2): 2}
    return EdgeColoring.from_function(complete_graph(4), 3, lambda i, j: classes[(i, j)])
