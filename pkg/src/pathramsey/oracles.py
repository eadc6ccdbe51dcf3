"""Exact decision procedures for monochromatic paths and matchings.

These are the slow, straightforward references. The search engine has its
own compiled incremental checks; every witness it returns is re-verified
here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Union

from .errors import InputError, ResourceError
from .graph import EdgeColoring, Graph, Path, Pattern, TargetSpec, color_class, color_name

BRUTEFORCE_MAX_VERTICES = 8


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _component(adj: tuple[int, ...], start: int, blocked: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= adj[v]
        grow &= ~seen & ~blocked
        seen |= grow
        frontier = grow
    return seen


def find_path(g: Graph, p: int) -> Optional[list[int]]:
    """Vertex sequence of some path on ``p`` vertices in ``g``, or None.

    Depth-first search from each start vertex (lowest degree first), cutting
    a branch as soon as the vertices still reachable from the current end
    cannot bring the path up to ``p``.
    """
    if p < 1:
        raise InputError(f"path order must be >= 1, got {p}")
    n = g.n
    if p == 1:
        return [0]
    if p > n:
        return None
    adj = g.adj
    path: list[int] = []

    def extend(end: int, used: int, length: int) -> bool:
        if length >= p:
            return True
        reach = _component(adj, end, used & ~(1 << end)).bit_count() - 1
        if length + reach < p:
            return False
        for w in _bits(adj[end] & ~used):
            path.append(w)
            if extend(w, used | 1 << w, length + 1):
                return True
            path.pop()
        return False

    for s in sorted(range(n), key=lambda v: (adj[v].bit_count(), v)):
        if adj[s] == 0:
            continue
        path[:] = [s]
        if extend(s, 1 << s, 1):
            return list(path)
    return None


def has_path_of_order(g: Graph, p: int) -> bool:
    return find_path(g, p) is not None


def longest_path(g: Graph) -> list[int]:
    """A longest path of ``g`` as a vertex sequence."""
    best = [0]
    for p in range(2, g.n + 1):
        found = find_path(g, p)
        if found is None:
            break
        best = found
    return best


def longest_path_order(g: Graph) -> int:
    """Number of vertices on a longest path (1 for an edgeless graph)."""
    return len(longest_path(g))


def longest_path_bruteforce(g: Graph) -> int:
    """Longest path order by trying every vertex ordering."""
    n = g.n
    if n > BRUTEFORCE_MAX_VERTICES:
        raise ResourceError(f"brute force limited to {BRUTEFORCE_MAX_VERTICES} vertices, got {n}")
    adj = g.adj
    best = 1
    for order in permutations(range(n)):
        run = 1
        for a, b in zip(order, order[1:]):
            if adj[a] >> b & 1:
                run += 1
                if run > best:
                    best = run
            else:
                run = 1
        if best == n:
            break
    return best


def max_matching(g: Graph) -> list[tuple[int, int]]:
    """A maximum matching, found by branching on the lowest non-isolated vertex
    (match it to one of its neighbours, or leave it unmatched)."""
    adj = g.adj
    best: list[tuple[int, int]] = []
    current: list[tuple[int, int]] = []

    def live(mask: int) -> int:
        out = 0
        for v in _bits(mask):
            if adj[v] & mask:
                out |= 1 << v
        return out

    def cover_bound(mask: int) -> int:
        # size of a greedy vertex cover; every cover bounds the matching number
        size = 0
        while mask:
            v = max(_bits(mask), key=lambda u: (adj[u] & mask).bit_count())
            mask = live(mask & ~(1 << v))
            size += 1
        return size

    def go(mask: int) -> None:
        nonlocal best
        mask = live(mask)
        if not mask:
            if len(current) > len(best):
                best = list(current)
            return
        room = len(best) - len(current)
        if mask.bit_count() // 2 <= room or cover_bound(mask) <= room:
            return
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        nbrs = adj[v] & rest
        for w in _bits(nbrs):
            current.append((v, w))
            go(rest & ~(1 << w))
            current.pop()
            if len(best) == g.n // 2:
                return
        # a degree-one vertex can always be matched to its neighbour
        if nbrs & (nbrs - 1):
            go(rest)

    go((1 << g.n) - 1)
    return best


def max_matching_size(g: Graph) -> int:
    return len(max_matching(g))


Embedding = Union[list[int], list[tuple[int, int]]]


@dataclass(frozen=True)
class ColorVerdict:
    color: int
    pattern: Pattern
    present: bool
    # vertex sequence for a path, edge list for a matching
    embedding: Optional[Embedding]


@dataclass(frozen=True)
class GoodnessReport:
    k: int
    verdicts: tuple[ColorVerdict, ...]

    @property
    def good(self) -> bool:
        return not any(v.present for v in self.verdicts)

    @property
    def violated(self) -> list[int]:
        return [v.color for v in self.verdicts if v.present]

    def lines(self) -> list[str]:
        out = []
        for v in self.verdicts:
            name = color_name(v.color, self.k)
            if v.present:
                out.append(f"color {v.color} ({name}): {v.pattern} PRESENT {v.embedding}")
            else:
                out.append(f"color {v.color} ({name}): {v.pattern} absent")
        out.append("GOOD" if self.good else "NOT-GOOD")
        return out


def find_pattern(g: Graph, pattern: Pattern) -> Optional[Embedding]:
    if isinstance(pattern, Path):
        return find_path(g, pattern.order)
    m = max_matching(g)
    if len(m) >= pattern.size:
        return m[: pattern.size]
    return None


def coloring_is_good(c: EdgeColoring, spec: TargetSpec) -> GoodnessReport:
    """Check every color class against its forbidden pattern."""
    if c.k != spec.k:
        raise InputError(f"coloring has {c.k} colors but the target spec has {spec.k}")
    verdicts = []
    for color, pattern in enumerate(spec):
        found = find_pattern(color_class(c, color), pattern)
        verdicts.append(ColorVerdict(color, pattern, found is not None, found))
    return GoodnessReport(c.k, tuple(verdicts))

