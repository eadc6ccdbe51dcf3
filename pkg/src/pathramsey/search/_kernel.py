"""Compiled inner loop of the edge-coloring search.

Everything here works on plain numpy arrays so it can be jitted by numba.
The DFS is iterative and fully described by ``state``/``col``/``nextc``, which
lets the Python driver run it in node-budgeted slices and stop on a deadline.
"""

from __future__ import annotations

import numpy as np
from numba import njit

KIND_PATH = 0
KIND_MATCHING = 1

# state slots
POS = 0
FLOOR = 1
NODES = 2
ORACLE_PRUNES = 3
SYMMETRY_PRUNES = 4
RESUME = 5
STATE_SLOTS = 6

EXHAUSTED = 0
FOUND = 1
BUDGET = 2


@njit(inline="always")
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56 & 0xFF


@njit(inline="always")
def _lowest(x):
    return _popcount((x & -x) - 1)


@njit
def _component(adjc, start, forbidden):
    seen = np.int64(1) << start
    frontier = seen
    while frontier:
        grow = np.int64(0)
        f = frontier
        while f:
            v = _lowest(f)
            f &= f - 1
            grow |= adjc[v]
        grow &= ~seen & ~forbidden
        seen |= grow
        frontier = grow
    return seen


@njit
def _reach(adjc, end, used, need):
    # can a path ending at `end` be extended by `need` unused vertices?
    if need <= 0:
        return True
    nb = adjc[end] & ~used
    if nb == 0:
        return False
    if need > 1:
        comp = _component(adjc, end, used & ~(np.int64(1) << end))
        if _popcount(comp) - 1 < need:
            return False
    while nb:
        w = _lowest(nb)
        nb &= nb - 1
        if _reach(adjc, w, used | (np.int64(1) << w), need - 1):
            return True
    return False


@njit
def _side(adjc, end, used, length, b, p):
    # grow the `end` side one vertex at a time, testing the `b` side each time
    if _reach(adjc, b, used, p - length):
        return True
    nb = adjc[end] & ~used
    if nb == 0:
        return False
    reach = _component(adjc, end, used & ~(np.int64(1) << end))
    reach |= _component(adjc, b, used & ~(np.int64(1) << b))
    if length + _popcount(reach & ~used) < p:
        return False
    while nb:
        w = _lowest(nb)
        nb &= nb - 1
        if _side(adjc, w, used | (np.int64(1) << w), length + 1, b, p):
            return True
    return False


@njit
def path_through_edge(adjc, a, b, p):
    """True iff the graph ``adjc`` (already holding edge ab) has a path of
    order >= p that uses the edge ab."""
    if _popcount(_component(adjc, a, np.int64(0))) < p:
        return False
    used = (np.int64(1) << a) | (np.int64(1) << b)
    return _side(adjc, a, used, 2, b, p)


@njit
def matching_at_least(adjc, mask, need):
    """True iff the subgraph induced on ``mask`` has ``need`` disjoint edges."""
    if need <= 0:
        return True
    m = mask
    v = -1
    nb = np.int64(0)
    while m:
        u = _lowest(m)
        m &= m - 1
        nb = adjc[u] & mask & ~(np.int64(1) << u)
        if nb:
            v = u
            break
        mask &= ~(np.int64(1) << u)
    if v < 0 or _popcount(mask) < 2 * need:
        return False
    rest = mask & ~(np.int64(1) << v)
    while nb:
        w = _lowest(nb)
        nb &= nb - 1
        if matching_at_least(adjc, rest & ~(np.int64(1) << w), need - 1):
            return True
    return matching_at_least(adjc, rest, need)


@njit
def _lex_ok(mat, n, i, j):
    # row i must not exceed row j, columns i and j ignored
    for x in range(n):
        if x == i or x == j:
            continue
        ci = mat[i, x]
        cj = mat[j, x]
        if ci < 0 or cj < 0:
            return True
        if ci < cj:
            return True
        if ci > cj:
            return False
    return True


@njit
def _violates(adj, kind, size, c, a, b):
    # adj[c] already contains ab
    if kind[c] == KIND_PATH:
        p = size[c]
        if p <= 2:
            return True
        if p == 3:
            return (adj[c, a] & ~(np.int64(1) << b)) != 0 or (adj[c, b] & ~(np.int64(1) << a)) != 0
        return path_through_edge(adj[c], a, b, p)
    q = size[c]
    if q <= 1:
        return True
    n = adj.shape[1]
    full = (np.int64(1) << n) - 1
    rest = full & ~((np.int64(1) << a) | (np.int64(1) << b))
    return matching_at_least(adj[c], rest, q - 1)


@njit
def run(n, k, ea, eb, kind, size, color_prev, sym_level, adj, mat, cnt, col, nextc, state, budget):
    """Advance the DFS by at most ``budget`` expanded nodes.

    Returns FOUND (``col`` then holds a complete good coloring), EXHAUSTED
    (every completion of the fixed prefix ``col[:floor]`` was refuted) or
    BUDGET (call again to resume). Setting ``state[RESUME]`` after a FOUND
    continues the enumeration past that leaf.

    ``ea``/``eb`` may list only a prefix of the pairs of ``K_n``; leaves are
    then the feasible partial colorings of that prefix.
    """
    n_edges = ea.shape[0]
    pos = state[POS]
    floor = state[FLOOR]
    spent = 0
    while True:
        if pos == n_edges:
            if state[RESUME] == 0:
                state[POS] = pos
                return FOUND
            state[RESUME] = 0
            c = k
        else:
            c = nextc[pos]
        if c >= k:
            if pos < n_edges:
                nextc[pos] = 0
            pos -= 1
            if pos < floor:
                state[POS] = floor
                return EXHAUSTED
            a = ea[pos]
            b = eb[pos]
            old = col[pos]
            adj[old, a] &= ~(np.int64(1) << b)
            adj[old, b] &= ~(np.int64(1) << a)
            mat[a, b] = -1
            mat[b, a] = -1
            cnt[old] -= 1
            col[pos] = -1
            nextc[pos] = old + 1
            continue
        if spent >= budget:
            state[POS] = pos
            return BUDGET
        spent += 1
        state[NODES] += 1
        nextc[pos] = c + 1
        a = ea[pos]
        b = eb[pos]

        if sym_level >= 1:
            # interchangeable colors first appear in index order, and edge
            # (0, 1) carries the smallest color used anywhere
            if (color_prev[c] >= 0 and cnt[color_prev[c]] == 0) or (pos > 0 and c < col[0]):
                state[SYMMETRY_PRUNES] += 1
                continue

        mat[a, b] = c
        mat[b, a] = c
        if sym_level >= 2:
            ok = True
            for x in range(n):
                if x != a and x != b:
                    if not _lex_ok(mat, n, min(a, x), max(a, x)):
                        ok = False
                        break
                    if not _lex_ok(mat, n, min(b, x), max(b, x)):
                        ok = False
                        break
            if not ok:
                mat[a, b] = -1
                mat[b, a] = -1
                state[SYMMETRY_PRUNES] += 1
                continue

        adj[c, a] |= np.int64(1) << b
        adj[c, b] |= np.int64(1) << a
        if _violates(adj, kind, size, c, a, b):
            adj[c, a] &= ~(np.int64(1) << b)
            adj[c, b] &= ~(np.int64(1) << a)
            mat[a, b] = -1
            mat[b, a] = -1
            state[ORACLE_PRUNES] += 1
            continue

        cnt[c] += 1
        col[pos] = c
        pos += 1
        if pos < n_edges:
            nextc[pos] = 0
