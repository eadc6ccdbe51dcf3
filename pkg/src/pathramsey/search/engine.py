"""Exhaustive search for good k-edge-colorings of K_N.

Edges are colored in edge_index order, colors tried in increasing index.
Each assignment is checked only against the class that received the edge:
a ``P3`` target caps that class at degree one, longer paths and matchings
are searched for through the new edge.

Symmetry breaking keeps one representative per orbit, all of them
lexicographic-leader conditions for the same edge order:

* ``FIRST_EDGE``: interchangeable colors (same target) first appear in
  index order, and edge (0, 1) carries the smallest color used.
* ``VERTEX_ORBITS``: additionally, for every pair ``i < j`` the color row of
  ``i`` is lexicographically at most that of ``j``, ignoring columns ``i``
  and ``j``; this is exactly the leader condition for the transposition
  ``(i j)``.
"""

from __future__ import annotations

import enum
import multiprocessing as mp
import os
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ..errors import InputError
from ..graph import MAX_VERTICES, EdgeColoring, Path, TargetSpec, edge_pairs
from ..oracles import coloring_is_good
from . import _kernel as K

SLICE_NODES = 1 << 18


class SymmetryLevel(enum.IntEnum):
    NONE = 0
    FIRST_EDGE = 1
    VERTEX_ORBITS = 2

    @classmethod
    def parse(cls, text: str) -> SymmetryLevel:
        try:
            return cls[text.upper().replace("-", "_")]
        except KeyError:
            raise InputError(f"unknown symmetry level {text!r}") from None


class Verdict(enum.Enum):
    FOUND = "FOUND"
    EXHAUSTED = "EXHAUSTED"
    TIMEOUT = "TIMEOUT"


@dataclass(frozen=True)
class SearchConfig:
    time_limit: float = 300.0  # seconds per search; 0 means unlimited
    symmetry_level: SymmetryLevel = SymmetryLevel.VERTEX_ORBITS
    worker_partition: int = 1
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.time_limit < 0:
            raise InputError("time_limit must be >= 0")
        if self.worker_partition < 1:
            raise InputError("worker_partition must be >= 1")


@dataclass
class SearchStats:
    nodes: int = 0
    oracle_prunes: int = 0
    symmetry_prunes: int = 0
    seconds: float = 0.0

    def add(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.oracle_prunes += other.oracle_prunes
        self.symmetry_prunes += other.symmetry_prunes


@dataclass
class SearchOutcome:
    n: int
    spec: TargetSpec
    verdict: Verdict
    witness: Optional[EdgeColoring] = None
    stats: SearchStats = field(default_factory=SearchStats)

    def record(self) -> dict:
        """Flat stats record, one JSON line per search."""
        return {
            "n": self.n,
            "spec": str(self.spec),
            "verdict": self.verdict.value,
            "nodes": self.stats.nodes,
            "oracle_prunes": self.stats.oracle_prunes,
            "symmetry_prunes": self.stats.symmetry_prunes,
            "seconds": round(self.stats.seconds, 6),
        }


class _Problem:
    """Kernel arrays for one (N, spec, symmetry) search."""

    def __init__(self, n: int, spec: TargetSpec, sym: SymmetryLevel, n_edges: Optional[int] = None) -> None:
        pairs = edge_pairs(n)
        if n_edges is not None:
            pairs = pairs[:n_edges]
        k = spec.k
        self.n = n
        self.k = k
        self.sym = int(sym)
        self.ea = np.array([i for i, _ in pairs], dtype=np.int64)
        self.eb = np.array([j for _, j in pairs], dtype=np.int64)
        self.kind = np.array([K.KIND_PATH if isinstance(p, Path) else K.KIND_MATCHING for p in spec], dtype=np.int64)
        self.size = np.array([p.order if isinstance(p, Path) else p.size for p in spec], dtype=np.int64)
        self.color_prev = np.full(k, -1, dtype=np.int64)
        for c in range(k):
            for d in range(c - 1, -1, -1):
                if spec[d] == spec[c]:
                    self.color_prev[c] = d
                    break
        self.adj = np.zeros((k, n), dtype=np.int64)
        self.mat = np.full((n, n), -1, dtype=np.int8)
        self.cnt = np.zeros(k, dtype=np.int64)
        self.col = np.full(len(pairs), -1, dtype=np.int8)
        self.nextc = np.zeros(len(pairs) + 1, dtype=np.int8)
        self.state = np.zeros(K.STATE_SLOTS, dtype=np.int64)

    def fix_prefix(self, prefix: Sequence[int]) -> None:
        """Pin the first ``len(prefix)`` edges to the given colors."""
        for pos, c in enumerate(prefix):
            a, b = int(self.ea[pos]), int(self.eb[pos])
            self.adj[c, a] |= 1 << b
            self.adj[c, b] |= 1 << a
            self.mat[a, b] = self.mat[b, a] = c
            self.cnt[c] += 1
            self.col[pos] = c
        self.state[K.POS] = len(prefix)
        self.state[K.FLOOR] = len(prefix)

    def step(self, budget: int) -> int:
        return K.run(
            self.n, self.k, self.ea, self.eb, self.kind, self.size, self.color_prev, self.sym,
            self.adj, self.mat, self.cnt, self.col, self.nextc, self.state, budget,
        )

    def stats(self) -> SearchStats:
        s = self.state
        return SearchStats(int(s[K.NODES]), int(s[K.ORACLE_PRUNES]), int(s[K.SYMMETRY_PRUNES]))


def _deadline(time_limit: float) -> float:
    return time.monotonic() + time_limit if time_limit > 0 else float("inf")


def _drive(problem: _Problem, deadline: float, cancel=None) -> Verdict:
    while True:
        code = problem.step(SLICE_NODES)
        if code == K.FOUND:
            return Verdict.FOUND
        if code == K.EXHAUSTED:
            return Verdict.EXHAUSTED
        if time.monotonic() > deadline or (cancel is not None and cancel.is_set()):
            return Verdict.TIMEOUT


def _prefixes(n: int, spec: TargetSpec, sym: SymmetryLevel, wanted: int) -> tuple[list[tuple[int, ...]], SearchStats]:
    """Feasible colorings of the first d edges, in DFS order, for the
    smallest d giving at least ``wanted`` of them."""
    total = len(edge_pairs(n))
    spent = SearchStats()
    prefixes: list[tuple[int, ...]] = [()]
    for depth in range(1, total + 1):
        problem = _Problem(n, spec, sym, n_edges=depth)
        found = []
        while True:
            code = problem.step(1 << 62)
            if code != K.FOUND:
                break
            found.append(tuple(int(c) for c in problem.col))
            problem.state[K.RESUME] = 1
        spent.add(problem.stats())
        prefixes = found
        if len(found) >= wanted or not found:
            break
    return prefixes, spent


_cancel = None


def _init_worker(event) -> None:
    global _cancel
    _cancel = event


def _run_task(n: int, spec: TargetSpec, sym: int, prefix: tuple[int, ...], deadline: float):
    # time.monotonic is system-wide on the fork platforms used here
    problem = _Problem(n, spec, SymmetryLevel(sym))
    problem.fix_prefix(prefix)
    verdict = _drive(problem, deadline, _cancel)
    colors = tuple(int(c) for c in problem.col) if verdict is Verdict.FOUND else None
    return verdict, colors, problem.stats()


def _trivially_exhausted(spec: TargetSpec) -> bool:
    # every color class spans all N >= 1 vertices, so a P1 target is always hit
    return any(isinstance(p, Path) and p.order == 1 for p in spec)


def find_good_coloring(n: int, spec: TargetSpec, cfg: Optional[SearchConfig] = None) -> SearchOutcome:
    """Search for a coloring of ``K_n`` avoiding every color's target.

    Returns FOUND with a witness (re-verified by the reference oracles),
    EXHAUSTED when none exists, or TIMEOUT.
    """
    cfg = cfg or SearchConfig()
    if not isinstance(n, int) or not (1 <= n <= MAX_VERTICES):
        raise InputError(f"vertex count must be in 1..{MAX_VERTICES}, got {n!r}")
    if spec.k > 127:
        raise InputError("at most 127 colors supported")
    started = time.monotonic()
    deadline = _deadline(cfg.time_limit)

    if _trivially_exhausted(spec):
        outcome = SearchOutcome(n, spec, Verdict.EXHAUSTED)
    elif cfg.worker_partition == 1:
        problem = _Problem(n, spec, cfg.symmetry_level)
        verdict = _drive(problem, deadline)
        witness = None
        if verdict is Verdict.FOUND:
            witness = EdgeColoring.complete(n, spec.k, [int(c) for c in problem.col])
        outcome = SearchOutcome(n, spec, verdict, witness, problem.stats())
    else:
        outcome = _find_partitioned(n, spec, cfg, deadline)

    outcome.stats.seconds = time.monotonic() - started
    if outcome.witness is not None and not coloring_is_good(outcome.witness, spec).good:
        raise RuntimeError(f"search returned a witness that fails re-verification for {spec} on K{n}")
    return outcome


def _find_partitioned(n: int, spec: TargetSpec, cfg: SearchConfig, deadline: float) -> SearchOutcome:
    prefixes, stats = _prefixes(n, spec, cfg.symmetry_level, cfg.worker_partition)
    if not prefixes:
        return SearchOutcome(n, spec, Verdict.EXHAUSTED, None, stats)
    if len(prefixes[0]) == len(edge_pairs(n)):
        # the whole tree fit within the partition depth
        return SearchOutcome(n, spec, Verdict.FOUND, EdgeColoring.complete(n, spec.k, prefixes[0]), stats)

    ctx = mp.get_context("fork")
    cancel = ctx.Event()
    workers = max(1, min(cfg.worker_partition, os.cpu_count() or 1, len(prefixes)))
    results: dict[int, tuple] = {}
    with ProcessPoolExecutor(workers, mp_context=ctx, initializer=_init_worker, initargs=(cancel,)) as pool:
        futures = {
            pool.submit(_run_task, n, spec, int(cfg.symmetry_level), pre, deadline): idx
            for idx, pre in enumerate(prefixes)
        }
        pending = set(futures)
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                results[futures[fut]] = fut.result()
            if _settled(results, len(prefixes), cfg.deterministic):
                cancel.set()
                for fut in pending:
                    fut.cancel()
                break

    verdict, witness = Verdict.EXHAUSTED, None
    for _, _, s in results.values():
        stats.add(s)
    for idx in sorted(results):
        v, colors, _ = results[idx]
        if v is Verdict.FOUND:
            verdict, witness = v, EdgeColoring.complete(n, spec.k, list(colors))
            break
        if v is Verdict.TIMEOUT:
            verdict = Verdict.TIMEOUT
            if cfg.deterministic:
                break
    if verdict is Verdict.EXHAUSTED and len(results) < len(prefixes):
        verdict = Verdict.TIMEOUT
    return SearchOutcome(n, spec, verdict, witness, stats)


def _settled(results: dict[int, tuple], total: int, deterministic: bool) -> bool:
    found = [i for i, r in results.items() if r[0] is Verdict.FOUND]
    if not found:
        return len(results) == total
    if not deterministic:
        return True
    # the leftmost FOUND is final once every subtree left of it is finished
    first = min(found)
    return all(i in results for i in range(first))

