"""Ramsey numbers from the search engine, closed-form predictions and the
reproduction table."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from ..constructions import k4_factorization, matching_lower, three_color_lower, two_color_lower
from ..errors import InputError, ResourceError
from ..graph import MAX_VERTICES, EdgeColoring, Matching, Path, TargetSpec
from ..oracles import coloring_is_good
from .engine import SearchConfig, SearchOutcome, SearchStats, Verdict, find_good_coloring

TWO_COLOR = "two-color"
THREE_COLOR = "three-color"
MATCHING = "matching"
THREE_PATHS = "three-paths"

EXCEPTIONS = {(3, 3): 5, (3, 4): 5}


@dataclass(frozen=True)
class Family:
    """A spec recognised as one of the closed-form families.

    ``colors[c]`` is the spec's color playing canonical color ``c``; the
    canonical orders are ``(Pn, Pm)``, ``(P3, Pn, Pm)`` and
    ``(P3, nK2, mK2)`` with ``n <= m``.
    """

    name: str
    n: int
    m: int
    colors: tuple[int, ...]


def classify(spec: TargetSpec) -> Optional[Family]:
    pats = list(spec)
    idx = range(spec.k)
    if spec.k == 2 and all(isinstance(p, Path) for p in pats):
        a, b = sorted(idx, key=lambda c: (pats[c].order, c))
        if pats[a].order >= 2:
            return Family(TWO_COLOR, pats[a].order, pats[b].order, (a, b))
        return None
    if spec.k != 3:
        return None
    p3 = [c for c in idx if pats[c] == Path(3)]
    if not p3:
        if all(isinstance(p, Path) for p in pats) and len(set(pats)) == 1 and pats[0].order >= 2:
            return Family(THREE_PATHS, pats[0].order, pats[0].order, (0, 1, 2))
        return None
    g = p3[0]
    rest = [c for c in idx if c != g]
    if all(isinstance(pats[c], Path) for c in rest):
        a, b = sorted(rest, key=lambda c: (pats[c].order, c))
        if pats[a].order >= 3:
            return Family(THREE_COLOR, pats[a].order, pats[b].order, (g, a, b))
        return None
    if all(isinstance(pats[c], Matching) for c in rest):
        a, b = sorted(rest, key=lambda c: (pats[c].size, c))
        if pats[a].size >= 3:
            return Family(MATCHING, pats[a].size, pats[b].size, (g, a, b))
    return None


def predicted_value(spec: TargetSpec, conjectured: bool = False) -> Optional[int]:
    """Closed-form Ramsey number for the resolved families, else None.

    Resolved: ``R(Pn, Pm) = m + n//2 - 1`` (``2 <= n <= m``);
    ``R(P3, Pn, Pm) = m + n//2 - 1`` (``3 <= n <= m``) except
    ``R(P3, P3, P3) = R(P3, P3, P4) = 5``; ``R(P3, nK2, mK2) = 2m + n - 1``
    (``3 <= n <= m``). With ``conjectured`` also returns the conjectured
    ``R(Pn, Pn, Pn)`` (``2n - 1`` for odd n, ``2n - 2`` for even n).
    """
    fam = classify(spec)
    if fam is None:
        return None
    n, m = fam.n, fam.m
    if fam.name == TWO_COLOR:
        return m + n // 2 - 1
    if fam.name == THREE_COLOR:
        return EXCEPTIONS.get((n, m), m + n // 2 - 1)
    if fam.name == MATCHING:
        return 2 * m + n - 1
    if conjectured:
        return 2 * n - 1 if n % 2 else 2 * n - 2
    return None


def construction_for(spec: TargetSpec) -> Optional[EdgeColoring]:
    """The explicit good coloring on ``predicted_value(spec) - 1`` vertices,
    with colors arranged in the spec's order."""
    fam = classify(spec)
    if fam is None or fam.name == THREE_PATHS:
        return None
    if fam.name == TWO_COLOR:
        base = two_color_lower(fam.n, fam.m)
    elif fam.name == THREE_COLOR:
        base = k4_factorization() if (fam.n, fam.m) in EXCEPTIONS else three_color_lower(fam.n, fam.m)
    else:
        base = matching_lower(fam.n, fam.m)
    return base.recolor(fam.colors)


@dataclass
class RamseyResult:
    spec: TargetSpec
    value: int
    # good coloring of K_{value-1}; None when value == 1
    lower_witness: Optional[EdgeColoring]
    upper_stats: SearchStats
    probes: list[SearchOutcome] = field(default_factory=list)


class SearchTimeout(ResourceError):
    def __init__(self, spec: TargetSpec, n: int, probes: list[SearchOutcome]) -> None:
        super().__init__(f"search for {spec} timed out on K{n}")
        self.spec = spec
        self.n = n
        self.probes = probes

    @property
    def lower_witness(self) -> Optional[EdgeColoring]:
        found = [p for p in self.probes if p.verdict is Verdict.FOUND]
        return max(found, key=lambda p: p.n).witness if found else None


def ramsey_number(spec: TargetSpec, cfg: Optional[SearchConfig] = None, start: Optional[int] = None) -> RamseyResult:
    """Smallest N with no good coloring of ``K_N``.

    Probing starts one below the predicted value (2 without a prediction),
    descends while searches exhaust and ascends while they find witnesses.
    Raises :class:`SearchTimeout` if any probe times out.
    """
    cfg = cfg or SearchConfig()
    if start is None:
        pred = predicted_value(spec)
        start = pred - 1 if pred is not None else 2
    n = max(1, min(start, MAX_VERTICES))
    probes: list[SearchOutcome] = []

    def probe(size: int) -> SearchOutcome:
        out = find_good_coloring(size, spec, cfg)
        probes.append(out)
        if out.verdict is Verdict.TIMEOUT:
            raise SearchTimeout(spec, size, probes)
        return out

    out = probe(n)
    if out.verdict is Verdict.EXHAUSTED:
        upper = out
        while n > 1:
            below = probe(n - 1)
            if below.verdict is Verdict.FOUND:
                return RamseyResult(spec, n, below.witness, upper.stats, probes)
            n -= 1
            upper = below
        return RamseyResult(spec, 1, None, upper.stats, probes)

    lower = out
    while True:
        if n + 1 > MAX_VERTICES:
            raise ResourceError(f"{spec} has good colorings up to K{MAX_VERTICES}")
        n += 1
        out = probe(n)
        if out.verdict is Verdict.EXHAUSTED:
            return RamseyResult(spec, n, lower.witness, out.stats, probes)
        lower = out


class Status(enum.Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    TIMEOUT = "TIMEOUT"


@dataclass
class TableRow:
    spec: TargetSpec
    predicted: int
    computed: Optional[int]
    status: Status
    nodes: int
    seconds: float
    # on MISMATCH: a good coloring contradicting one of the two values
    diagnostic: Optional[EdgeColoring] = None

    def record(self) -> dict:
        return {
            "spec": str(self.spec),
            "predicted": self.predicted,
            "computed": self.computed,
            "nodes": self.nodes,
            "seconds": round(self.seconds, 3),
            "status": self.status.value,
        }


def resolved_specs(max_vertices: int) -> list[TargetSpec]:
    """Every spec of the resolved families whose predicted value is at most
    ``max_vertices``, grouped by family."""
    specs = []
    for n in range(2, max_vertices + 1):
        for m in range(n, max_vertices + 1):
            if m + n // 2 - 1 <= max_vertices:
                specs.append(TargetSpec.paths(n, m))
    for n in range(3, max_vertices + 1):
        for m in range(n, max_vertices + 1):
            spec = TargetSpec.paths(3, n, m)
            if predicted_value(spec) <= max_vertices:
                specs.append(spec)
    for n in range(3, max_vertices + 1):
        for m in range(n, max_vertices + 1):
            if 2 * m + n - 1 <= max_vertices:
                specs.append(TargetSpec((Path(3), Matching(n), Matching(m))))
    return specs


def verify_table(max_vertices: int, cfg: Optional[SearchConfig] = None, specs: Optional[list[TargetSpec]] = None) -> list[TableRow]:
    """Compute each resolved value and compare with the prediction.

    Stops at the first MISMATCH; that row carries a diagnostic coloring.
    """
    if not (1 <= max_vertices <= MAX_VERTICES):
        raise InputError(f"max_vertices must be in 1..{MAX_VERTICES}")
    cfg = cfg or SearchConfig()
    rows = []
    for spec in specs if specs is not None else resolved_specs(max_vertices):
        pred = predicted_value(spec)
        try:
            res = ramsey_number(spec, cfg)
        except SearchTimeout as exc:
            nodes = sum(p.stats.nodes for p in exc.probes)
            secs = sum(p.stats.seconds for p in exc.probes)
            rows.append(TableRow(spec, pred, None, Status.TIMEOUT, nodes, secs))
            continue
        nodes = sum(p.stats.nodes for p in res.probes)
        secs = sum(p.stats.seconds for p in res.probes)
        if res.value == pred:
            rows.append(TableRow(spec, pred, res.value, Status.MATCH, nodes, secs))
            continue
        if res.value < pred:
            diag = construction_for(spec)
        else:
            diag = res.lower_witness
        rows.append(TableRow(spec, pred, res.value, Status.MISMATCH, nodes, secs, diag))
        break
    return rows


def check_result(res: RamseyResult, cfg: Optional[SearchConfig] = None) -> bool:
    """Re-derive a result: witness good at ``value - 1`` and a fresh search
    exhausted at ``value``."""
    if res.value > 1:
        if res.lower_witness is None or res.lower_witness.n != res.value - 1:
            return False
        if not coloring_is_good(res.lower_witness, res.spec).good:
            return False
    return find_good_coloring(res.value, res.spec, cfg).verdict is Verdict.EXHAUSTED
