"""Finite lemmas checked by plain enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from ..extremal import ex_bruteforce, ex_formula
from ..graph import EdgeColoring, Graph, TargetSpec
from ..oracles import coloring_is_good

RED, BLUE = 0, 1

# red must avoid P3, blue must avoid P7
K34_TARGETS = TargetSpec.paths(3, 7)


def k34_minus_edge() -> Graph:
    """``K_{3,4}`` on parts ``{0,1,2}`` and ``{3,4,5,6}`` without edge (0, 3)."""
    return Graph(7, [(x, y) for x in range(3) for y in range(3, 7) if (x, y) != (0, 3)])


@dataclass
class LemmaCheck:
    checked: int
    counterexamples: list[EdgeColoring] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def check_lemma_k34() -> LemmaCheck:
    """Every red/blue coloring of ``K_{3,4} - e`` has a red ``P3`` or a blue
    ``P7``: enumerate all ``2**11`` of them."""
    host = k34_minus_edge()
    edges = host.edges
    result = LemmaCheck(0)
    for assignment in product((RED, BLUE), repeat=len(edges)):
        color = dict(zip(edges, assignment))
        c = EdgeColoring.from_function(host, 2, lambda i, j: color[(i, j)])
        result.checked += 1
        if coloring_is_good(c, K34_TARGETS).good:
            result.counterexamples.append(c)
    return result


def verify_lemma_k34() -> bool:
    return check_lemma_k34().holds


@dataclass
class ExCheckRow:
    nv: int
    p: int
    formula: int
    bruteforce: int
    witness: Optional[Graph] = None

    @property
    def match(self) -> bool:
        return self.formula == self.bruteforce


def check_ex_corollary(max_nv: int = 8, orders: tuple[int, ...] = (4, 5, 6)) -> list[ExCheckRow]:
    """Compare the closed forms for ex(nv, Pp) with exhaustive maxima for
    ``3 <= nv <= max_nv``."""
    rows = []
    for p in orders:
        for nv in range(3, max_nv + 1):
            value, witness = ex_bruteforce(nv, p)
            rows.append(ExCheckRow(nv, p, ex_formula(nv, p), value, witness))
    return rows
