"""Command-line front end.

Exit codes: 0 success, 1 verification or prediction mismatch, 2 input
error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import witness
from .constructions import matching_lower, schelp_blocks, three_color_lower, two_color_lower
from .errors import InputError, ResourceError
from .extremal import Variant, extremal_graph
from .graph import MAX_VERTICES, EdgeColoring, TargetSpec, color_class, color_name, min_degree
from .oracles import coloring_is_good, longest_path_order, max_matching_size

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _targets(tokens: Sequence[str]) -> TargetSpec:
    spec = TargetSpec.parse(tokens)
    if spec.k not in (2, 3):
        raise InputError(f"expected 2 or 3 color targets, got {spec.k}")
    return spec


def _config(args: argparse.Namespace):
    from .search import SearchConfig, SymmetryLevel

    return SearchConfig(
        time_limit=args.time_limit,
        symmetry_level=SymmetryLevel.parse(args.symmetry),
        worker_partition=args.workers,
    )


def _emit(args: argparse.Namespace, record: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(record))


def cmd_compute(args: argparse.Namespace) -> int:
    from .search import SearchTimeout, predicted_value, ramsey_number

    spec = _targets(args.targets)
    cfg = _config(args)
    pred = predicted_value(spec, conjectured=args.conjectured)
    print(f"targets {spec}")
    print(f"predicted {pred if pred is not None else 'none'}")
    try:
        res = ramsey_number(spec, cfg)
    except SearchTimeout as exc:
        for p in exc.probes:
            _emit(args, p.record())
        print(f"TIMEOUT on K{exc.n} after {len(exc.probes)} probe(s)")
        lw = exc.lower_witness
        if lw is not None:
            print(f"best lower bound: R > {lw.n}")
            if args.out:
                witness.write(lw, args.out)
                print(f"witness written to {args.out}")
        return EXIT_RESOURCE
    for p in res.probes:
        if args.stats:
            s = p.stats
            print(f"  K{p.n}: {p.verdict.value} nodes={s.nodes} oracle_prunes={s.oracle_prunes} "
                  f"symmetry_prunes={s.symmetry_prunes} seconds={s.seconds:.3f}")
        _emit(args, p.record())
    print(f"value {res.value}")
    if res.lower_witness is not None:
        print(f"witness on {res.lower_witness.n} vertices")
        if args.out:
            witness.write(res.lower_witness, args.out)
            print(f"witness written to {args.out}")
    if pred is not None and pred != res.value:
        print(f"MISMATCH: predicted {pred}, computed {res.value}")
        return EXIT_MISMATCH
    print("MATCH" if pred is not None else "no prediction")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    try:
        c = witness.read(args.file)
    except witness.WitnessFormatError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    spec = TargetSpec.parse(args.targets)
    report = coloring_is_good(c, spec)
    print(f"{args.file}: {c.n} vertices, {c.k} colors, targets {spec}")
    for line in report.lines():
        print(line)
    return EXIT_OK if report.good else EXIT_MISMATCH


def _describe(c: EdgeColoring) -> list[str]:
    out = [f"host: {c.n} vertices, {c.host.edge_count} edges, min degree {min_degree(c.host)}"]
    for color in range(c.k):
        g = color_class(c, color)
        out.append(
            f"color {color} ({color_name(color, c.k)}): {g.edge_count} edges, "
            f"matching number {max_matching_size(g)}, longest path order {longest_path_order(g)}"
        )
    return out


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "two-color":
        c = two_color_lower(args.n, args.m)
    elif kind == "three-color":
        c = three_color_lower(args.n, args.m)
    elif kind == "matching":
        c = matching_lower(args.n, args.m)
    elif kind == "schelp":
        _, c = schelp_blocks(args.m)
    else:
        variant = Variant(args.variant)
        g = extremal_graph(args.t, args.n, args.r, variant, args.l)
        c = witness.graph_to_coloring(g)
    print(f"construct {kind}")
    for line in _describe(c):
        print(line)
    if kind == "schelp":
        longest = max(longest_path_order(color_class(c, col)) for col in range(c.k))
        print(f"longest monochromatic path order {longest}")
    if args.out:
        witness.write(c, args.out)
        print(f"written to {args.out}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    from .search import Status, verify_table
    from .search.ramsey import resolved_specs

    if not (1 <= args.max <= MAX_VERTICES):
        raise InputError(f"--max must be in 1..{MAX_VERTICES}")
    args.time_limit = args.budget
    cfg = _config(args)
    rows = []
    header = f"{'spec':<16}{'predicted':>10}{'computed':>10}{'nodes':>12}{'seconds':>10}  status"
    if not args.json:
        print(header)
    for spec in resolved_specs(args.max):
        row = verify_table(args.max, cfg, specs=[spec])[0]
        rows.append(row)
        if args.json:
            print(json.dumps(row.record()), flush=True)
        else:
            computed = "-" if row.computed is None else str(row.computed)
            print(f"{str(row.spec):<16}{row.predicted:>10}{computed:>10}{row.nodes:>12}{row.seconds:>10.2f}  "
                  f"{row.status.value}", flush=True)
        if row.status is Status.MISMATCH:
            if row.diagnostic is not None and not args.json:
                print(f"  diagnostic coloring: {row.diagnostic}")
            break
    mismatches = sum(r.status is Status.MISMATCH for r in rows)
    timeouts = sum(r.status is Status.TIMEOUT for r in rows)
    if not args.json:
        print(f"{len(rows)} rows, {mismatches} mismatch, {timeouts} timeout")
    if mismatches:
        return EXIT_MISMATCH
    if timeouts and not args.allow_timeout:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_lemma(args: argparse.Namespace) -> int:
    from .search import check_ex_corollary, check_lemma_k34

    start = time.perf_counter()
    if args.name == "k34":
        res = check_lemma_k34()
        print(f"{res.checked} colorings checked, {len(res.counterexamples)} counterexamples")
        ok = res.holds
    elif args.name == "ex-corollary":
        rows = check_ex_corollary()
        for r in rows:
            print(f"ex({r.nv}, P{r.p}): formula {r.formula}, enumerated {r.bruteforce}  "
                  f"{'match' if r.match else 'MISMATCH'}")
        print(f"{len(rows)} cases compared")
        ok = all(r.match for r in rows)
    else:
        print(f"unknown lemma {args.name!r}; choose k34 or ex-corollary", file=sys.stderr)
        return EXIT_INPUT
    print(f"{'pass' if ok else 'FAIL'} ({time.perf_counter() - start:.2f}s)")
    return EXIT_OK if ok else EXIT_MISMATCH


def _search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--symmetry", default="vertex-orbits", choices=["none", "first-edge", "vertex-orbits"])
    p.add_argument("--workers", type=int, default=1, help="number of search partitions")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathramsey", description="Small multicolor path Ramsey numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a Ramsey number by exhaustive search")
    p.add_argument("targets", nargs="+", help="one pattern per color, e.g. P3 P6 P6 or P3 3K2 4K2")
    p.add_argument("--out", help="write the lower-bound witness here")
    p.add_argument("--stats", action="store_true", help="print per-probe search statistics")
    p.add_argument("--time-limit", type=float, default=300.0, help="seconds per search, 0 = unlimited")
    p.add_argument("--conjectured", action="store_true", help="also predict R(Pn,Pn,Pn)")
    p.add_argument("--json", action="store_true", help="emit one JSON stats record per probe")
    _search_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="verify a witness file against targets")
    p.add_argument("file")
    p.add_argument("targets", nargs="+")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build an explicit coloring or extremal graph")
    kinds = p.add_subparsers(dest="kind", required=True)
    for kind in ("two-color", "three-color", "matching"):
        q = kinds.add_parser(kind)
        q.add_argument("n", type=int)
        q.add_argument("m", type=int)
        q.add_argument("--out")
    q = kinds.add_parser("schelp")
    q.add_argument("m", type=int)
    q.add_argument("--out")
    q = kinds.add_parser("extremal")
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--variant", default="cliques", choices=[v.value for v in Variant])
    q.add_argument("--l", type=int, default=None)
    q.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="reproduce the table of resolved values")
    p.add_argument("--max", type=int, default=8, help="largest predicted value to include")
    p.add_argument("--budget", type=float, default=300.0, help="seconds per search")
    p.add_argument("--allow-timeout", action="store_true")
    p.add_argument("--json", action="store_true")
    _search_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("lemma", help="run a finite exhaustive check")
    p.add_argument("name", help="k34 or ex-corollary")
    p.set_defaults(func=cmd_lemma)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
