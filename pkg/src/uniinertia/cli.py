"""Command-line front end.

Commands
--------
inertia FILE [--oracle]
    Print ``i+ i- i0 rank``; ``--oracle`` adds the congruence result and
    ``MATCH``/``MISMATCH``.
classify-cycle FILE
    Print ``k=<len> type=<A|B|C|D> W=<rat> [We=<rat> Wo=<rat>]``.
charpoly FILE [--oracle]
    Characteristic polynomial coefficients from elementary subgraphs.
census --order N (--rank R | --nullity Z) [--plot PNG]
    Unit-weight unicyclic graphs of order N with the given rank or nullity.
verify --order N --samples S --seed X [--plot PNG]
    Oracle, invariant and characterization sweep.

Every command accepts ``--json``. Exit codes: 0 ok, 1 verification
failure, 2 parse or usage error, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classify, verify
from .errors import InertiaError, NotACycleError, OrderTooLargeError
from .graph_model import Tag, WeightedGraph, classify_structure, format_rational, read_edge_list
from .inertia import charpoly_oracle, classify_cycle, cycle_weights_of, inertia, sachs_coefficients
from .linalg import Inertia, congruence_inertia

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_MISMATCH = 0, 1, 2, 3


def _load(path: str) -> WeightedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InertiaError(f"cannot read {path}: {exc.strerror}") from None
    return read_edge_list(text)


def _triple(i: Inertia) -> str:
    return f"{i.i_plus} {i.i_minus} {i.i_zero} {i.rank}"


def _triple_json(i: Inertia) -> dict:
    return {"i_plus": i.i_plus, "i_minus": i.i_minus, "i_zero": i.i_zero, "rank": i.rank}


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_inertia(args) -> int:
    G = _load(args.file)
    In = inertia(G)
    lines = [_triple(In)]
    payload = {"inertia": _triple_json(In)}
    if not args.oracle:
        _emit(args, lines, payload)
        return EXIT_OK
    ref = congruence_inertia(G.adjacency_matrix())
    match = ref == In
    lines += [f"oracle {_triple(ref)}", "MATCH" if match else "MISMATCH"]
    payload.update(oracle=_triple_json(ref), match=match)
    _emit(args, lines, payload)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_classify_cycle(args) -> int:
    G = _load(args.file)
    cls = classify_structure(G)
    if cls.tag is not Tag.UNICYCLIC or len(cls.cycle) != G.order:
        raise NotACycleError("input graph is not a single cycle")
    cw = cycle_weights_of(G, cls.cycle)
    t = classify_cycle(cw)
    line = f"k={cw.k} type={t.value} W={format_rational(cw.W)}"
    payload = {"k": cw.k, "type": t.value, "W": format_rational(cw.W), "cycle": list(cls.cycle)}
    if cw.k % 2 == 0:
        line += f" We={format_rational(cw.W_e)} Wo={format_rational(cw.W_o)}"
        payload.update(We=format_rational(cw.W_e), Wo=format_rational(cw.W_o))
    _emit(args, [line], payload)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    G = _load(args.file)
    poly = sachs_coefficients(G)
    lines = [str(poly), f"nullity={poly.nullity()}"]
    payload = {"coefficients": [format_rational(a) for a in poly.coefficients], "nullity": poly.nullity()}
    if not args.oracle:
        _emit(args, lines, payload)
        return EXIT_OK
    ref = charpoly_oracle(G)
    match = ref == poly
    lines += [f"oracle {ref}", "MATCH" if match else "MISMATCH"]
    payload.update(oracle=[format_rational(a) for a in ref.coefficients], match=match)
    _emit(args, lines, payload)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_census(args) -> int:
    if args.rank is not None:
        pred, criterion = classify.rank_filter(args.rank), f"rank={args.rank}"
    else:
        pred, criterion = classify.nullity_filter(args.nullity), f"nullity={args.nullity}"
    result = classify.census(args.order, pred, criterion)
    lines = []
    for rec in result.records:
        i = rec.inertia
        branches = ";".join(rec.branches) or "-"
        lines.append(
            f"{rec.canonical.edge_string()} girth={rec.girth} "
            f"inertia={i.i_plus},{i.i_minus},{i.i_zero} branches={branches}"
        )
    lines.append(f"count={result.count} order={args.order} {criterion} total={result.total}")
    payload = {
        "order": args.order,
        "criterion": criterion,
        "count": result.count,
        "total": result.total,
        "graphs": [
            {
                "edges": [list(e) for e in rec.canonical.edges],
                "girth": rec.girth,
                "inertia": _triple_json(rec.inertia),
                "branches": list(rec.branches),
            }
            for rec in result.records
        ],
    }
    if args.plot:
        from .report import plot_census

        payload["figure"] = str(plot_census(result, args.plot))
        lines.append(f"figure={payload['figure']}")
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.order > 9:
        raise OrderTooLargeError("verify supports --order up to 9")
    report = verify.run_verification(
        args.order, args.samples, args.seed, weighted_order=args.weighted_order
    )
    lines = report.lines()
    payload = report.to_json()
    if args.plot:
        from .report import plot_verification

        payload["figure"] = str(plot_verification(report, args.plot))
        lines.insert(-1, f"figure={payload['figure']}")
    _emit(args, lines, payload)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uniinertia", description="Exact inertia of weighted unicyclic graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("inertia", cmd_inertia, "inertia of a weighted graph")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="cross-check with congruence elimination")

    p = add("classify-cycle", cmd_classify_cycle, "Type A/B/C/D of a weighted cycle")
    p.add_argument("file")

    p = add("charpoly", cmd_charpoly, "characteristic polynomial via elementary subgraphs")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="cross-check with determinant interpolation")

    p = add("census", cmd_census, "census of unit-weight unicyclic graphs")
    p.add_argument("--order", type=int, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--rank", type=int)
    which.add_argument("--nullity", type=int)
    p.add_argument("--plot", metavar="PNG", help="write a girth histogram")

    p = add("verify", cmd_verify, "seeded oracle and characterization sweep")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--weighted-order", type=int, default=None, help="largest order given random weights (default: --order)")
    p.add_argument("--plot", metavar="PNG", help="write a pass/fail chart")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InertiaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
