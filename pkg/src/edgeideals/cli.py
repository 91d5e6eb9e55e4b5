"""Command-line front end.

JSON goes to stdout, logs to stderr.  Exit status: 0 success, 1 a
verification failed, 2 usage error, 3 cost-gate rejection.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import graphs as gr
from .betti import (CostExceeded, betti_hochster, betti_koszul, graded_betti,
                    ideal_regularity, invariant_report)
from .graphs import Graph, GraphError
from .ideals import IdealError, MonomialIdeal, edge_ideal, power, symbolic_power
from .linalg import GF2, QQ
from .suite import (DEPTH_TARGETS, MULT_TARGETS, SWEEP_CHECKS, SUITES, construct_depth_pair,
                    construct_mult_pair, construct_reg_dim, sweep_small_graphs, run_suite)

log = logging.getLogger("edgeideals")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COST = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _load(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON ({exc})") from None


def _load_graph(path: str) -> Graph:
    return Graph.from_json(_load(path))


def _fields(name: str):
    return {"q": (QQ,), "f2": (GF2,), "both": (QQ, GF2)}[name]


def cmd_gen(args) -> int:
    if args.family == "construct":
        if len(args.params) < 1:
            raise UsageError("gen construct needs a kind: reg_dim, mult_pair or depth_pair")
        kind, rest = args.params[0], args.params[1:]
        if kind == "reg_dim":
            g, res = construct_reg_dim(*_ints(rest, 2))
        elif kind == "mult_pair":
            if len(rest) != 3:
                raise UsageError(f"gen construct mult_pair <e> <{'|'.join(MULT_TARGETS)}> <value>")
            g, res = construct_mult_pair(int(rest[0]), rest[1], int(rest[2]))
        elif kind == "depth_pair":
            if len(rest) != 3:
                raise UsageError(f"gen construct depth_pair <depth> <{'|'.join(DEPTH_TARGETS)}> <value>")
            g, res = construct_depth_pair(int(rest[0]), rest[1], int(rest[2]))
        else:
            raise UsageError(f"unknown construction {kind!r}")
        _emit({"graph": g.to_json(), "verification": res.to_json()})
        return EXIT_OK if res.passed else EXIT_FAIL
    _emit(gr.family(args.family, *_ints(args.params)).to_json())
    return EXIT_OK


def _ints(values, count=None):
    if count is not None and len(values) != count:
        raise UsageError(f"expected {count} integer parameters, got {len(values)}")
    try:
        return [int(v) for v in values]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_invariants(args) -> int:
    g = _load_graph(args.graph)
    rep = invariant_report(g, _fields(args.field))
    if not rep.field_agreement:
        log.warning("field disagreement: %s", rep.fields)
    _emit(rep.to_json())
    return EXIT_OK


def cmd_betti(args) -> int:
    data = _load(args.input)
    field = _fields(args.field)[0]
    if "edges" in data:
        g = Graph.from_json(data)
        ideal, graph = edge_ideal(g), g
    else:
        ideal, graph = MonomialIdeal.from_json(data), None
    tables = {}
    if args.algorithm in ("hochster", "both"):
        if graph is None:
            if not ideal.is_squarefree or any(sum(m) != 2 for m in ideal.gens):
                raise UsageError("hochster route needs a graph (or a quadratic squarefree ideal)")
            graph = gr.make_graph(ideal.n, [[i for i, e in enumerate(m) if e] for m in ideal.gens])
        tables["hochster"] = betti_hochster(graph, field) if args.multigraded else graded_betti(graph, field)
    if args.algorithm in ("koszul", "both"):
        tables["koszul"] = betti_koszul(ideal, field, gate=args.gate)
    out = {name: t.to_json() for name, t in tables.items()}
    if args.algorithm == "both":
        agree = tables["hochster"].graded == tables["koszul"].graded
        out["agree"] = agree
        _emit(out)
        return EXIT_OK if agree else EXIT_FAIL
    _emit(out[args.algorithm])
    return EXIT_OK


def cmd_sympow(args) -> int:
    g = _load_graph(args.graph)
    sym = symbolic_power(g, args.s)
    out = {"ideal": sym.to_json(), "reg_symbolic": ideal_regularity(sym, gate=args.gate)}
    if args.compare_ordinary:
        out["reg_ordinary"] = ideal_regularity(power(edge_ideal(g), args.s), gate=args.gate)
        out["equal"] = out["reg_ordinary"] == out["reg_symbolic"]
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = run_suite(args.suite)
    _emit(rep.to_json())
    log.info("summary: %s", rep.summary)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_sweep(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    field = GF2 if args.field == "f2" else QQ
    rep = sweep_small_graphs(args.n, checks, field)
    _emit(rep.to_json())
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edgeideals", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="emit a graph from a family or a construction")
    s.add_argument("family", choices=sorted(gr.FAMILIES) + ["construct"])
    s.add_argument("params", nargs="*")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("invariants", help="invariant report for a graph")
    s.add_argument("graph")
    s.add_argument("--field", choices=["q", "f2", "both"], default="both")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("betti", help="Betti table of a graph or monomial ideal")
    s.add_argument("input")
    s.add_argument("--algorithm", choices=["hochster", "koszul", "both"], default="hochster")
    s.add_argument("--field", choices=["q", "f2"], default="q")
    s.add_argument("--multigraded", action="store_true",
                   help="use the brute-force multigraded Hochster route")
    s.add_argument("--gate", type=int, default=None)
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("sympow", help="symbolic power and its regularity")
    s.add_argument("graph")
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--compare-ordinary", action="store_true")
    s.add_argument("--gate", type=int, default=None)
    s.set_defaults(func=cmd_sympow)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", choices=["default", *SUITES], default="default")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="exhaustive sweep over small labelled graphs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--checks", default="reg_le_dim,mult_covers,h1_codim,e1_bounds",
                   help=f"comma list from {','.join(SWEEP_CHECKS)}")
    s.add_argument("--field", choices=["q", "f2"], default="f2")
    s.set_defaults(func=cmd_sweep)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _emit({"error": "usage", "message": str(exc)})
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "gate", 0) is None:
        from .betti import DEFAULT_KOSZUL_GATE
        args.gate = DEFAULT_KOSZUL_GATE
    try:
        return args.func(args)
    except CostExceeded as exc:
        _emit({"error": "cost", "message": str(exc), "estimate": exc.estimate, "gate": exc.limit})
        return EXIT_COST
    except (UsageError, GraphError, IdealError, ValueError, OSError) as exc:
        _emit({"error": "usage", "message": str(exc)})
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
