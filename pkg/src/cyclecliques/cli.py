"""Command-line entry point; graphs travel as graph6, one per line."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, Sequence

from . import constructions
from .cliques import census, count_cliques, f_formula, g_formula, h_formula
from .cycles import circumference, max_cycle_through_edge, short_edges
from .enumeration import EnumerationSpec, enumerate_graphs, import_graph6_corpus
from .graph import Graph, GraphError
from .graph6 import emit_graph6, parse_graph6
from .transforms import closure_L, closure_M, contract_edge, edge_switch
from .verify import THEOREMS, ParameterError, verify_lemma8

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(part) for part in text.replace("-", ",").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an edge like 0,1 but got {text!r}") from None
    return u, v


def _input_graphs(args) -> Iterator[Graph]:
    if getattr(args, "corpus", None):
        with open(args.corpus) as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    for lineno, line in enumerate(lines, start=1):
        if line.strip():
            try:
                yield parse_graph6(line)
            except GraphError as exc:
                raise GraphError(f"line {lineno}: {exc}") from None


def _need(args, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise ParameterError(f"missing {' '.join(missing)}")


def cmd_construct(args) -> int:
    family = args.family
    if family == "H":
        _need(args, "n", "c")
        g = constructions.build_H(args.n, args.c)
    elif family == "X":
        _need(args, "n", "k")
        g = constructions.build_X(args.n, args.k)
    elif family == "F":
        _need(args, "n", "c", "k")
        g = constructions.build_F(args.n, args.c, args.k)
    elif family == "woodall":
        _need(args, "n", "c", "alpha_prime")
        g = constructions.build_woodall_variant(args.n, args.c, args.alpha_prime)
    else:
        _need(args, "n", "k", "beta_prime")
        g = constructions.build_fan_variant(args.n, args.k, args.beta_prime)
    print(emit_graph6(g))
    return EXIT_PASS


def cmd_count(args) -> int:
    _need(args, "s")
    for g in _input_graphs(args):
        print(count_cliques(g, args.s))
    return EXIT_PASS


def cmd_census(args) -> int:
    for g in _input_graphs(args):
        print(" ".join(map(str, census(g).as_list())))
    return EXIT_PASS


def cmd_circumference(args) -> int:
    for g in _input_graphs(args):
        print(circumference(g))
    return EXIT_PASS


def cmd_edge_cycle(args) -> int:
    for g in _input_graphs(args):
        print(max_cycle_through_edge(g, args.edge))
    return EXIT_PASS


def cmd_short_edges(args) -> int:
    _need(args, "k")
    for g in _input_graphs(args):
        print(" ".join(f"{u},{v}" for u, v in short_edges(g, args.k)))
    return EXIT_PASS


def cmd_closure(args) -> int:
    for g in _input_graphs(args):
        if args.kind == "L":
            _need(args, "c")
            res = closure_L(g, args.c, args.order_policy, args.seed)
        else:
            _need(args, "k", "edge")
            res = closure_M(g, args.edge, args.k, args.order_policy, args.seed)
        if args.json:
            print(json.dumps({"graph6": emit_graph6(res.graph), "added_edges": [list(e) for e in res.added_edges],
                              "constraint": res.constraint}, sort_keys=True))
        else:
            print(emit_graph6(res.graph))
    return EXIT_PASS


def cmd_switch(args) -> int:
    for g in _input_graphs(args):
        print(emit_graph6(edge_switch(g, args.source, args.target)))
    return EXIT_PASS


def cmd_contract(args) -> int:
    for g in _input_graphs(args):
        print(emit_graph6(contract_edge(g, *args.edge)))
    return EXIT_PASS


def cmd_enumerate(args) -> int:
    _need(args, "n")
    spec = EnumerationSpec(args.n, connected=args.connected, two_connected=args.two_connected,
                           max_circumference=args.max_circumference, short_edge_k=args.short_edge)
    if args.corpus:
        stream = (g for g in import_graph6_corpus(args.corpus, spec) if g.n == args.n)
    else:
        stream = enumerate_graphs(spec)
    for g in stream:
        print(emit_graph6(g))
    return EXIT_PASS


def cmd_formulas(args) -> int:
    _need(args, "n", "s")
    out = {}
    if args.c is not None:
        out["h"] = h_formula(args.n, args.c, args.s)
        if args.c >= 4 and args.n > args.c:
            out["f_2"] = f_formula(args.n, args.c, 2, args.s)
            out["f_half"] = f_formula(args.n, args.c, args.c // 2, args.s)
    if args.k is not None:
        out["g"] = g_formula(args.n, args.k, args.s)
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        for key in sorted(out):
            print(f"{key} = {out[key]}")
    return EXIT_PASS


def cmd_verify(args) -> int:
    corpus = list(_input_graphs(args)) if args.corpus else None
    if args.check == "lemma8":
        report = verify_lemma8(args.c_max, args.n_extra)
    else:
        fn = THEOREMS[args.check]
        if args.check in ("theorem1",):
            _need(args, "n", "c")
            report = fn(args.n, args.c, jobs=args.jobs, corpus=corpus)
        elif args.check == "theorem2":
            _need(args, "n", "k")
            report = fn(args.n, args.k, jobs=args.jobs, corpus=corpus)
        elif args.check in ("theorem3", "theorem5", "theorem7"):
            _need(args, "n", "c", "s")
            report = fn(args.n, args.c, args.s, jobs=args.jobs, corpus=corpus)
        else:
            _need(args, "n", "k", "s")
            report = fn(args.n, args.k, args.s, jobs=args.jobs, corpus=corpus)
    print(report.to_json() if args.json else report.summary())
    return EXIT_FAIL if report.verdict == "fail" else EXIT_PASS


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--corpus", help="graph6 file (default: standard input)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclecliques", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit an extremal family member")
    p.add_argument("family", choices=["H", "X", "F", "woodall", "fan"])
    p.add_argument("--alpha-prime", type=int)
    p.add_argument("--beta-prime", type=int)
    _common(p)
    p.set_defaults(func=cmd_construct)

    for name, func, text in [
        ("count", cmd_count, "number of s-cliques per input graph"),
        ("census", cmd_census, "N_1 .. N_n per input graph"),
        ("circumference", cmd_circumference, "longest cycle length per input graph"),
        ("short-edges", cmd_short_edges, "edges on no cycle longer than k"),
    ]:
        p = sub.add_parser(name, help=text)
        _common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("edge-cycle", help="longest cycle through an edge")
    p.add_argument("--edge", type=_edge, required=True)
    _common(p)
    p.set_defaults(func=cmd_edge_cycle)

    p = sub.add_parser("closure", help="greedy edge-maximal closure")
    p.add_argument("kind", choices=["L", "M"])
    p.add_argument("--edge", type=_edge)
    p.add_argument("--order-policy", choices=["lex", "revlex", "random"], default="lex")
    p.add_argument("--seed", type=int, default=0)
    _common(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("switch", help="edge-switching G[from -> to]")
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("contract", help="contract an edge")
    p.add_argument("--edge", type=_edge, required=True)
    _common(p)
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("enumerate", help="non-isomorphic graphs as graph6")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--two-connected", action="store_true")
    p.add_argument("--max-circumference", type=int)
    p.add_argument("--short-edge", type=int, metavar="K")
    _common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("formulas", help="closed-form clique counts")
    _common(p)
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("verify", help="run a checker")
    p.add_argument("check", choices=sorted(THEOREMS) + ["lemma8"])
    p.add_argument("--jobs", type=int, default=int(os.environ.get("CYCLECLIQUES_JOBS", "1")))
    p.add_argument("--c-max", type=int, default=40)
    p.add_argument("--n-extra", type=int, default=40)
    _common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except (GraphError, ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
