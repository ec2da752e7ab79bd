"""Command-line interface: build, analyze, census, verify, solution."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .brace import invariants
from .catalog import build
from .census import DEFAULT_BOUND, EXTENDED_BOUND, enumerate_braces
from .errors import BudgetExceeded, SkewBraceError, UnsupportedOrder
from .graphs import emit_graph, graph_to_json, lambda_graph, theta_graph
from .grouplib import identify
from .groups import DEFAULT_MAX_NODES
from .io import brace_from_json, brace_to_json, dumps, read_json, report_to_json, write_json
from .verify import SUITES, run_suite
from .ybe import solution_of, verify_ybe

USAGE_ERROR = 2
CHECK_FAILED = 1


class UsageError(Exception):
    pass


def _load_brace(words: list[str]):
    """A brace from a JSON file path or a catalog spec such as ``pq:F p=5 q=2``."""
    if len(words) == 1 and words[0].endswith(".json"):
        path = Path(words[0])
        if not path.is_file():
            raise UsageError(f"no such file: {path}")
        try:
            return brace_from_json(read_json(path))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise UsageError(f"{path}: not a brace JSON file ({exc})") from None
    return build(" ".join(words))


def _safe_name(text: str) -> str:
    return "".join(c if c.isalnum() or c in "-_.=" else "_" for c in text).strip("_") or "brace"


def _graph_block(label: str, g, fmt: str, name: str) -> str:
    if fmt == "text":
        s = g.summary()
        return (f"{label}: {s['vertices']} vertices, sizes {s['sizes']}, "
                f"components {s['components']}, diameters {s['diameters']} ({s['shape']})\n"
                + "  " + emit_graph(g, "ascii").replace("\n", "\n  "))
    return emit_graph(g, fmt, name)


def _group_label(G) -> str:
    """Library name when the order is covered, otherwise a short description."""
    try:
        return identify(G)[1]
    except (UnsupportedOrder, ValueError):
        kind = "abelian" if G.is_abelian else "nonabelian"
        return G.name or f"{kind} group of order {G.order}"


def _analysis(A) -> dict:
    lg, tg = lambda_graph(A), theta_graph(A)
    return {
        "name": A.name,
        "n": A.n,
        "additive": _group_label(A.add),
        "multiplicative": _group_label(A.circ),
        "invariants": invariants(A).summary(),
        "lambda_graph": {**graph_to_json(lg), **lg.summary()},
        "theta_graph": {**graph_to_json(tg), **tg.summary()},
    }


def _emit_files(A, name: str, args) -> None:
    if args.emit_json:
        write_json(Path(args.emit_json) / f"{name}.json", {**brace_to_json(A), "analysis": _analysis(A)})
    if args.emit_dot:
        out = Path(args.emit_dot)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{name}_lambda.dot").write_text(emit_graph(lambda_graph(A), "dot", f"{name} lambda"))
        (out / f"{name}_theta.dot").write_text(emit_graph(theta_graph(A), "dot", f"{name} theta"))


def cmd_build(args) -> int:
    A = _load_brace(args.spec)
    data = brace_to_json(A)
    if args.emit_json:
        write_json(Path(args.emit_json) / f"{_safe_name(A.name or 'brace')}.json", data)
    print(dumps(data))
    return 0


def cmd_analyze(args) -> int:
    A = _load_brace(args.spec)
    name = _safe_name(A.name or "brace")
    info = _analysis(A)
    if args.format == "json":
        print(dumps(info))
    elif args.format == "dot":
        print(emit_graph(lambda_graph(A), "dot", f"{name} lambda"), end="")
        print(emit_graph(theta_graph(A), "dot", f"{name} theta"), end="")
    else:
        print(f"{A.name}: order {A.n}, (A,+) = {info['additive']}, (A,∘) = {info['multiplicative']}")
        for k, v in info["invariants"].items():
            print(f"  {k}: {v}")
        print(_graph_block("Λ", lambda_graph(A), "text", name))
        print(_graph_block("Θ", theta_graph(A), "text", name))
    _emit_files(A, name, args)
    return 0


def cmd_census(args) -> int:
    report = enumerate_braces(args.n, allow_extended=args.allow_extended, max_nodes=args.max_nodes)
    if args.emit_json:
        write_json(Path(args.emit_json) / f"census_{args.n}.json", report_to_json(report))
    if args.emit_dot:
        for A in report.braces:
            _emit_files(A, _safe_name(A.name), argparse.Namespace(emit_json=None, emit_dot=args.emit_dot))
    print(f"order {report.n}: {len(report)} skew braces ({report.seconds:.2f} s)")
    for s in report.summaries:
        fam = f"  [{s.family}]" if s.family else ""
        print(f"  {s.index:4d}  {s.additive:>12} / {s.multiplicative:<12} "
              f"fix={s.invariants['fix']:<3} Λ={s.lambda_graph.shape():<10} Θ={s.theta_graph.shape()}{fam}")
    return 0


def cmd_verify(args) -> int:
    if args.list:
        for name, suite in SUITES.items():
            print(f"{name}: {suite.description}")
        return 0
    if not args.suite:
        raise UsageError("verify needs a suite name or 'all' (see --list)")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    results = [run_suite(name) for name in names]
    if args.json:
        print(dumps([r.as_dict() for r in results]))
    else:
        print("\n".join(r.text() for r in results))
    if args.emit_json:
        for r in results:
            write_json(Path(args.emit_json) / f"verify_{r.name}.json", r.as_dict())
    return 0 if all(r.passed for r in results) else CHECK_FAILED


def cmd_solution(args) -> int:
    A = _load_brace(args.spec)
    S = solution_of(A)
    res = verify_ybe(S)
    data = {**S.as_dict(), "ybe": res.ok, "witness": list(res.witness) if res.witness else None}
    if args.emit_json:
        write_json(Path(args.emit_json) / f"{_safe_name(A.name or 'brace')}_solution.json", data)
    print(dumps(data))
    return 0 if res.ok else CHECK_FAILED


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewbrace", description="Finite skew braces and their orbit graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def outputs(p):
        p.add_argument("--emit-json", metavar="DIR", help="also write JSON files into DIR")
        p.add_argument("--emit-dot", metavar="DIR", help="also write DOT files into DIR")

    spec_help = ("catalog spec (e.g. 'example:z4_radical', 'pq:F p=5 q=2', 'p2:3 p=3', "
                 "'onevertex:J i=2 d=3', 'triv:S3') or a brace .json file")
    p = sub.add_parser("build", help="emit the JSON tables of a catalog brace")
    p.add_argument("spec", nargs="+", help=spec_help)
    outputs(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="invariants and both orbit graphs")
    p.add_argument("spec", nargs="+", help=spec_help)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    outputs(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("census", help="all skew braces of order n")
    p.add_argument("n", type=int)
    p.add_argument("--max-nodes", "--budget", dest="max_nodes", type=int, default=DEFAULT_MAX_NODES,
                   help="search node budget")
    p.add_argument("--allow-extended", action="store_true",
                   help=f"allow orders {DEFAULT_BOUND + 1}..{EXTENDED_BOUND} (order 16 takes about a minute)")
    outputs(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?", help="suite name or 'all'")
    p.add_argument("--list", action="store_true", help="list the suites")
    p.add_argument("--json", action="store_true", help="print results as JSON")
    p.add_argument("--emit-json", metavar="DIR")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solution", help="emit the Yang-Baxter solution r_A and check it")
    p.add_argument("spec", nargs="+", help=spec_help)
    p.add_argument("--emit-json", metavar="DIR")
    p.set_defaults(func=cmd_solution)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except BudgetExceeded as exc:
        print(f"error: {exc} (raise it with --max-nodes)", file=sys.stderr)
        return CHECK_FAILED
    except (SkewBraceError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
