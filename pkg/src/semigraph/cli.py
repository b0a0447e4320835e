"""Command-line interface.

Subcommands: eval (interpret an expression), closure (close it first),
check (run the law or united-monoid suites), export (tree-level JSON or
canonical text).

Exit codes: 0 ok, 1 suite failure, 2 expression parse error, 3 cycle
error, 4 usage or semiring/target compatibility error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Optional

from . import laws, render, united
from .closure import CycleError, closure, to_preorder, to_strict_partial_order
from .expr import ParseError, parse_expr, pretty
from .graph import Graph, to_graph
from .lgraph import to_lgraph
from .semiring import SEMIRINGS, Semiring
from .simplicial import to_simplicial_set
from .tree import Tree, leaf_set, to_json_obj

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_CYCLE_ERROR = 3
EXIT_USAGE = 4

EVAL_TARGETS = ("set", "simplicial", "graph", "lgraph", "preorder", "order")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems exit 4, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semigraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_expr_args(p):
        p.add_argument("--semiring", choices=sorted(SEMIRINGS), default="bool")
        p.add_argument("-e", "--expr", help="expression text")
        p.add_argument("file", nargs="?", help="file containing the expression")

    p_eval = sub.add_parser("eval", help="interpret an expression")
    add_expr_args(p_eval)
    p_eval.add_argument("--target", choices=EVAL_TARGETS, required=True)
    p_eval.add_argument("--format", choices=("json", "dot"), default="json")

    p_closure = sub.add_parser("closure", help="interpret, then close")
    add_expr_args(p_closure)
    p_closure.add_argument("--target", choices=("lgraph", "graph", "preorder"), default="lgraph")
    p_closure.add_argument("--format", choices=("json", "dot"), default="json")
    p_closure.add_argument(
        "--strict", action="store_true", help="strict partial order: cyclic terms are errors"
    )

    p_check = sub.add_parser("check", help="run a property suite")
    p_check.add_argument("--suite", choices=("laws", "united"), required=True)
    p_check.add_argument("--law", help="restrict to one law")
    p_check.add_argument("--semiring", choices=sorted(SEMIRINGS))
    p_check.add_argument("--target", choices=sorted(laws.TARGETS))
    p_check.add_argument("--cases", type=int, default=200)
    p_check.add_argument("--seed", type=int, default=42)
    p_check.add_argument("--max-leaves", type=int, default=12)
    p_check.add_argument("--alphabet", type=int, default=4)
    p_check.add_argument("--format", choices=("table", "json"), default="table")

    p_export = sub.add_parser("export", help="canonical tree JSON or text")
    add_expr_args(p_export)
    p_export.add_argument("--format", choices=("json", "text"), default="json")

    return parser


def _read_expression(args) -> str:
    if args.expr is not None:
        return args.expr
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as handle:
            return handle.read()
    raise UsageError("an expression is required: pass -e or a file")


def _parse(args) -> tuple[Semiring, Tree]:
    sr = SEMIRINGS[args.semiring]
    return sr, parse_expr(_read_expression(args), sr)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise UsageError(message)


def _emit(fmt: str, json_obj: Any, dot_text: Optional[str]) -> None:
    if fmt == "dot":
        _require(dot_text is not None, "this target has no dot form")
        sys.stdout.write(dot_text)
    else:
        sys.stdout.write(render.render_json(json_obj) + "\n")


def _cmd_eval(args) -> int:
    sr, tree = _parse(args)
    target, fmt = args.target, args.format
    _require(
        target in ("set", "lgraph") or sr.name == "bool",
        f"target {target!r} requires --semiring bool",
    )
    if target == "set":
        _emit(fmt, render.set_to_obj(leaf_set(tree)), None)
    elif target == "simplicial":
        _emit(fmt, render.simplicial_to_obj(to_simplicial_set(tree)), None)
    elif target == "graph":
        g = to_graph(tree)
        _emit(fmt, render.graph_to_obj(g), render.graph_dot(g))
    elif target == "lgraph":
        g = to_lgraph(sr, tree)
        _emit(fmt, render.lgraph_to_obj(sr, g), render.lgraph_dot(sr, g))
    elif target == "preorder":
        pairs = to_preorder(tree)
        _emit(fmt, render.pairs_to_obj(pairs), render.pairs_dot(pairs))
    elif target == "order":
        outcome = to_strict_partial_order(tree)
        if isinstance(outcome, CycleError):
            print(render.render_json(render.CYCLE_ERROR_OBJ))
            return EXIT_CYCLE_ERROR
        _emit(fmt, render.pairs_to_obj(outcome), render.pairs_dot(outcome))
    return EXIT_OK


def _cmd_closure(args) -> int:
    sr, tree = _parse(args)
    if args.strict:
        _require(sr.name == "bool", "--strict requires --semiring bool")
        outcome = to_strict_partial_order(tree)
        if isinstance(outcome, CycleError):
            print(render.render_json(render.CYCLE_ERROR_OBJ))
            return EXIT_CYCLE_ERROR
        print(render.render_json(render.pairs_to_obj(outcome)))
        return EXIT_OK
    if args.target == "lgraph":
        _require(sr.star is not None, f"semiring {sr.name!r} has no star; closure is undefined")
        closed = closure(sr, to_lgraph(sr, tree))
        _emit(args.format, render.lgraph_to_obj(sr, closed), render.lgraph_dot(sr, closed))
        return EXIT_OK
    _require(sr.name == "bool", f"target {args.target!r} requires --semiring bool")
    pairs = to_preorder(tree)
    if args.target == "preorder":
        _emit(args.format, render.pairs_to_obj(pairs), render.pairs_dot(pairs))
        return EXIT_OK
    # target graph: the closed relation as a plain (V, E) object
    g = Graph(frozenset(to_lgraph(sr, tree)), frozenset(pairs))
    _emit(args.format, render.graph_to_obj(g), render.graph_dot(g))
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.suite == "united":
        rows = united.run_united_suite()
        if args.format == "json":
            print(render.render_json(rows))
        else:
            width = max(len(r["instance"]) for r in rows)
            for r in rows:
                flag = "" if r["ok"] else "  <- unexpected"
                print(
                    f"{r['instance']:<{width}}  {r['law']:<22} {r['status']:<5}"
                    f" (expected {r['expected']}){flag}"
                )
        return EXIT_OK if all(r["ok"] for r in rows) else EXIT_SUITE_FAILURE

    if args.law is not None and args.law not in laws.LAWS:
        raise UsageError(f"unknown law {args.law!r}; choose from {', '.join(sorted(laws.LAWS))}")
    results = laws.run_suite(
        cases=args.cases,
        seed=args.seed,
        max_leaves=args.max_leaves,
        alphabet=args.alphabet,
        law_names=[args.law] if args.law else None,
        semiring_names=[args.semiring] if args.semiring else None,
        target_names=[args.target] if args.target else None,
    )
    if args.format == "json":
        print(render.render_json([r.to_json_obj() for r in results]))
    else:
        for r in results:
            outcome = "held" if r.failures == 0 else f"failed ({r.failures})"
            flag = "" if r.as_expected else "  <- unexpected"
            print(
                f"{r.law:<24} {r.semiring:<9} {r.target:<11} "
                f"{r.expectation:<10} {outcome}{flag}"
            )
    return EXIT_OK if all(r.as_expected for r in results) else EXIT_SUITE_FAILURE


def _cmd_export(args) -> int:
    sr, tree = _parse(args)
    if args.format == "text":
        print(pretty(tree, sr))
    else:
        print(render.render_json(to_json_obj(tree, sr.label_to_json)))
    return EXIT_OK


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "closure":
            return _cmd_closure(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "export":
            return _cmd_export(args)
        raise UsageError(f"unknown command {args.command!r}")
    except ParseError as exc:
        print(f"semigraph: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except UsageError as exc:
        print(f"semigraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"semigraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
