"""Command-line front end.

Exit status: 0 for a definite answer, 2 when a search ran out of budget,
1 for usage or data errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .choosability import (
    DEFAULT_BUDGET,
    find_noncolorable_assignment,
    list_chromatic_number,
    list_color_function,
)
from .chromatic import chromatic_polynomial
from .dsl import as_graph, evaluate
from .errors import BudgetExceeded, ListColorError
from .gadgets import (
    DEFAULT_COPY_LIMIT,
    construct_bad_assignment,
    count_bad_colorings_for_copy,
    fa_bounds,
    verify_noncolorable_by_bad_colorings,
)
from .graph import Graph, ProductGraph, chromatic_number, coloring_number
from .lists import ListAssignment, count_l_colorings, is_l_colorable
from .strong import is_strongly_chromatic_choosable

BUDGET_ENV = "LISTCOLOR_BUDGET"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    budget: int
    workers: int = 1
    format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.budget <= 0:
            raise UsageError("budget must be positive")
        if self.workers < 1:
            raise UsageError("workers must be at least 1")


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def load_graph(text: str):
    """A DSL expression, or ``@file.json`` holding a graph in JSON form."""
    if text.startswith("@"):
        return Graph.from_json(_read_json(text[1:]))
    return evaluate(text)


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from None


def _graph(args) -> tuple[str, Graph]:
    text = args.graph_opt or args.graph
    if text is None:
        raise UsageError("a graph is required (positional or --graph)")
    return text, as_graph(load_graph(text))


def _load_instance(path: str) -> tuple[ProductGraph, ListAssignment]:
    data = _read_json(path)
    try:
        return ProductGraph.from_json(data["product"]), ListAssignment.from_json(data["assignment"])
    except (KeyError, TypeError) as exc:
        raise UsageError(f"instance file needs 'product' and 'assignment': {exc}") from None


# ---------------------------------------------------------------------------
# subcommands; each returns a JSON-ready report


def cmd_chromatic_poly(args, cfg):
    text, g = _graph(args)
    p = chromatic_polynomial(g, cfg.budget)
    report = {"graph": text, "coefficients": p.to_json(), "polynomial": str(p)}
    if args.k:
        report["values"] = {str(k): p(k) for k in args.k}
    return report


def cmd_chi(args, cfg):
    text, g = _graph(args)
    return {"graph": text, "chromatic_number": chromatic_number(g, cfg.budget)}


def cmd_col(args, cfg):
    text, g = _graph(args)
    return {"graph": text, "coloring_number": coloring_number(g)}


def cmd_chi_list(args, cfg):
    text, g = _graph(args)
    return {"graph": text, "list_chromatic_number": list_chromatic_number(g, cfg.budget, workers=cfg.workers)}


def cmd_plist(args, cfg):
    text, g = _graph(args)
    res = list_color_function(g, args.k, cfg.budget, method=args.method, workers=cfg.workers)
    return {"graph": text, "k": args.k, **res.to_json()}


def cmd_find_witness(args, cfg):
    text, g = _graph(args)
    lists = find_noncolorable_assignment(g, args.k, cfg.budget, workers=cfg.workers)
    return {"graph": text, "k": args.k, "choosable": lists is None,
            "witness": None if lists is None else lists.to_json()}


def cmd_solve(args, cfg):
    text, g = _graph(args)
    lists = ListAssignment.from_json(_read_json(args.lists))
    ok, col = is_l_colorable(g, lists, cfg.budget)
    return {"graph": text, "colorable": ok, "coloring": None if col is None else col.to_json(),
            "count": count_l_colorings(g, lists, cfg.budget)}


def cmd_strong_cc(args, cfg):
    text, g = _graph(args)
    cert = is_strongly_chromatic_choosable(g, cfg.budget, workers=cfg.workers)
    return {"graph": text, **cert.to_json()}


def cmd_construct(args, cfg):
    text, g = _graph(args)
    built = construct_bad_assignment(g, args.a, cfg.budget, copy_limit=args.copy_limit, workers=cfg.workers)
    verdict = verify_noncolorable_by_bad_colorings(built.product, built.assignment, cfg.budget)
    report = {"graph": text, "a": args.a, "b": built.b, "t": built.t, "product": built.product.to_json(),
              "assignment": built.assignment.to_json(), "certificate": verdict.to_json(),
              "construction": built.to_json()}
    if args.out:
        Path(args.out).write_text(json.dumps(report))
        return {"graph": text, "a": args.a, "b": built.b, "t": built.t, "out": args.out,
                "verdict": verdict.verdict}
    return report


def cmd_verify(args, cfg):
    product, lists = _load_instance(args.instance)
    return verify_noncolorable_by_bad_colorings(product, lists, cfg.budget).to_json()


def _copy_index(text: str) -> int:
    raw = text[1:] if text.lower().startswith("w") else text
    if not raw.isdigit() or int(raw) < 1:
        raise UsageError(f"copy must look like w3 or 3 (1-based), got {text!r}")
    return int(raw) - 1


def cmd_count_bad(args, cfg):
    product, lists = _load_instance(args.instance)
    w = _copy_index(args.copy)
    count = count_bad_colorings_for_copy(product, lists, args.require_disjoint, w, cfg.budget)
    return {"copy": f"w{w + 1}", "bad_colorings": count}


def cmd_fa(args, cfg):
    text, g = _graph(args)
    report = fa_bounds(g, args.a, cfg.budget, workers=cfg.workers).to_json()
    report["graph"] = text
    return report


def cmd_selftest(args, cfg):
    from .selftest import run_checks
    results = run_checks(seed=cfg.seed)
    report = {"checks": [{"name": name, "passed": ok, "detail": detail} for name, ok, detail in results],
              "passed": all(ok for _, ok, _ in results)}
    if not report["passed"]:
        raise _Failed(report)
    return report


class _Failed(Exception):
    def __init__(self, report):
        self.report = report


COMMANDS = {
    "chromatic-poly": (cmd_chromatic_poly, "chromatic polynomial P(G, k)"),
    "chi": (cmd_chi, "chromatic number"),
    "col": (cmd_col, "colouring number (degeneracy + 1)"),
    "chi-list": (cmd_chi_list, "list chromatic number"),
    "plist": (cmd_plist, "list colour function P_l(G, k) with a minimising assignment"),
    "find-witness": (cmd_find_witness, "a k-assignment with no proper colouring"),
    "solve": (cmd_solve, "colour a graph from a list-assignment file"),
    "strong-cc": (cmd_strong_cc, "strong chromatic-choosability certificate"),
    "construct": (cmd_construct, "bad assignment for G □ K_{a,b}, verified"),
    "verify": (cmd_verify, "verify an instance file through bad colourings"),
    "count-bad": (cmd_count_bad, "count u-side colourings bad for one w-copy"),
    "fa": (cmd_fa, "bounds on f_a(G)"),
    "selftest": (cmd_selftest, "quick built-in checks"),
}

_NEEDS_GRAPH = {"chromatic-poly", "chi", "col", "chi-list", "plist", "find-witness", "solve", "strong-cc",
                "construct", "fa"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--budget", type=int, default=None,
                        help=f"search node limit (default: ${BUDGET_ENV} or {DEFAULT_BUDGET})")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="listcolor", description="Exact list-colouring computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name in _NEEDS_GRAPH:
            p.add_argument("graph", nargs="?", help="graph expression, e.g. join(K2,C5), or @file.json")
            p.add_argument("--graph", dest="graph_opt")
        if name == "chromatic-poly":
            p.add_argument("-k", type=int, action="append", help="evaluate at k (repeatable)")
        if name in ("plist", "find-witness"):
            p.add_argument("-k", type=int, required=True)
        if name == "plist":
            p.add_argument("--method", choices=("auto", "search"), default="auto")
        if name == "solve":
            p.add_argument("--lists", required=True, help='JSON file {"lists": [[..], ..]}')
        if name in ("construct", "fa"):
            p.add_argument("-a", type=int, required=True)
        if name == "construct":
            p.add_argument("--out")
            p.add_argument("--copy-limit", type=int, default=DEFAULT_COPY_LIMIT)
        if name in ("verify", "count-bad"):
            p.add_argument("--instance", required=True)
        if name == "count-bad":
            p.add_argument("--copy", default="w1")
            p.add_argument("--require-disjoint", action="store_true")
    return parser


def _text(report, indent="") -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
            lines.append(f"{indent}{key}:")
            lines.extend(f"{indent}  - {json.dumps(x)}" for x in value)
        elif isinstance(value, dict) and len(json.dumps(value)) > 60:
            lines.append(f"{indent}{key}:")
            lines.append(_text(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {json.dumps(value) if isinstance(value, (dict, list)) else value}")
    return "\n".join(lines)


def _emit(report, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        stream.write(_text(report) + "\n")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    fmt = "text"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        budget = args.budget if args.budget is not None else _default_budget()
        cfg = RunConfig(budget, args.workers, args.format, args.seed)
        handler = COMMANDS[args.command][0]
        report = handler(args, cfg)
    except BudgetExceeded as exc:
        report = {"status": "inconclusive", "reason": str(exc), "explored": exc.explored,
                  "bracket": list(exc.bracket) if exc.bracket else None}
        _emit(report, fmt, stdout)
        return 2
    except _Failed as exc:
        _emit(exc.report, fmt, stdout)
        return 1
    except (UsageError, ListColorError, ValueError) as exc:
        stderr.write(f"listcolor: error: {exc}\n")
        return 1
    _emit(report, fmt, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
