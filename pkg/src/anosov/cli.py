"""Command-line interface.

Exit status: 0 on success, 1 on input or domain errors, 2 when a scale limit
is exceeded, 64 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import graph6
from .bounds import (
    NuFormula,
    big_one_bounds,
    family_members,
    nu_family_count,
    nu_lower_bound,
)
from .census import (
    BRUTE_FORCE_MAX_N,
    Method,
    compute_X,
    count_L,
    count_U,
    enumerate_anosov,
)
from .equivalence import anosov_violation, decompose
from .errors import AnosovError, CapabilityError, InputError, ParseError
from .graph import SimpleGraph
from .injection import VARIANTS, inject, verify_injection
from .lie import build_lie_algebra, verify_two_step
from .partitions import Partition
from .quotient import WeightedGraph, deconstruct, quotient

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CAPABILITY = 2
EXIT_USAGE = 64

BOUNDS_COLUMNS = ("n", "L", "a", "U", "big_lower", "big_upper", "nu_improved", "nu_dani_mainkar")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_graph(text: str, fmt: str = "auto") -> SimpleGraph:
    """Parse graph6, JSON or edge-list text; ``auto`` looks at the leading byte."""
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    stripped = text.strip()
    if fmt == "auto":
        if stripped.startswith("{"):
            fmt = "json"
        elif stripped[:1].isdigit():
            # graph6 bytes start at '?', so a leading digit means an edge list
            fmt = "edges"
        else:
            fmt = "graph6"
    if fmt == "json":
        try:
            return SimpleGraph.from_json(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if fmt == "edges":
        return SimpleGraph.from_edge_list(stripped)
    if fmt == "graph6":
        return graph6.decode(stripped)
    raise InputError(f"unknown input format {fmt!r}")


def read_weighted(text: str) -> WeightedGraph:
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return WeightedGraph.from_json(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc


def format_graph(g: SimpleGraph, fmt: str) -> str:
    if fmt == "graph6":
        return graph6.encode(g) + "\n"
    if fmt == "json":
        return g.to_json() + "\n"
    if fmt == "dot":
        return g.to_dot()
    if fmt == "edges":
        return g.to_edge_list()
    raise InputError(f"format {fmt!r} is not available for graphs")


def format_weighted(w: WeightedGraph, fmt: str) -> str:
    if fmt == "dot":
        return w.to_dot()
    if fmt == "json":
        return w.to_json() + "\n"
    raise InputError(f"format {fmt!r} is not available for weighted graphs")


# --------------------------------------------------------------------------
# subcommands; each returns the text to print
# --------------------------------------------------------------------------


def cmd_check(args) -> str:
    g = read_graph(args.graph, args.input_format)
    reason = anosov_violation(g, args.allow_disconnected)
    if reason is None:
        return f"Anosov: type {decompose(g).type}\n"
    return f"not Anosov: {reason}\n"


def cmd_quotient(args) -> str:
    g = read_graph(args.graph, args.input_format)
    return format_weighted(quotient(g), args.format or "json")


def cmd_deconstruct(args) -> str:
    return format_graph(deconstruct(read_weighted(args.weighted)), args.format or "graph6")


def cmd_enumerate(args) -> str:
    methods = {"brute": [Method.BRUTE_FORCE], "quotient": [Method.QUOTIENT]}.get(
        args.method, [Method.BRUTE_FORCE, Method.QUOTIENT]
    )
    results = [
        enumerate_anosov(args.n, m, workers=args.workers, cache_dir=args.cache_dir) for m in methods
    ]
    agree = len({r.graphs for r in results}) == 1
    fmt = args.format or "tsv"
    if fmt == "json":
        data = {"n": args.n, "results": [r.to_dict() for r in results]}
        if len(results) > 1:
            data["methods_agree"] = agree
        return json.dumps(data) + "\n"
    if fmt == "graph6":
        return "".join(graph6.encode(code.graph()) + "\n" for code in results[0].graphs)
    if fmt != "tsv":
        raise InputError(f"format {fmt!r} is not available for enumerate")
    lines = ["n\tmethod\tcount"]
    lines += [f"{r.n}\t{r.method.value}\t{r.count}" for r in results]
    if len(results) > 1:
        lines.append("methods agree" if agree else "METHODS DISAGREE")
    return "\n".join(lines) + "\n"


def _bounds_row(n: int, workers: int, cache_dir) -> list[str]:
    small = n <= BRUTE_FORCE_MAX_N
    a = enumerate_anosov(n, Method.BRUTE_FORCE if small else Method.QUOTIENT, workers, cache_dir).count
    low = up = "NA"
    try:
        # partitions with parts >= 2 have at most n // 2 parts
        X = {t: compute_X(t) for t in range(1, n // 2 + 1)}
        report = big_one_bounds(n, X)
        low, up = str(report.lower), str(report.upper)
    except CapabilityError:
        pass
    return [
        str(n),
        str(count_L(n, workers)) if small else "NA",
        str(a),
        str(count_U(n, workers)) if small else "NA",
        low,
        up,
        str(nu_lower_bound(n, NuFormula.IMPROVED)),
        str(nu_lower_bound(n, NuFormula.DANI_MAINKAR)),
    ]


def cmd_bounds(args) -> str:
    hi = args.n_max if args.n_max is not None else args.n
    rows = ["\t".join(BOUNDS_COLUMNS)]
    for n in range(args.n, hi + 1):
        rows.append("\t".join(_bounds_row(n, args.workers, args.cache_dir)))
    return "\n".join(rows) + "\n"


def cmd_xt(args) -> str:
    return f"{compute_X(args.t, allow_large=args.allow_large)}\n"


def cmd_inject(args) -> str:
    return format_weighted(inject(Partition.parse(args.partition), args.variant), args.format or "json")


def cmd_verify_injection(args) -> str:
    report = verify_injection(args.n, limit=args.limit, variant=args.variant)
    return "\n".join(report.lines()) + "\n"


def cmd_lie(args) -> str:
    g = read_graph(args.graph, args.input_format)
    algebra = build_lie_algebra(g)
    data = json.loads(algebra.to_json())
    data["two_step"] = verify_two_step(algebra)
    return json.dumps(data) + "\n"


def cmd_nu_family(args) -> str:
    w = args.w
    members = family_members(w)
    lines = [
        "w\tfamily_count\tmembers\tnu_improved\tnu_dani_mainkar",
        f"{w}\t{nu_family_count(w)}\t{len(members)}\t{nu_lower_bound(w, 'improved')}\t"
        f"{nu_lower_bound(w, 'dani-mainkar')}",
    ]
    if args.members:
        for m in members:
            lines.append(
                f"# {'loop' if m.loop0 else 'plain'} k={m.k} p={m.p} q={m.q} "
                f"{m.graph.to_json()}"
            )
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="anosov", description="Anosov graphs: predicate, quotients, censuses, bounds.")
    parser.add_argument("--output", "-o", help="write results to this file instead of stdout")
    parser.add_argument("--workers", type=int, default=1, help="worker processes for censuses")
    parser.add_argument(
        "--cache-dir",
        default=os.environ.get("ANOSOV_CACHE"),
        help="census cache directory (default: $ANOSOV_CACHE)",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_arg(p):
        p.add_argument("graph", help="graph6 string, JSON, edge list, @file, or - for stdin")
        p.add_argument(
            "--input-format", default="auto", choices=["auto", "graph6", "json", "edges"],
            help="override input auto-detection",
        )

    p = sub.add_parser("check", help="decide the Anosov predicate and name any violated condition")
    graph_arg(p)
    p.add_argument("--allow-disconnected", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("quotient", help="weighted quotient graph by the twin relation")
    graph_arg(p)
    p.add_argument("--format", choices=["json", "dot"])
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("deconstruct", help="blow a weighted graph (JSON) up into its deconstruction")
    p.add_argument("weighted", help='JSON {"k":..,"weights":[..],"edges":[[i,j],..]}, @file, or -')
    p.add_argument("--format", choices=["graph6", "json", "dot", "edges"])
    p.set_defaults(func=cmd_deconstruct)

    p = sub.add_parser(
        "enumerate",
        help="census of Anosov graphs a(n)",
        description="Census of Anosov graphs on n vertices. TSV columns: n, method, count.",
    )
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["brute", "quotient", "both"], default="both")
    p.add_argument("--format", choices=["tsv", "json", "graph6"])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "bounds",
        help="L(n), a(n), U(n), the partition sandwich bounds, and the vertex-plus-edge bounds",
        description=(
            "TSV columns: " + ", ".join(BOUNDS_COLUMNS) + ". L and U need n <= "
            f"{BRUTE_FORCE_MAX_N} (NA beyond); big_lower/big_upper are the partition sums "
            "over X(len); nu_* evaluate the vertex-plus-edge lower bounds at w = n."
        ),
    )
    p.add_argument("n", type=int)
    p.add_argument("--n-max", type=int, help="emit one row per n in [n, n-max]")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("xt", help="X(t): row-distinct symmetric binary matrices up to relabeling")
    p.add_argument("t", type=int)
    p.add_argument("--allow-large", action="store_true", help="permit t = 7")
    p.set_defaults(func=cmd_xt)

    p = sub.add_parser("inject", help="image of a partition under the injection into Anosov quotients")
    p.add_argument("partition", help='e.g. "3,3,3" or "2^2,1^5"')
    p.add_argument("--variant", choices=VARIANTS, default="published")
    p.add_argument("--format", choices=["json", "dot"])
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("verify-injection", help="check the partition injection for one n (pass/fail report)")
    p.add_argument("n", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="published")
    p.add_argument("--limit", type=int, default=14)
    p.set_defaults(func=cmd_verify_injection)

    p = sub.add_parser("lie", help="structure constants of the graph's two-step nilpotent Lie algebra")
    graph_arg(p)
    p.set_defaults(func=cmd_lie)

    p = sub.add_parser(
        "nu-family",
        help="count the two vertex-plus-edge families for w = n + m and compare with the bounds",
    )
    p.add_argument("w", type=int)
    p.add_argument("--members", action="store_true", help="list every constructed family member")
    p.set_defaults(func=cmd_nu_family)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (AnosovError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
