"""Command-line interface.

Vertex ids in every file are 0-based: a vertex with recursive label j
(1-based) is written as j-1.

Exit codes: 0 ok, 2 parse/usage error, 3 reduced output not minimal
(with --check-minimal), 4 input is not a k-tree, 5 not k-edge-connected,
6 insensitive edges present.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import __version__
from .connectivity import edge_connectivity, is_minimally_k_edge_connected
from .formats import FormatError, format_dot, format_graph, parse_graph
from .generators import FAMILIES, GenSpec, generate, random_ktree
from .graph import GraphError
from .ktree import (
    KTreeTrace,
    TraceError,
    build_ktree,
    enumerate_cliques,
    format_trace,
    parse_trace,
    recognize_ktree,
)
from .reduction import Mode, reduce_k_tree, reduce_two_tree

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_MINIMAL = 3
EXIT_NOT_KTREE = 4
EXIT_NOT_CONNECTED = 5
EXIT_INSENSITIVE = 6


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_PARSE):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, newline="\n")


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except FormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _resolve_k(arg_k: int | None, file_k: int) -> int:
    k = arg_k if arg_k is not None else file_k
    if k < 1:
        raise CliError("k not given and not asserted by the graph file header")
    return k


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(args.n, args.k, args.seed, args.family)
    try:
        trace = generate(spec)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    g = build_ktree(trace)
    _write(args.out, format_graph(g, spec.k))
    trace_out = args.trace_out
    if trace_out is None and args.out not in (None, "-"):
        trace_out = args.out + ".trace"
    if trace_out is not None:
        _write(trace_out, format_trace(trace))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    g, file_k = _load_graph(args.input)
    k = _resolve_k(args.k, file_k)
    algorithm = args.algorithm or ("tri" if k == 2 else "degree")
    if algorithm == "tri" and k != 2:
        raise CliError("--algorithm tri applies to 2-trees only")
    if args.trace:
        try:
            trace = parse_trace(_read(args.trace))
            rebuilt = build_ktree(trace)
        except TraceError as exc:
            raise CliError(f"{args.trace}: {exc}", EXIT_NOT_KTREE) from None
        if trace.k != k or rebuilt != g:
            raise CliError(f"{args.trace} does not rebuild {args.input}", EXIT_NOT_KTREE)
    else:
        trace = recognize_ktree(g, k)
        if not isinstance(trace, KTreeTrace):
            raise CliError(f"{args.input} is not a {k}-tree: {trace}", EXIT_NOT_KTREE)

    if algorithm == "tri":
        out, report = reduce_two_tree(g, check_minimal=args.check_minimal, trace=trace)
    else:
        out, report = reduce_k_tree(g, k, args.mode, check_minimal=args.check_minimal, trace=trace)
    _write(args.out, format_graph(out, 0))
    if args.report:
        _write(args.report, report.format())
    elif args.out not in (None, "-"):
        sys.stdout.write(report.format())
    if report.final_minimal is False:
        print("reduced graph is not minimally k-edge-connected", file=sys.stderr)
        return EXIT_NOT_MINIMAL
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g, file_k = _load_graph(args.input)
    k = _resolve_k(args.k, file_k)
    if g.n < 2:
        raise CliError("verify needs at least 2 vertices")
    verdict = is_minimally_k_edge_connected(g, k)
    if not verdict.k_connected:
        print(f"not-k-edge-connected (cut: {verdict.cut.describe()})")
        return EXIT_NOT_CONNECTED
    if verdict.insensitive:
        print("insensitive-edges: " + " ".join(str(e) for e in verdict.insensitive))
        return EXIT_INSENSITIVE
    print("minimal")
    return EXIT_OK


def cmd_cut(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args.input)
    if g.n < 1:
        raise CliError("cut needs at least 1 vertex")
    verdict = edge_connectivity(g)
    if verdict.witness is None:
        print("lambda=inf")
        return EXIT_OK
    print(f"lambda={verdict.lam}")
    print("side: " + " ".join(map(str, sorted(verdict.witness.side))))
    print("cut: " + verdict.witness.describe())
    return EXIT_OK


def cmd_cliques(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args.input)
    if args.size < 1:
        raise CliError("--size must be positive")
    cliques = sorted(sorted(c) for c in enumerate_cliques(g, args.size))
    print(f"count={len(cliques)}")
    for c in cliques:
        print(" ".join(map(str, c)))
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args.input)
    _write(args.out, format_dot(g))
    return EXIT_OK


def bench(k: int, sizes: list[int], seed: int, repeats: int) -> list[tuple[int, float]]:
    """Mean wall time of generate + recognize + unverified degree-guarded reduce per n."""
    rows = []
    for n in sizes:
        total = 0.0
        for r in range(repeats):
            start = time.perf_counter()
            g = build_ktree(random_ktree(GenSpec(n, k, seed + r)))
            reduce_k_tree(g, k, Mode.FAITHFUL)
            total += time.perf_counter() - start
        rows.append((n, total / repeats))
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(x) for x in args.n.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"--n expects a comma-separated list of integers, got {args.n!r}") from None
    if args.k < 1 or args.repeats < 1 or not sizes or any(n < args.k + 1 for n in sizes):
        raise CliError("bench needs k >= 1, repeats >= 1 and every n >= k+1")
    print(f"{'n':>8} {'mean_seconds':>14}")
    for n, t in bench(args.k, sizes, args.seed, args.repeats):
        print(f"{n:>8} {t:>14.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ktreemin",
        description="Build k-trees and reduce them to minimally k-edge-connected graphs.",
        epilog="Vertex ids in all files are 0-based (recursive label j is written j-1).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a k-tree graph file and its trace")
    p.add_argument("--family", choices=FAMILIES, default="random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="graph file (default stdout)")
    p.add_argument("--trace-out", help="trace file (default <out>.trace when --out is a file)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="reduce a k-tree to a minimally k-edge-connected graph")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, help="default: k from the file header")
    p.add_argument("--algorithm", choices=("tri", "degree"),
                   help="tri = triangle-multiplicity removal (k=2), degree = degree-guarded removal; "
                        "default tri when k=2")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.FAITHFUL.value)
    p.add_argument("--check-minimal", action="store_true",
                   help="run the exhaustive minimality oracle on the output")
    p.add_argument("--trace", help="trace file witnessing the input (skips recognition)")
    p.add_argument("--out", help="reduced graph file (default stdout)")
    p.add_argument("--report", help="report file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check minimal k-edge-connectivity")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cut", help="global minimum edge cut with certificate")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("cliques", help="list cliques of a given size")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=cmd_cliques)

    p = sub.add_parser("dot", help="export Graphviz DOT")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("bench", help="time generation + degree-guarded reduction")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", default="100,200,400", help="comma-separated sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"ktreemin: {exc}", file=sys.stderr)
        return exc.code
    except (GraphError, TraceError) as exc:
        print(f"ktreemin: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
