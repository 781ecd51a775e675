"""Line-oriented text formats: graph files, reports and DOT export.

Graph file::

    n m k
    u v        (m lines, u < v, strictly increasing, 0-based ids)

``k`` is 0 when the file does not assert a k-tree width.
"""

from __future__ import annotations

import re

from .connectivity import CutCertificate
from .graph import Edge, Graph, GraphError, from_edge_list
from .reduction import Mode, ReductionReport, Skip


class FormatError(ValueError):
    pass


def format_graph(g: Graph, k: int = 0) -> str:
    lines = [f"{g.n} {g.m} {k}"]
    lines.extend(f"{e.u} {e.v}" for e in g.edges())
    return "\n".join(lines) + "\n"


def _ints(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer token in {line!r}") from None


def parse_graph(text: str) -> tuple[Graph, int]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty graph file")
    n, m, k = _ints(lines[0], 3, 1)
    if n < 0 or m < 0 or k < 0:
        raise FormatError(f"line 1: negative value in header {lines[0]!r}")
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 1} edge lines")
    edges = []
    prev = None
    for i, ln in enumerate(lines[1:], start=2):
        u, v = _ints(ln, 2, i)
        if u >= v:
            raise FormatError(f"line {i}: edge {u} {v} is not canonical (need u < v)")
        if prev is not None and (u, v) <= prev:
            raise FormatError(f"line {i}: edge {u} {v} out of order or duplicated")
        prev = (u, v)
        edges.append(Edge(u, v))
    try:
        return from_edge_list(n, edges), k
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices())
    lines.extend(f"  {e.u} -- {e.v};" for e in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


_HEADER = re.compile(r"n=(\d+) m=(\d+) k=(\d+) mode=(\S+)$")
_TRAILER = re.compile(r"final_edges=(\d+) minimal=(yes|no|unchecked)$")
_SIDE = re.compile(r"side=([\d,]+)")
_CUT_EDGE = re.compile(r"\((\d+),(\d+)\)")


def parse_report(text: str) -> ReductionReport:
    lines = text.splitlines()
    if len(lines) < 2:
        raise FormatError("report needs a header and a trailer")
    head = _HEADER.match(lines[0])
    tail = _TRAILER.match(lines[-1])
    if not head or not tail:
        raise FormatError("malformed report header or trailer")
    n, m, k = (int(x) for x in head.groups()[:3])
    report = ReductionReport(k, Mode(head.group(4)), n, m)
    for ln in lines[1:-1]:
        kind, u, v, *rest = ln.split(maxsplit=3)
        e = Edge(int(u), int(v))
        if kind == "removed":
            report.removed.append(e)
        elif kind == "skipped":
            reason = rest[0] if rest else ""
            side = _SIDE.search(reason)
            if side:
                cut = CutCertificate(
                    frozenset(Edge(int(a), int(b)) for a, b in _CUT_EDGE.findall(reason)),
                    frozenset(int(x) for x in side.group(1).split(",")),
                )
                skip = Skip(e, reason.split()[0], cut)
                report.skipped.append(skip)
                report.deviations.append(skip)
            else:
                report.skipped.append(Skip(e, reason))
        else:
            raise FormatError(f"unknown report line {ln!r}")
    report.final_minimal = {"yes": True, "no": False, "unchecked": None}[tail.group(2)]
    if report.final_m != int(tail.group(1)):
        raise FormatError("final_edges disagrees with header and removed lines")
    return report
