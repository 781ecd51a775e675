"""Reduce 2-trees and k-trees to minimally k-edge-connected graphs.

``reduce_two_tree`` deletes, in one batch, every edge lying in more than one
triangle of the input. ``reduce_k_tree`` walks the edges between high-degree
vertices in degree order and deletes each one whose endpoints still have
degree at least k+1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from .connectivity import CutCertificate, is_k_edge_connected, is_minimally_k_edge_connected
from .graph import Edge, Graph, remove_edges
from .ktree import KTreeTrace, edge_clique_index, recognize_ktree

log = logging.getLogger(__name__)


class PreconditionError(ValueError):
    pass


class Mode(str, Enum):
    FAITHFUL = "paper-faithful"
    VERIFIED = "verified"


@dataclass(frozen=True)
class Skip:
    edge: Edge
    reason: str
    cut: CutCertificate | None = None

    def describe(self) -> str:
        if self.cut is None:
            return self.reason
        side = ",".join(map(str, sorted(self.cut.side)))
        return f"{self.reason} side={side} cut={self.cut.describe().replace(' ', '')}"


@dataclass
class ReductionReport:
    k: int
    mode: Mode
    input_n: int
    input_m: int
    removed: list[Edge] = field(default_factory=list)
    skipped: list[Skip] = field(default_factory=list)
    deviations: list[Skip] = field(default_factory=list)
    final_minimal: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def final_m(self) -> int:
        return self.input_m - len(self.removed)

    def format(self) -> str:
        lines = [f"n={self.input_n} m={self.input_m} k={self.k} mode={self.mode.value}"]
        lines.extend(f"removed {e.u} {e.v}" for e in self.removed)
        lines.extend(f"skipped {s.edge.u} {s.edge.v} {s.describe()}" for s in self.skipped)
        verdict = {None: "unchecked", True: "yes", False: "no"}[self.final_minimal]
        lines.append(f"final_edges={self.final_m} minimal={verdict}")
        return "\n".join(lines) + "\n"


def _require_ktree(g: Graph, k: int) -> KTreeTrace:
    trace = recognize_ktree(g, k)
    if not isinstance(trace, KTreeTrace):
        raise PreconditionError(f"input is not a {k}-tree: {trace}")
    return trace


def _finish(g: Graph, report: ReductionReport, check_minimal: bool) -> tuple[Graph, ReductionReport]:
    if check_minimal:
        report.final_minimal = is_minimally_k_edge_connected(g, report.k).minimal
    return g, report


def reduce_two_tree(
    g: Graph, check_minimal: bool = False, trace: KTreeTrace | None = None
) -> tuple[Graph, ReductionReport]:
    report = ReductionReport(2, Mode.FAITHFUL, g.n, g.m)
    if trace is None:
        trace = _require_ktree(g, 2)
    if g.n < 4:
        report.notes.append("fewer than 4 vertices: returned unchanged")
        return _finish(g, report, check_minimal)
    index = edge_clique_index(g, 2, trace)
    report.removed = index.shared()
    out = remove_edges(g, report.removed)
    return _finish(out, report, check_minimal)


def degree_order(g: Graph) -> list[int]:
    """Vertices by (degree, id) ascending."""
    return sorted(g.vertices(), key=lambda v: (len(g.adjacency[v]), v))


def candidate_edges(g: Graph, k: int, order: list[int] | None = None) -> list[Edge]:
    """Edges whose endpoints both have degree >= k+1, in nested-loop order.

    The outer loop walks ``order``; the inner loop walks later positions.
    """
    if order is None:
        order = degree_order(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = g.adjacency
    high = [v for v in order if len(adj[v]) >= k + 1]
    out = []
    for s in high:
        later = sorted(
            (w for w in adj[s] if pos[w] > pos[s] and len(adj[w]) >= k + 1), key=pos.__getitem__
        )
        out.extend(Edge.of(s, w) for w in later)
    return out


def reduce_k_tree(
    g: Graph,
    k: int,
    mode: Mode | str = Mode.FAITHFUL,
    check_minimal: bool = False,
    order: list[int] | None = None,
    trace: KTreeTrace | None = None,
) -> tuple[Graph, ReductionReport]:
    """Degree-guarded edge deletion.

    The candidate list is fixed from initial degrees; the guard re-reads the
    current degrees after every deletion. In verified mode a deletion that
    would drop edge connectivity below k is skipped and recorded with its
    cut. ``order`` overrides the (degree, id) vertex order.
    """
    mode = Mode(mode)
    report = ReductionReport(k, mode, g.n, g.m)
    if trace is None:
        trace = _require_ktree(g, k)
    if g.n < k + 2:
        report.notes.append(f"fewer than {k + 2} vertices: returned unchanged")
        return _finish(g, report, check_minimal)

    adj = [set(nb) for nb in g.adjacency]
    current = g
    for e in candidate_edges(g, k, order):
        if len(adj[e.u]) < k + 1 or len(adj[e.v]) < k + 1:
            report.skipped.append(Skip(e, "degree"))
            continue
        if mode is Mode.VERIFIED:
            trial = remove_edges(current, [e])
            ok, cut = is_k_edge_connected(trial, k)
            if not ok:
                skip = Skip(e, "cut", cut)
                report.skipped.append(skip)
                report.deviations.append(skip)
                log.info("skipping %s: removal leaves a %d-edge cut", e, len(cut))
                continue
            current = trial
        adj[e.u].discard(e.v)
        adj[e.v].discard(e.u)
        report.removed.append(e)

    out = current if mode is Mode.VERIFIED else Graph(g.n, adj)
    return _finish(out, report, check_minimal)


def check_f_bounds(n: int, f_size: int) -> bool:
    return 1 <= f_size <= n - 3
