"""Edge connectivity with cut certificates, and the minimality oracle.

Global minimum cuts come from unit-capacity augmenting-path max-flow between
vertex 0 and every other vertex. The exhaustive ``brute_force_edge_connectivity``
shares no code with the flow path and serves as its oracle.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from .graph import Edge, Graph, GraphError, components, remove_edge, remove_edges

BRUTE_FORCE_EDGE_LIMIT = 16


class OracleLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class CutCertificate:
    cut_edges: frozenset[Edge]
    side: frozenset[int]

    @classmethod
    def from_side(cls, g: Graph, side: set[int] | frozenset[int]) -> CutCertificate:
        side = frozenset(side)
        if not side or len(side) >= g.n:
            raise GraphError("cut side must be a proper nonempty vertex subset")
        crossing = frozenset(
            Edge.of(u, w) for u in side for w in g.adjacency[u] if w not in side
        )
        return cls(crossing, side)

    def is_valid_for(self, g: Graph) -> bool:
        """Recompute crossing edges and check the removal separates ``side``."""
        if not self.side or len(self.side) >= g.n:
            return False
        if self.cut_edges != CutCertificate.from_side(g, self.side).cut_edges:
            return False
        rest = remove_edges(g, self.cut_edges)
        comp = next(c for c in components(rest) if next(iter(self.side)) in c)
        return comp <= self.side

    def __len__(self) -> int:
        return len(self.cut_edges)

    def describe(self) -> str:
        return " ".join(str(e) for e in sorted(self.cut_edges))


@dataclass(frozen=True)
class ConnectivityVerdict:
    """``lam`` is ``math.inf`` (and ``witness`` None) for a single vertex."""

    lam: int | float
    witness: CutCertificate | None

    @property
    def trivial(self) -> bool:
        return self.witness is None


def _max_flow(g: Graph, s: int, t: int, cap: int | None = None) -> tuple[int, set[int]]:
    """Edge-disjoint s-t path count (stopping at ``cap``) and the source side.

    The source side is only a minimum cut when the returned flow is below
    ``cap`` or no cap was given.
    """
    # residual[u][w] in {0, 1, 2}; each undirected edge starts with 1 each way
    residual = [dict.fromkeys(nb, 1) for nb in g.adjacency]
    flow = 0
    while cap is None or flow < cap:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for w, r in residual[u].items():
                if r > 0 and w not in parent:
                    parent[w] = u
                    queue.append(w)
        if t not in parent:
            return flow, set(parent)
        w = t
        while w != s:
            u = parent[w]
            residual[u][w] -= 1
            residual[w][u] += 1
            w = u
        flow += 1
    return flow, set()


def local_edge_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of pairwise edge-disjoint u-v paths."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError("local edge connectivity needs two distinct vertices")
    return _max_flow(g, u, v)[0]


def _min_cut(g: Graph, below: int | None = None) -> ConnectivityVerdict:
    if g.n <= 1:
        return ConnectivityVerdict(math.inf, None)
    comps = components(g)
    if len(comps) > 1:
        return ConnectivityVerdict(0, CutCertificate.from_side(g, comps[0]))
    best, best_side = math.inf, None
    for t in range(1, g.n):
        cap = below if below is not None else None
        if best_side is not None:
            cap = best if cap is None else min(cap, best)
        f, side = _max_flow(g, 0, t, cap)
        if side and f < best:
            best, best_side = f, side
            if below is not None and f < below:
                break
    if best_side is None:
        # Early-capped at every sink: lambda >= below, exact value not needed.
        return ConnectivityVerdict(below, None)
    return ConnectivityVerdict(best, CutCertificate.from_side(g, best_side))


def edge_connectivity(g: Graph) -> ConnectivityVerdict:
    if g.n < 1:
        raise GraphError("edge connectivity needs at least one vertex")
    return _min_cut(g)


def is_k_edge_connected(g: Graph, k: int) -> tuple[bool, CutCertificate | None]:
    """``(True, None)`` or ``(False, cut)`` with ``len(cut) < k``."""
    if g.n < 2:
        raise GraphError("k-edge-connectivity is only defined here for n >= 2")
    if k <= 0:
        return True, None
    verdict = _min_cut(g, below=k)
    if verdict.lam < k:
        return False, verdict.witness
    return True, None


def is_insensitive(g: Graph, e: Edge, k: int) -> bool:
    return is_k_edge_connected(remove_edge(g, e), k)[0]


@dataclass(frozen=True)
class MinimalityVerdict:
    minimal: bool
    k_connected: bool
    cut: CutCertificate | None
    insensitive: tuple[Edge, ...]

    def __bool__(self) -> bool:
        return self.minimal


def is_minimally_k_edge_connected(g: Graph, k: int) -> MinimalityVerdict:
    ok, cut = is_k_edge_connected(g, k)
    if not ok:
        return MinimalityVerdict(False, False, cut, ())
    insensitive = tuple(e for e in g.edges() if is_insensitive(g, e, k))
    return MinimalityVerdict(not insensitive, True, None, insensitive)


def brute_force_edge_connectivity(g: Graph) -> int | float:
    """Smallest disconnecting edge set, by exhaustive subset search."""
    edges = g.edges()
    if len(edges) > BRUTE_FORCE_EDGE_LIMIT:
        raise OracleLimitError(
            f"brute force refuses {len(edges)} edges (limit {BRUTE_FORCE_EDGE_LIMIT})"
        )
    if g.n <= 1:
        return math.inf

    def connected_without(dropped: set[Edge]) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w not in seen and Edge.of(u, w) not in dropped:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == g.n

    for size in range(len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            if not connected_without(set(subset)):
                return size
    # Unreachable for n >= 2: dropping every edge disconnects.
    raise AssertionError("no disconnecting set found")
