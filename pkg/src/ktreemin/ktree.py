"""k-tree construction, recognition and clique census."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .graph import Edge, Graph, GraphError


class TraceError(ValueError):
    """A construction trace that does not describe a valid k-tree."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message if step is None else f"step {step}: {message}")
        self.step = step


@dataclass(frozen=True)
class KTreeTrace:
    """Base clique plus ordered attachments.

    ``additions[i] = (new_vertex, attach)`` joins ``new_vertex`` to the k
    vertices of ``attach``, which must already form a clique.
    """

    k: int
    base: tuple[int, ...]
    additions: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(sorted(self.base)))
        object.__setattr__(
            self, "additions", tuple((v, tuple(sorted(att))) for v, att in self.additions)
        )

    @property
    def n(self) -> int:
        return self.k + 1 + len(self.additions)

    def cliques(self) -> list[frozenset[int]]:
        """The (k+1)-cliques created by the construction, one per step."""
        out = [frozenset(self.base)]
        out.extend(frozenset(att) | {v} for v, att in self.additions)
        return out


@dataclass(frozen=True)
class RecognitionFailure:
    reason: str
    remaining: int

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"{self.reason} ({self.remaining} vertices remaining)"


@dataclass
class EdgeCliqueIndex:
    k: int
    counts: dict[Edge, int] = field(default_factory=dict)

    def shared(self) -> list[Edge]:
        """Edges lying in more than one (k+1)-clique, sorted."""
        return sorted(e for e, c in self.counts.items() if c > 1)


def build_ktree(trace: KTreeTrace) -> Graph:
    k = trace.k
    if k < 1:
        raise TraceError(f"k must be positive, got {k}")
    if len(set(trace.base)) != k + 1:
        raise TraceError(f"base must hold {k + 1} distinct ids, got {list(trace.base)}", 0)
    n = trace.n
    present = set(trace.base)
    for v in present:
        if not 0 <= v < n:
            raise TraceError(f"base id {v} outside 0..{n - 1}", 0)
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in itertools.combinations(trace.base, 2):
        adj[a].add(b)
        adj[b].add(a)
    for step, (v, attach) in enumerate(trace.additions, start=1):
        if not 0 <= v < n:
            raise TraceError(f"vertex {v} outside 0..{n - 1}", step)
        if v in present:
            raise TraceError(f"vertex {v} already present", step)
        if len(set(attach)) != k:
            raise TraceError(f"attach set {list(attach)} does not have {k} distinct ids", step)
        for a in attach:
            if a not in present:
                raise TraceError(f"attach vertex {a} not yet present", step)
        for a, b in itertools.combinations(attach, 2):
            if b not in adj[a]:
                raise TraceError(f"attach set {list(attach)} is not a clique (missing {a}-{b})", step)
        for a in attach:
            adj[a].add(v)
            adj[v].add(a)
        present.add(v)
    return Graph(n, adj)


def _is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    adj = g.adjacency
    return all(b in adj[a] for a, b in itertools.combinations(vertices, 2))


def simplicial_vertices(g: Graph) -> set[int]:
    return {v for v in g.vertices() if _is_clique(g, sorted(g.adjacency[v]))}


def recognize_ktree(g: Graph, k: int) -> KTreeTrace | RecognitionFailure:
    """Decide whether ``g`` is a k-tree by simplicial elimination.

    Repeatedly deletes the smallest-id simplicial vertex of degree exactly k
    until k+1 vertices remain, then requires the remainder to be complete.
    On success the returned trace rebuilds ``g`` with its own vertex ids.
    """
    n = g.n
    if k < 1:
        return RecognitionFailure(f"k must be positive, got {k}", n)
    if n < k + 1:
        return RecognitionFailure(f"need at least {k + 1} vertices", n)
    if g.m != comb(k + 1, 2) + k * (n - k - 1):
        return RecognitionFailure(
            f"edge count {g.m} differs from {comb(k + 1, 2) + k * (n - k - 1)}", n
        )
    adj = [set(nb) for nb in g.adjacency]
    alive = [True] * n
    heap = [v for v in range(n) if len(adj[v]) == k]
    heapq.heapify(heap)
    eliminated: list[tuple[int, tuple[int, ...]]] = []
    remaining = n
    # Edges among a degree-k vertex's neighbors are never added, so a
    # non-simplicial candidate can be dropped for good.
    while remaining > k + 1:
        v = None
        while heap:
            c = heapq.heappop(heap)
            if alive[c] and len(adj[c]) == k and all(
                b in adj[a] for a, b in itertools.combinations(adj[c], 2)
            ):
                v = c
                break
        if v is None:
            return RecognitionFailure(f"no simplicial vertex of degree {k}", remaining)
        nbrs = tuple(sorted(adj[v]))
        eliminated.append((v, nbrs))
        alive[v] = False
        remaining -= 1
        for a in nbrs:
            adj[a].discard(v)
            if len(adj[a]) == k:
                heapq.heappush(heap, a)
        adj[v].clear()
    base = [v for v in range(n) if alive[v]]
    if not _is_clique(g, base):
        return RecognitionFailure(f"final {k + 1} vertices are not a clique", remaining)
    return KTreeTrace(k, tuple(base), tuple(reversed(eliminated)))


def is_ktree(g: Graph, k: int) -> bool:
    return isinstance(recognize_ktree(g, k), KTreeTrace)


def enumerate_cliques(
    g: Graph, size: int, trace: KTreeTrace | None = None
) -> set[frozenset[int]]:
    """All vertex sets of ``size`` vertices inducing a complete subgraph.

    With a trace and ``size == trace.k + 1`` the answer is read off the
    construction (one clique per step); otherwise cliques are grown from
    increasing vertex ids.
    """
    if size < 1:
        raise GraphError(f"clique size must be positive, got {size}")
    if trace is not None and size == trace.k + 1 and trace.n == g.n:
        return set(trace.cliques())
    adj = g.adjacency
    out: set[frozenset[int]] = set()

    def grow(clique: list[int], candidates: list[int]) -> None:
        if len(clique) == size:
            out.add(frozenset(clique))
            return
        need = size - len(clique)
        for i, v in enumerate(candidates):
            if len(candidates) - i < need:
                break
            nb = adj[v]
            clique.append(v)
            grow(clique, [w for w in candidates[i + 1:] if w in nb])
            clique.pop()

    for v in g.vertices():
        grow([v], sorted(w for w in adj[v] if w > v))
    return out


def edge_clique_index(g: Graph, k: int, trace: KTreeTrace | None = None) -> EdgeCliqueIndex:
    counts = {e: 0 for e in g.edges()}
    for clique in enumerate_cliques(g, k + 1, trace):
        for a, b in itertools.combinations(sorted(clique), 2):
            counts[Edge(a, b)] += 1
    return EdgeCliqueIndex(k, counts)


def format_trace(trace: KTreeTrace) -> str:
    lines = [str(trace.k), " ".join(map(str, trace.base))]
    lines.extend(f"{v}: {' '.join(map(str, att))}" for v, att in trace.additions)
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> KTreeTrace:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise TraceError("trace needs a k line and a base line")
    try:
        k = int(lines[0])
        base = tuple(int(t) for t in lines[1].split())
        additions = []
        for ln in lines[2:]:
            head, sep, rest = ln.partition(":")
            if not sep:
                raise TraceError(f"malformed addition line {ln!r}")
            additions.append((int(head), tuple(int(t) for t in rest.split())))
    except ValueError as exc:
        if isinstance(exc, TraceError):
            raise
        raise TraceError(f"non-integer token: {exc}") from exc
    return KTreeTrace(k, base, tuple(additions))
