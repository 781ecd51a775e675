"""Simple undirected graphs on dense vertex ids ``0..n-1``.

Graphs are immutable values. Mutating operations (``remove_edge``,
``add_edge``, ``remove_edges``) return new graphs and leave the input alone.
Loops and parallel edges are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph input: bad vertex id, loop, duplicate or missing edge."""


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise GraphError(f"self-loop at vertex {self.u}")
        if self.u > self.v:
            raise GraphError(f"edge ({self.u},{self.v}) is not canonical; use Edge.of")

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        """Canonical edge between ``a`` and ``b`` regardless of argument order."""
        return cls(a, b) if a < b else cls(b, a)

    def __iter__(self):
        yield self.u
        yield self.v

    def __str__(self) -> str:
        return f"({self.u},{self.v})"


class Graph:
    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]] | None = None):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if adjacency is None:
            adj = tuple(frozenset() for _ in range(n))
        else:
            adj = tuple(frozenset(nb) for nb in adjacency)
            if len(adj) != n:
                raise GraphError(f"adjacency has {len(adj)} rows, expected {n}")
            for u, nb in enumerate(adj):
                for v in nb:
                    if not 0 <= v < n:
                        raise GraphError(f"neighbor {v} of vertex {u} out of range 0..{n - 1}")
                    if v == u:
                        raise GraphError(f"self-loop at vertex {u}")
                    if u not in adj[v]:
                        raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self._n = n
        self._adj = adj
        self._m = sum(len(nb) for nb in adj) // 2

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self._n and b in self._adj[a]

    def edges(self) -> list[Edge]:
        return [Edge(u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v]

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._adj]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def _with_rows(g: Graph, rows: dict[int, frozenset[int]]) -> Graph:
    # Bypasses validation; callers guarantee symmetry.
    new = Graph.__new__(Graph)
    adj = list(g.adjacency)
    for v, nb in rows.items():
        adj[v] = nb
    new._n = g.n
    new._adj = tuple(adj)
    new._m = sum(len(nb) for nb in new._adj) // 2
    return new


def remove_edge(g: Graph, e: Edge) -> Graph:
    if not g.has_edge(e.u, e.v):
        raise GraphError(f"edge {e} not present")
    adj = g.adjacency
    return _with_rows(g, {e.u: adj[e.u] - {e.v}, e.v: adj[e.v] - {e.u}})


def add_edge(g: Graph, e: Edge) -> Graph:
    g._check_vertex(e.u)
    g._check_vertex(e.v)
    if g.has_edge(e.u, e.v):
        raise GraphError(f"edge {e} already present")
    adj = g.adjacency
    return _with_rows(g, {e.u: adj[e.u] | {e.v}, e.v: adj[e.v] | {e.u}})


def remove_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Remove a batch of edges; every edge must be present and listed once."""
    adj = [set(nb) for nb in g.adjacency]
    for e in edges:
        if e.v not in adj[e.u]:
            raise GraphError(f"edge {e} not present")
        adj[e.u].discard(e.v)
        adj[e.v].discard(e.u)
    return _with_rows(g, {v: frozenset(nb) for v, nb in enumerate(adj)})


def from_edge_list(n: int, edges: Iterable[Edge | tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for item in edges:
        a, b = item
        if a == b:
            raise GraphError(f"self-loop ({a},{b})")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge ({a},{b}) has an endpoint outside 0..{n - 1}")
        if b in adj[a]:
            raise GraphError(f"duplicate edge ({min(a, b)},{max(a, b)})")
        adj[a].add(b)
        adj[b].add(a)
    return Graph(n, adj)


def to_edge_list(g: Graph) -> list[Edge]:
    return g.edges()


def complete_graph(n: int) -> Graph:
    return Graph(n, [set(range(n)) - {v} for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [Edge.of(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [Edge(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    return from_edge_list(a + b, [Edge(i, a + j) for i in range(a) for j in range(b)])


def components(g: Graph) -> list[set[int]]:
    seen = [False] * g.n
    out = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1
