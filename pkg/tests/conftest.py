import itertools
import random

import pytest

from ktreemin.graph import Edge, Graph, from_edge_list

FINDINGS: list[str] = []
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if FINDINGS:
        terminalreporter.section("findings")
        for line in FINDINGS:
            terminalreporter.write_line(line)
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            ok, detail = ACCEPTANCE[num]
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")


# Small named graphs -------------------------------------------------------

@pytest.fixture
def two_tree4():
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


@pytest.fixture
def path_two_tree5():
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


# Independent oracles -------------------------------------------------------

def brute_cliques(g: Graph, size: int) -> set[frozenset[int]]:
    return {
        frozenset(c)
        for c in itertools.combinations(range(g.n), size)
        if all(g.has_edge(a, b) for a, b in itertools.combinations(c, 2))
    }


def brute_local_cut(g: Graph, u: int, v: int) -> int:
    """Smallest edge set separating u from v, by subset enumeration."""
    edges = g.edges()
    for size in range(len(edges) + 1):
        for drop in itertools.combinations(edges, size):
            dropped = set(drop)
            seen, stack = {u}, [u]
            while stack:
                a = stack.pop()
                for b in g.adjacency[a]:
                    if b not in seen and Edge.of(a, b) not in dropped:
                        seen.add(b)
                        stack.append(b)
            if v not in seen:
                return size
    raise AssertionError("unreachable")


def random_connected_graph(rng: random.Random, max_n: int = 8, max_m: int = 14) -> Graph:
    n = rng.randint(2, max_n)
    order = list(range(n))
    rng.shuffle(order)
    edges = {Edge.of(order[i], order[rng.randrange(i)]) for i in range(1, n)}
    others = [Edge(a, b) for a, b in itertools.combinations(range(n), 2) if Edge(a, b) not in edges]
    rng.shuffle(others)
    extra = rng.randint(0, max(0, min(max_m, n * (n - 1) // 2) - len(edges)))
    edges.update(others[:extra])
    return from_edge_list(n, sorted(edges))


def connected_corpus(count: int = 200, seed: int = 2024) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng) for _ in range(count)]
