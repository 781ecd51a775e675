from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_cliques
from ktreemin.generators import GenSpec, random_ktree
from ktreemin.graph import Edge, complete_graph, cycle_graph, from_edge_list
from ktreemin.ktree import (
    KTreeTrace,
    RecognitionFailure,
    TraceError,
    build_ktree,
    edge_clique_index,
    enumerate_cliques,
    format_trace,
    parse_trace,
    recognize_ktree,
    simplicial_vertices,
)

THREE_TREE6 = KTreeTrace(3, (0, 1, 2, 3), ((4, (0, 1, 2)), (5, (0, 1, 2))))

ktree_specs = st.builds(
    lambda k, extra, seed: GenSpec(k + 1 + extra, k, seed),
    st.integers(1, 4),
    st.integers(0, 11),
    st.integers(0, 2**64 - 1),
)


def test_build_two_tree4(two_tree4):
    assert build_ktree(KTreeTrace(2, (0, 1, 2), ((3, (0, 1)),))) == two_tree4


def test_build_base_only():
    assert build_ktree(KTreeTrace(3, (0, 1, 2, 3))) == complete_graph(4)


def test_build_three_tree6():
    g = build_ktree(THREE_TREE6)
    assert g.m == 6 + 3 + 3
    # 0,1,2 gain two attachments each; degree sum 24 = 2*12.
    assert sorted(g.degrees()) == [3, 3, 3, 5, 5, 5]
    assert sum(g.degrees()) == 2 * g.m


@pytest.mark.parametrize(
    "trace, step",
    [
        (KTreeTrace(2, (0, 1, 2), ((3, (0, 1)), (3, (0, 2)))), 2),
        (KTreeTrace(2, (0, 1, 2), ((3, (0, 1)), (4, (2, 3)))), 2),
        (KTreeTrace(2, (0, 1, 2), ((3, (0, 5)),)), 1),
        (KTreeTrace(2, (0, 1, 1)), 0),
    ],
)
def test_build_rejects(trace, step):
    with pytest.raises(TraceError) as info:
        build_ktree(trace)
    assert info.value.step == step


def test_recognize_examples(two_tree4):
    t = recognize_ktree(complete_graph(3), 2)
    assert isinstance(t, KTreeTrace) and t.additions == ()
    assert isinstance(recognize_ktree(cycle_graph(4), 2), RecognitionFailure)
    t = recognize_ktree(two_tree4, 2)
    assert len(t.additions) == 1
    assert build_ktree(t) == two_tree4


def test_recognize_deterministic_tiebreak(two_tree4):
    # Vertices 2 and 3 are both eligible; the smaller id goes first.
    t = recognize_ktree(two_tree4, 2)
    assert t == KTreeTrace(2, (0, 1, 3), ((2, (0, 1)),))


def test_recognize_rejections():
    assert not recognize_ktree(complete_graph(4), 2)
    assert not recognize_ktree(complete_graph(2), 2)
    # Right edge count; the only degree-2 vertex (4) has non-adjacent neighbors.
    failure = recognize_ktree(from_edge_list(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (0, 4)]), 2)
    assert isinstance(failure, RecognitionFailure)
    assert "simplicial" in failure.reason


def test_recognize_trees_as_one_trees():
    g = from_edge_list(4, [(0, 1), (1, 2), (1, 3)])
    assert build_ktree(recognize_ktree(g, 1)) == g


def test_simplicial_examples(path_two_tree5):
    assert simplicial_vertices(complete_graph(4)) == {0, 1, 2, 3}
    assert simplicial_vertices(cycle_graph(5)) == set()
    assert simplicial_vertices(path_two_tree5) == {0, 4}


def test_enumerate_cliques_examples(two_tree4):
    assert enumerate_cliques(two_tree4, 3) == {frozenset({0, 1, 2}), frozenset({0, 1, 3})}
    assert len(enumerate_cliques(complete_graph(4), 4)) == 1
    g = build_ktree(THREE_TREE6)
    expected = brute_cliques(g, 4)
    assert len(expected) == 3
    assert enumerate_cliques(g, 4) == expected
    assert enumerate_cliques(g, 4, THREE_TREE6) == expected


def test_enumerate_cliques_bad_size():
    with pytest.raises(ValueError):
        enumerate_cliques(complete_graph(3), 0)


def test_edge_clique_index_examples(two_tree4, path_two_tree5):
    idx = edge_clique_index(two_tree4, 2)
    assert idx.counts == {Edge(0, 1): 2, Edge(0, 2): 1, Edge(1, 2): 1, Edge(0, 3): 1, Edge(1, 3): 1}
    assert set(edge_clique_index(complete_graph(3), 2).counts.values()) == {1}
    idx = edge_clique_index(path_two_tree5, 2)
    assert idx.shared() == [Edge(1, 2), Edge(2, 3)]
    assert all(c == 1 for e, c in idx.counts.items() if e not in (Edge(1, 2), Edge(2, 3)))


def test_trace_text_format():
    text = format_trace(THREE_TREE6)
    assert text == "3\n0 1 2 3\n4: 0 1 2\n5: 0 1 2\n"
    assert parse_trace(text) == THREE_TREE6
    with pytest.raises(TraceError):
        parse_trace("2\n0 1 2\n3 0 1\n")
    with pytest.raises(TraceError):
        parse_trace("x\n0 1 2\n")


@settings(max_examples=60, deadline=None)
@given(ktree_specs)
def test_recognize_built_trace(spec):
    trace = random_ktree(spec)
    g = build_ktree(trace)
    found = recognize_ktree(g, spec.k)
    assert isinstance(found, KTreeTrace)
    assert build_ktree(found) == g
    assert g.m == comb(spec.k + 1, 2) + spec.k * (spec.n - spec.k - 1)


@settings(max_examples=60, deadline=None)
@given(ktree_specs)
def test_clique_census(spec):
    trace = random_ktree(spec)
    g = build_ktree(trace)
    k, n = spec.k, spec.n
    structured = enumerate_cliques(g, k + 1, trace)
    assert len(structured) == n - k
    assert enumerate_cliques(g, k + 1) == structured
    idx = edge_clique_index(g, k)
    assert min(idx.counts.values()) >= 1
    assert sum(idx.counts.values()) == (n - k) * comb(k + 1, 2)


@settings(max_examples=60, deadline=None)
@given(ktree_specs)
def test_two_simplicial_of_degree_k(spec):
    if spec.n < spec.k + 2:
        return
    g = build_ktree(random_ktree(spec))
    low = [v for v in simplicial_vertices(g) if len(g.adjacency[v]) == spec.k]
    assert len(low) >= 2


def test_recognize_is_not_fooled_by_relabeling():
    g = build_ktree(random_ktree(GenSpec(12, 3, 5)))
    perm = [7, 3, 11, 0, 5, 9, 1, 10, 2, 8, 4, 6]
    h = from_edge_list(12, [Edge.of(perm[e.u], perm[e.v]) for e in g.edges()])
    assert build_ktree(recognize_ktree(h, 3)) == h
