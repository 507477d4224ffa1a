import random

import pytest
from helpers import corpus, fig1, random_connected
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_force_automorphisms, networkx_edges, networkx_graph6

from evoalg import graph as G
from evoalg.errors import (
    Disconnected,
    DuplicateEdge,
    GraphError,
    MalformedGraph6,
    MalformedLine,
    SelfLoop,
    SizeBoundExceeded,
    VertexOutOfRange,
)
from evoalg.graph import (
    classify,
    degree,
    graph_automorphisms,
    is_automorphism,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)


def test_triangle_from_edge_list():
    g = parse_edge_list("1 2\n2 3\n3 1")
    assert g.n == 3
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]


def test_fig1_edge_list_degrees():
    text = "\n".join(f"{u} {v}" for u, v in [(1, 5), (1, 8), (1, 10), (2, 5), (2, 6), (2, 9),
                                              (3, 6), (3, 7), (3, 9), (4, 7), (4, 8), (4, 10)])  # fmt: skip
    g = parse_edge_list(text)
    assert g.n == 10
    assert set(g.degrees) == {2, 3}


def test_header_line_and_comments():
    g = parse_edge_list("# a path\nn 3\n1 2\n2 3\n")
    assert g.n == 3 and g.edge_count == 2


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("1 1", SelfLoop, 1),
        ("1 2\n2 1", DuplicateEdge, 2),
        ("1 2\n3 4", Disconnected, None),
        ("1 2\n2 x", MalformedLine, 2),
        ("1 2 3", MalformedLine, 1),
        ("n 3\n1 2\n2 5", MalformedLine, 3),
    ],
)
def test_edge_list_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_edge_list(text)
    if line is not None:
        assert info.value.line == line


def test_single_vertex_rejected():
    with pytest.raises(GraphError, match="at least 2 vertices"):
        parse_edge_list("n 1\n")
    with pytest.raises(MalformedGraph6):
        parse_graph6("@")


def test_graph6_c5_against_networkx():
    c5 = G.cycle(5)
    ref = networkx_graph6(5, c5.edges())
    assert to_graph6(c5) == ref
    g = parse_graph6(ref)
    assert g.n == 5 and g.edge_count == 5 and set(g.degrees) == {2}


def test_graph6_empty_line():
    with pytest.raises(MalformedGraph6):
        parse_graph6("")


def test_graph6_disconnected():
    with pytest.raises(Disconnected):
        parse_graph6(networkx_graph6(4, [(0, 1), (2, 3)]))


def test_graph6_bad_length():
    with pytest.raises(MalformedGraph6):
        parse_graph6("Dh")


def test_graph6_roundtrip_on_corpus():
    for line in (corpus(7)[i] for i in range(0, 995, 7)):
        text = to_graph6(line)
        assert to_graph6(parse_graph6(text)) == text
        n, edges = networkx_edges(text)
        assert n == line.n and edges == line.edges()


def test_corpus_roundtrip_bytes():
    from helpers import CORPUS

    for text in CORPUS.read_text().split():
        assert to_graph6(parse_graph6(text)) == text


def test_classify_examples():
    assert classify(G.cycle(5)).summary() == "Regular(2)"
    cls = classify(fig1())
    assert (cls.kind, cls.d1, cls.d2) == ("biregular", 3, 2)
    assert sorted(cls.part1) == [0, 1, 2, 3]
    assert classify(G.friendship(2)).kind == "neither"


def test_regular_bipartite_reports_both():
    cls = classify(G.complete_bipartite(3, 3))
    assert cls.is_regular and cls.is_biregular
    assert cls.summary() == "Regular(3); also Biregular(3,3)"


def test_degree_examples():
    assert degree(G.friendship(2), 4) == 4
    assert degree(G.cycle(5), 0) == 2
    assert degree(G.complete_bipartite(6, 3), 6) == 6
    with pytest.raises(VertexOutOfRange):
        degree(G.cycle(5), 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_biregular_edge_count_identity(seed):
    g = random_connected(random.Random(seed), 2, 9)
    cls = classify(g)
    if cls.is_biregular:
        assert len(cls.part1) * cls.d1 == len(cls.part2) * cls.d2
        for u, v in g.edges():
            assert (u in cls.part1) != (v in cls.part1)


def test_automorphisms_small():
    assert len(graph_automorphisms(G.complete(3))) == 6
    assert graph_automorphisms(G.path(3)) == [(0, 1, 2), (2, 1, 0)]


def test_c5_automorphisms_match_brute_force():
    c5 = G.cycle(5)
    assert graph_automorphisms(c5) == sorted(brute_force_automorphisms(c5.adjacency))
    assert len(graph_automorphisms(c5)) == 10


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_automorphisms_match_brute_force(seed):
    g = random_connected(random.Random(seed), 2, 6)
    auts = graph_automorphisms(g)
    assert auts == sorted(brute_force_automorphisms(g.adjacency))
    assert all(is_automorphism(g, p) for p in auts)


def test_automorphisms_form_a_group():
    auts = set(graph_automorphisms(G.from_one_based(6, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)])))
    assert tuple(range(6)) in auts
    for p in auts:
        inv = tuple(sorted(range(6), key=lambda i: p[i]))
        assert inv in auts
        for q in auts:
            assert tuple(q[p[i]] for i in range(6)) in auts


def test_automorphism_size_bound(monkeypatch):
    monkeypatch.setenv("EVOALG_SIZE_BOUND", "4")
    with pytest.raises(SizeBoundExceeded):
        graph_automorphisms(G.cycle(5))
