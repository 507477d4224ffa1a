import itertools
import random
from fractions import Fraction

import pytest
from helpers import corpus, fig1, fig22, random_regular

from evoalg import graph as G
from evoalg.algebra import from_graph, from_random_walk
from evoalg.errors import NotRegular, SingularStructureMatrix, SizeBoundExceeded
from evoalg.graph import classify, graph_automorphisms
from evoalg.iso import (
    aut_element_map,
    aut_group,
    aut_to_rw_iso,
    condpi_solve,
    cycle_notation,
    decide_iso,
    inverse_permutation,
    monomial_iso_search,
    rw_iso_to_aut,
    satisfies_support_condition,
    verify_witness,
)
from evoalg.linalg import det
from evoalg.maps import LinearMap, compose, is_homomorphism, is_isomorphism
from evoalg.radical import RadicalScalar as R

SHIFT5 = (1, 2, 3, 4, 0)


def test_c5_shift_scalars():
    sol = condpi_solve(G.cycle(5), SHIFT5)
    assert sol is not None and sol.alphas == (R(Fraction(1, 2)),) * 5
    assert is_isomorphism(sol.to_map(G.cycle(5)))


def test_c5_transposition_rejected():
    assert condpi_solve(G.cycle(5), (2, 1, 0, 3, 4)) is None
    assert not satisfies_support_condition(G.cycle(5), (2, 1, 0, 3, 4))


def test_c5_family_is_dihedral():
    fam = monomial_iso_search(G.cycle(5))
    assert len(fam) == 10
    assert {s.pi for s in fam} == set(graph_automorphisms(G.cycle(5)))


def test_regular_identity_scalars():
    rng = random.Random(4)
    for _ in range(8):
        g = random_regular(rng, 10)
        d = g.degrees[0]
        sol = condpi_solve(g, tuple(range(g.n)))
        assert sol is not None and sol.alphas == (R(Fraction(1, d)),) * g.n


def test_monomial_search_is_sound():
    for g in (G.cycle(5), fig1(), G.complete_bipartite(2, 3), G.path(4)):
        for s in monomial_iso_search(g):
            assert is_isomorphism(s.to_map(g))


def test_support_condition_iff_automorphism():
    for g in corpus(5):
        auts = set(graph_automorphisms(g))
        for pi in itertools.permutations(range(g.n)):
            assert satisfies_support_condition(g, pi) == (pi in auts)


def _nonsingular_corpus(max_n):
    return [g for g in corpus(max_n) if det(g.adjacency) != 0]


def test_nonsingular_monomial_iff_regular_or_biregular():
    for g in _nonsingular_corpus(6):
        cls = classify(g)
        found = bool(monomial_iso_search(g))
        assert found == (cls.is_regular or cls.is_biregular), g.label()


def test_aut_group_c5():
    elems = aut_group(from_graph(G.cycle(5)))
    assert len(elems) == 10
    assert all(al == (R(1),) * 5 for _, al in elems)


def test_aut_group_k2():
    assert len(aut_group(from_graph(G.complete(2)))) == 2


def test_aut_group_closed_under_composition():
    alg = from_graph(G.cycle(5))
    maps = [aut_element_map(alg, pi, al) for pi, al in aut_group(alg)]
    keys = {m.T for m in maps}
    for f in maps:
        assert is_isomorphism(f)
        for g in maps:
            assert compose(f, g).T in keys


def test_aut_group_random_walk_algebra():
    alg = from_random_walk(G.friendship(2))
    for pi, al in aut_group(alg):
        assert is_isomorphism(aut_element_map(alg, pi, al))


def test_aut_group_singular_raises():
    with pytest.raises(SingularStructureMatrix):
        aut_group(from_graph(G.complete_bipartite(2, 2)))


def test_rw_iso_aut_roundtrip():
    for g in (G.cycle(5), G.complete(4), fig22()):
        d = g.degrees[0]
        f = LinearMap.diagonal(from_random_walk(g), from_graph(g), [Fraction(1, d)] * g.n)
        a = rw_iso_to_aut(f, d)
        assert a.source == a.target == from_graph(g)
        assert is_homomorphism(a)
        back = aut_to_rw_iso(a, d)
        assert back.T == f.T and back.source.C == f.source.C
        assert is_isomorphism(back)


def test_rw_iso_to_aut_rejects_irregular():
    g = fig1()
    f = LinearMap.identity(from_random_walk(g), from_graph(g))
    with pytest.raises(NotRegular):
        rw_iso_to_aut(f, 3)


def test_decide_iso_mechanisms():
    assert decide_iso(G.cycle(5)).summary() == "Isomorphic(regular)"
    assert decide_iso(fig1()).summary() == "Isomorphic(biregular)"
    assert decide_iso(G.friendship(3)).summary() == "OnlyNullHomomorphism"
    v = decide_iso(fig22())
    assert verify_witness(v) and v.singular


def test_decide_iso_undecided_has_evidence():
    v = decide_iso(G.double_star_tree(2, 2), restarts=5)
    assert v.kind == "undecided" and v.singular
    assert v.evidence["restarts"] == 5
    assert v.to_json()["verdict"] == "undecided"


def test_decide_iso_size_bound(monkeypatch):
    monkeypatch.setenv("EVOALG_SIZE_BOUND", "4")
    with pytest.raises(SizeBoundExceeded):
        decide_iso(G.cycle(5))


def test_cycle_notation():
    assert cycle_notation((0, 1, 2)) == "()"
    assert cycle_notation(SHIFT5) == "(1 2 3 4 5)"
    assert cycle_notation((2, 1, 0)) == "(1 3)"
    assert inverse_permutation(SHIFT5) == (4, 0, 1, 2, 3)
