import itertools

import networkx as nx
import pytest
from hypothesis import given

from trianglefree.enumeration import enumerate_all
from trianglefree.families import make_complete_bipartite, make_cycle, make_path
from trianglefree.graph import CapacityError, graph_new
from trianglefree.properties import (
    BipartitenessCertificate,
    diameter,
    find_triangle,
    has_hamiltonian_path,
    has_three_equal_degrees,
    is_bipartite,
    is_triangle_free,
)

from conftest import graphs, labeled_graphs, to_nx

K3 = graph_new(3, [(0, 1), (1, 2), (0, 2)])
C5 = make_cycle(5)
K23 = make_complete_bipartite(2, 3)
P3 = make_path(3)
STAR3 = make_complete_bipartite(1, 3)


def brute_triangles(g):
    return [t for t in itertools.combinations(range(g.n), 3)
            if g.has_edge(t[0], t[1]) and g.has_edge(t[0], t[2]) and g.has_edge(t[1], t[2])]


def brute_ham_path(g):
    return any(all(g.has_edge(p[i], p[i + 1]) for i in range(g.n - 1))
               for p in itertools.permutations(range(g.n)))


def test_triangle_examples():
    assert find_triangle(K3).as_tuple() == (0, 1, 2)
    assert find_triangle(C5) is None
    assert find_triangle(K23) is None


@pytest.mark.parametrize("n", range(1, 7))
def test_find_triangle_matches_brute_force_labeled(n):
    for g in labeled_graphs(n):
        expected = brute_triangles(g)
        found = find_triangle(g)
        assert (found.as_tuple() if found else None) == (expected[0] if expected else None)
        assert is_triangle_free(g) == (not expected)


def test_find_triangle_matches_brute_force_n7():
    for g in enumerate_all(7):
        expected = brute_triangles(g)
        found = find_triangle(g)
        assert (found.as_tuple() if found else None) == (expected[0] if expected else None)


def test_bipartite_examples():
    cert = is_bipartite(K23)
    assert cert.bipartite and cert.validate(K23)
    assert sorted([cert.side.bit_count(), 5 - cert.side.bit_count()]) == [2, 3]
    cert = is_bipartite(C5)
    assert not cert.bipartite and len(cert.odd_cycle) == 5 and cert.validate(C5)
    assert is_bipartite(graph_new(1, [])).validate(graph_new(1, []))


@given(graphs(max_n=12))
def test_certificate_soundness(g):
    cert = is_bipartite(g)
    assert cert.validate(g)
    assert cert.bipartite == nx.is_bipartite(to_nx(g))
    if cert.bipartite:
        assert is_triangle_free(g)


def test_invalid_certificates_are_rejected():
    assert not BipartitenessCertificate(side=0).validate(P3)
    assert not BipartitenessCertificate(odd_cycle=(0, 1, 2, 3)).validate(make_cycle(4))
    assert not BipartitenessCertificate(odd_cycle=(0, 1, 3)).validate(C5)


def test_diameter_examples():
    assert diameter(C5) == 2
    assert diameter(make_cycle(6)) == 3
    assert diameter(graph_new(2, [])) is None


@pytest.mark.parametrize("n", range(3, 21))
def test_cycle_diameter(n):
    assert diameter(make_cycle(n)) == n // 2


@given(graphs(max_n=10))
def test_diameter_matches_networkx(g):
    G = to_nx(g)
    expected = nx.diameter(G) if nx.is_connected(G) else None
    assert diameter(g) == expected


def test_ham_path_examples():
    assert has_hamiltonian_path(C5)
    assert has_hamiltonian_path(K23)
    assert not has_hamiltonian_path(STAR3)
    assert has_hamiltonian_path(graph_new(1, []))
    assert has_hamiltonian_path(graph_new(2, [(0, 1)]))
    assert not has_hamiltonian_path(graph_new(2, []))


@pytest.mark.parametrize("n", range(1, 6))
def test_ham_path_matches_permutation_search_labeled(n):
    for g in labeled_graphs(n):
        assert has_hamiltonian_path(g) == brute_ham_path(g)


def test_ham_path_matches_permutation_search_n6():
    for g in enumerate_all(6):
        assert has_hamiltonian_path(g) == brute_ham_path(g)


def test_ham_path_capacity():
    with pytest.raises(CapacityError):
        has_hamiltonian_path(make_cycle(21))
    assert has_hamiltonian_path(make_cycle(21), cap=21)


def test_three_equal_degrees():
    assert has_three_equal_degrees(C5)
    assert not has_three_equal_degrees(P3)
    assert has_three_equal_degrees(K23)
