import itertools

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from trianglefree.canon import canonical_code
from trianglefree.enumeration import (
    NO_FILTER,
    GenFilter,
    children,
    children_reference,
    enumerate_all,
    enumerate_labeled_oracle,
    enumerate_unit,
    sort_key,
    split_work,
)
from trianglefree.families import isomorphic_small, make_complete_bipartite, make_cycle
from trianglefree.graph import CapacityError
from trianglefree.properties import is_triangle_free

from conftest import to_nx


def codes(graphs):
    return {canonical_code(g) for g in graphs}


def test_examples():
    assert len(enumerate_all(4)) == 11
    assert len(enumerate_all(1)) == 1
    five = enumerate_all(5, GenFilter(triangle_free=True, min_degree_target=2))
    assert len(five) == 2
    assert {canonical_code(g) for g in five} == {canonical_code(make_cycle(5)),
                                                canonical_code(make_complete_bipartite(2, 3))}


def test_oracle_examples():
    assert len(enumerate_labeled_oracle(2)) == 2
    assert len(enumerate_labeled_oracle(3)) == 4
    assert len(enumerate_labeled_oracle(4)) == 11
    with pytest.raises(CapacityError):
        enumerate_labeled_oracle(8)


@pytest.mark.parametrize("n", range(1, 8))
def test_generator_matches_labeled_oracle(n):
    generated = enumerate_all(n)
    assert sorted(canonical_code(g) for g in generated) == enumerate_labeled_oracle(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_generator_matches_networkx_atlas(n):
    atlas = [G for G in graph_atlas_g() if G.number_of_nodes() == n]
    generated = enumerate_all(n)
    assert len(generated) == len(atlas)
    remaining = [to_nx(g) for g in generated]
    for G in atlas:
        hits = [i for i, H in enumerate(remaining) if nx.is_isomorphic(G, H)]
        assert len(hits) == 1
        remaining.pop(hits[0])


@pytest.mark.parametrize("n", range(1, 7))
def test_pairwise_non_isomorphic(n):
    generated = enumerate_all(n)
    for g, h in itertools.combinations(generated, 2):
        assert not isomorphic_small(g, h)


@pytest.mark.parametrize("n", range(1, 7))
def test_triangle_free_filter_sound(n):
    everything = enumerate_all(n)
    filtered = enumerate_all(n, GenFilter(triangle_free=True))
    assert codes(filtered) == codes(g for g in everything if is_triangle_free(g))


@pytest.mark.parametrize("n", range(1, 7))
def test_min_degree_prune_sound(n):
    everything = enumerate_all(n)
    for t in range(n):
        filtered = enumerate_all(n, GenFilter(min_degree_target=t))
        assert codes(filtered) == codes(g for g in everything if min(g.degrees()) >= t)
        both = enumerate_all(n, GenFilter(triangle_free=True, min_degree_target=t))
        assert codes(both) == codes(g for g in everything if min(g.degrees()) >= t and is_triangle_free(g))


@pytest.mark.parametrize("n", range(1, 7))
def test_connected_filter(n):
    everything = enumerate_all(n)
    filtered = enumerate_all(n, GenFilter(connected_only=True))
    assert codes(filtered) == codes(g for g in everything if nx.is_connected(to_nx(g)))


def test_output_is_sorted_and_canonical():
    generated = enumerate_all(6)
    keys = [sort_key(g) for g in generated]
    assert keys == sorted(keys)
    assert all(sort_key(g) == canonical_code(g) for g in generated)


def test_split_examples():
    assert len(split_work(6, NO_FILTER, 1)) == 1
    units = split_work(6, NO_FILTER, 2)
    assert len(units) == 2
    assert sorted(u.prefix.m for u in units) == [0, 1]
    assert all(u.depth == 2 for u in units)


@pytest.mark.parametrize("depth", range(1, 7))
def test_split_partitions_output(depth):
    full = [sort_key(g) for g in enumerate_all(6)]
    pieces = [sort_key(g) for u in split_work(6, NO_FILTER, depth) for g in enumerate_unit(u, 6)]
    assert sorted(pieces) == full


def test_kernel_children_match_reference():
    filters = [NO_FILTER, GenFilter(triangle_free=True), GenFilter(min_degree_target=3),
               GenFilter(triangle_free=True, min_degree_target=3)]
    for filt in filters:
        level = [u.prefix for u in split_work(7, filt, 5)]
        for parent in level:
            fast = [c.adj for c in children(parent, 7, filt)]
            slow = [c.adj for c in children_reference(parent, 7, filt)]
            assert sorted(fast) == sorted(slow)


def test_workers_give_identical_output():
    filt = GenFilter(triangle_free=True)
    single = enumerate_all(8, filt, jobs=1)
    assert enumerate_all(8, filt, jobs=2) == single
    assert enumerate_all(8, filt, jobs=3) == single


def test_caps_and_validation():
    with pytest.raises(CapacityError):
        enumerate_all(13)
    with pytest.raises(ValueError):
        enumerate_all(4, GenFilter(min_degree_target=4))
    with pytest.raises(ValueError):
        enumerate_all(4, jobs=0)
    with pytest.raises(ValueError):
        split_work(4, NO_FILTER, 5)
