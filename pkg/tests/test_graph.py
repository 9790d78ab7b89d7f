import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from entangle.errors import InputError
from entangle.graph import (
    Graph,
    bowtie,
    build_graph,
    complete,
    components_after_deletion,
    farey,
    glued_cliques,
    grid,
    ids_of,
    inverse_permutation,
    mask_of,
    path,
    relabel,
    relabel_mask,
    wheel,
)
from entangle.io import graph_from_json, graph_to_json

from conftest import graphs


def test_build_graph_k2():
    g = build_graph(2, [(0, 1)])
    assert g.n == 2 and g.edges == ((0, 1),)


def test_build_graph_bowtie_counts():
    g = build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert (g.n, len(g.edges)) == (5, 6)
    assert g == bowtie()


def test_four_cycle_plus_chord_is_f1_topology():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert set(g.edges) == set(farey(1).edges)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 1)]])
def test_build_graph_rejects_bad_edges(edges):
    with pytest.raises(InputError):
        build_graph(3, edges)


def test_duplicate_edges_collapse():
    assert build_graph(3, [(0, 1), (1, 0), (0, 1)]).edges == ((0, 1),)


def test_blue_must_be_edges():
    with pytest.raises(InputError):
        Graph(3, ((0, 1),), ((1, 2),))


@pytest.mark.parametrize("k,n,m,b", [(1, 4, 5, 4), (2, 8, 13, 8), (3, 16, 29, 16)])
def test_farey_counts(k, n, m, b):
    g = farey(k)
    assert (g.n, len(g.edges), len(g.blue)) == (n, m, b)


def test_farey_rejects_zero():
    with pytest.raises(InputError):
        farey(0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_farey_blue_edges_lie_on_one_triangle(k):
    # blue edges are exactly the edges in a single triangle, the others in two
    g = farey(k)
    blue = set(g.blue)
    for u, v in g.edges:
        common = (g.adj[u] & g.adj[v]).bit_count()
        assert common == (1 if (u, v) in blue else 2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_farey_non_blue_edges_separate(k):
    g = farey(k)
    for u, v in set(g.edges) - set(g.blue):
        assert len(components_after_deletion(g, [u, v])) == 2


def test_wheel_examples():
    w5 = wheel(5)
    assert (w5.n, len(w5.edges)) == (6, 10)
    assert set(wheel(3).edges) == set(complete(4).edges)
    w4 = wheel(4)
    assert (w4.n, len(w4.edges), w4.degree(4)) == (5, 8, 4)


@pytest.mark.parametrize("r", [0, 1, 2])
def test_wheel_rejects_small_rim(r):
    with pytest.raises(InputError):
        wheel(r)


@pytest.mark.parametrize("r", range(3, 9))
def test_wheel_is_three_connected(r):
    g = wheel(r)
    for pair in itertools.combinations(range(g.n), 2):
        assert len(components_after_deletion(g, pair)) == 1


def test_components_after_deletion_examples():
    assert components_after_deletion(bowtie(), [0]) == [frozenset({1, 2}), frozenset({3, 4})]
    assert components_after_deletion(path(3), [1]) == [frozenset({0}), frozenset({2})]
    assert components_after_deletion(complete(4), []) == [frozenset({0, 1, 2, 3})]


def test_generators_sizes():
    assert glued_cliques(4, 2).n == 6 and len(glued_cliques(4, 2).edges) == 11
    assert len(grid(3, 3).edges) == 12


def test_relabel_examples():
    g = bowtie()
    assert relabel(g, list(range(5))) == g
    k4 = complete(4)
    assert relabel(k4, [2, 0, 3, 1]) == k4
    swap = [1, 3, 4, 0, 2]  # cut vertex 0 -> 1
    h = relabel(g, swap)
    assert h.degree(1) == 4
    assert sorted(h.degree(v) for v in range(5)) == [2, 2, 2, 2, 4]


@pytest.mark.parametrize("perm", [[0, 0, 1], [0, 1], [0, 1, 3]])
def test_relabel_rejects_non_bijection(perm):
    with pytest.raises(InputError):
        relabel(path(3), perm)


def test_mask_round_trip():
    assert ids_of(mask_of([4, 0, 2])) == (0, 2, 4)
    assert mask_of([]) == 0


@given(graphs(max_n=7), st.data())
def test_relabel_round_trip(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    inv = inverse_permutation(perm)
    assert relabel(relabel(g, perm), inv) == g
    for mask in range(1 << g.n):
        assert relabel_mask(relabel_mask(mask, perm), inv) == mask


@given(graphs(max_n=7))
def test_components_partition_the_rest(g):
    for removed in range(0, 1 << g.n, 5):
        comps = g.component_masks(removed)
        union = 0
        for c in comps:
            assert union & c == 0
            assert g.neighbourhood(c) & ~removed == 0
            union |= c
        assert union == g.full & ~removed


@given(graphs(max_n=7))
def test_graph_json_round_trip(g):
    assert graph_from_json(graph_to_json(g)) == g


def test_graph_json_round_trip_keeps_blue():
    g = farey(2)
    assert graph_from_json(graph_to_json(g)).blue == g.blue


@pytest.mark.parametrize("data", [{}, {"n": "x"}, {"n": 3, "edges": [[0, 1, 2]]}, {"n": 2, "edges": [[0, 0]]}])
def test_graph_json_errors(data):
    with pytest.raises(InputError):
        graph_from_json(data)
