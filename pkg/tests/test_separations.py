import itertools

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from entangle.config import Caps
from entangle.errors import CapExceeded, ContractError, InputError
from entangle.graph import bowtie, complete, cycle, farey, mask_of, path
from entangle.separations import (
    Separation,
    classify_pair,
    corner,
    corners,
    crosses,
    enumerate_separations,
    is_proper,
    is_separation,
    is_tight,
    lex_less,
    nested,
    separation_space,
)
from entangle.io import separation_from_json, separation_to_json

from conftest import graphs


def sep(a, b):
    return Separation.from_sides(a, b)


def brute_force_separations(g):
    """Every {A, B} from the 3^n assignments of vertices to A-only, B-only or both."""
    out = set()
    for labels in itertools.product((0, 1, 2), repeat=g.n):
        a = mask_of(v for v, l in enumerate(labels) if l != 1)
        b = mask_of(v for v, l in enumerate(labels) if l != 0)
        if a == b:
            continue
        if is_separation(g, a, b):
            out.add(Separation.make(a, b))
    return out


def test_lex_less_matches_tuple_order():
    for x in range(64):
        for y in range(64):
            tx = tuple(v for v in range(6) if x >> v & 1)
            ty = tuple(v for v in range(6) if y >> v & 1)
            assert lex_less(x, y) == (tx < ty)


def test_make_is_canonical_and_rejects_equal_sides():
    assert sep([1, 2], [0, 1]) == sep([0, 1], [1, 2])
    assert sep([1, 2], [0, 1]).side_a == (0, 1)
    with pytest.raises(InputError):
        sep([0, 1], [1, 0])


def test_path_proper_separations():
    assert enumerate_separations(path(3), proper_only=True) == [sep([0, 1], [1, 2])]


def test_k4_has_no_proper_separation():
    assert enumerate_separations(complete(4), proper_only=True) == []


def test_bowtie_proper_order_at_most_one():
    assert enumerate_separations(bowtie(), 1, proper_only=True) == [sep([0, 1, 2], [0, 3, 4])]


@given(graphs(max_n=6))
@settings(max_examples=40)
def test_enumeration_matches_brute_force(g):
    assert set(enumerate_separations(g)) == brute_force_separations(g)


@given(graphs(max_n=6), st.integers(0, 6))
@settings(max_examples=30)
def test_enumeration_order_bound_and_sorting(g, k):
    seps = enumerate_separations(g, k)
    assert all(s.order <= k for s in seps)
    assert seps == sorted(seps) and len(set(seps)) == len(seps)


def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        enumerate_separations(farey(3))
    with pytest.raises(CapExceeded):
        enumerate_separations(path(6), caps=Caps(max_vertices=5))


def test_is_proper_examples():
    full = list(range(3))
    assert is_proper(sep([0, 1], [1, 2]))
    assert not is_proper(sep(full, [1]))
    assert not is_proper(sep(full, []))


def test_is_tight_examples():
    assert is_tight(bowtie(), sep([0, 1, 2], [0, 3, 4]))
    assert is_tight(path(4), sep([0, 1], [1, 2, 3]))
    assert not is_tight(path(4), sep([0, 1, 2, 3], [1, 2]))
    # separator {1, 2} but only 2 sees the component {3}
    assert not is_tight(path(4), sep([0, 1, 2], [1, 2, 3]))


def test_classify_pair_examples():
    s = sep([0, 1], [1, 2, 3])
    assert classify_pair(s, s) == "nested"
    assert classify_pair(s, sep([0, 1, 2], [2, 3])) == "nested"
    r, t = sep([0, 1, 2, 3], [3, 4, 5, 0]), sep([1, 2, 3, 4], [4, 5, 0, 1])
    assert classify_pair(r, t) == "crossing"


def test_corner_example_on_six_cycle():
    c = corner(mask_of([0, 1, 2, 3]), mask_of([3, 4, 5, 0]), mask_of([1, 2, 3, 4]), mask_of([4, 5, 0, 1]))
    assert c == sep([1, 2, 3], [3, 4, 5, 0, 1])
    assert c.order == 2


def test_corners_of_six_cycle_pair():
    r, t = sep([0, 1, 2, 3], [0, 3, 4, 5]), sep([0, 1, 4, 5], [1, 2, 3, 4])
    quad = corners(r, t)
    g = cycle(6)
    for c in quad.corners.values():
        assert is_separation(g, c.a, c.b)
    for c, d in quad.opposite_pairs():
        assert c.order + d.order == r.order + t.order
    assert set(quad.same_side_of_s(0)) == {quad.corners[0, 0], quad.corners[0, 1]}
    assert set(quad.same_side_of_t(1)) == {quad.corners[0, 1], quad.corners[1, 1]}


def test_corners_rejects_nested_pair():
    with pytest.raises(ContractError):
        corners(sep([0, 1], [1, 2, 3]), sep([0, 1, 2], [2, 3]))


def test_coincidences_reported():
    # in C6 a side can sit inside the other separator, so corners repeat
    g = cycle(6)
    seps = enumerate_separations(g)
    found = False
    for s, t in itertools.combinations(seps, 2):
        if crosses(s, t) and corners(s, t).coincidences():
            found = True
    assert found


@given(graphs(max_n=6))
@settings(max_examples=30)
def test_corner_sum_and_corners_are_separations(g):
    seps = enumerate_separations(g)
    for s, t in itertools.combinations(seps, 2):
        if not crosses(s, t):
            continue
        quad = corners(s, t)
        for c in quad.corners.values():
            assert is_separation(g, c.a, c.b)
        for c, d in quad.opposite_pairs():
            assert c.order + d.order == s.order + t.order


@given(graphs(max_n=6))
@settings(max_examples=30)
def test_nestedness_is_symmetric_and_reflexive(g):
    seps = enumerate_separations(g)
    for s in seps:
        assert nested(s, s)
    for s, t in itertools.combinations(seps, 2):
        assert nested(s, t) == nested(t, s)


@given(graphs(max_n=6))
@settings(max_examples=30)
def test_space_lookup_and_cross_matrix(g):
    space = separation_space(g)
    for i, s in enumerate(space.seps):
        assert space.lookup(s.a, s.b) == i
        assert space.lookup(s.b, s.a) == i
    assert space.lookup(0, 0) == -1
    M = space.cross_matrix
    assert (M == M.T).all() and not M.diagonal().any()
    for i, j in zip(*np.nonzero(M)):
        assert crosses(space.seps[i], space.seps[j])


def test_relabel_separation():
    s = sep([0, 1], [1, 2])
    assert s.relabel([2, 1, 0]) == sep([1, 2], [0, 1])


def test_separation_json_round_trip_and_validation():
    s = sep([0, 1, 2], [0, 3, 4])
    assert separation_from_json(separation_to_json(s), bowtie()) == s
    with pytest.raises(InputError):
        separation_from_json({"a": [0, 1], "b": [2, 3, 4]}, bowtie())
    with pytest.raises(InputError):
        separation_from_json({"a": [0]})
