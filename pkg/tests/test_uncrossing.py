import itertools

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from entangle.entanglement import friendly, max_entanglement
from entangle.errors import CapExceeded, ContractError, InputError
from entangle.graph import bowtie, complete, farey, path
from entangle.matroid import (
    Matroid,
    MatroidSetting,
    check_rank_axioms,
    fano_columns,
    matroid_from_json,
    matroid_setting,
)
from entangle.separations import Separation
from entangle.suites import acceptance_matroids
from entangle.uncrossing import (
    abstract_friendly,
    abstract_max_entanglement,
    abstract_verify_nested,
    graph_setting,
    verify_setting_axioms,
)

from conftest import graphs

CUT = Separation.from_sides([0, 1, 2], [0, 3, 4])


def bip(a, n):
    a = set(a)
    return Separation.from_sides(a, set(range(n)) - a)


class ZeroOrder(MatroidSetting):
    """Order 0 everywhere except on one chosen separation."""

    def __init__(self, m, bumped):
        super().__init__(m)
        self.bumped = bumped

    def order(self, sep):
        return 1 if sep == self.bumped else 0


def test_uniform_connectivity():
    m = Matroid.uniform(2, 4)
    assert m.connectivity(0b0011) == 2
    assert m.connectivity(0b0001) == 1


def test_k4_triangle_versus_star():
    g = complete(4)
    m = Matroid.graphic(g)
    triangle = sum(1 << i for i, e in enumerate(g.edges) if 3 not in e)
    assert m.connectivity(triangle) == 2
    assert m.rank(m.full) == 3


def test_fano_rank():
    m = Matroid.binary(fano_columns())
    assert m.rank(m.full) == 3
    assert all(m.rank(1 << i | 1 << j) == 2 for i, j in itertools.combinations(range(7), 2))
    # lines of the Fano plane: v, w, v ^ w
    assert m.rank(0b0000111) == 2


@pytest.mark.parametrize("name,m", acceptance_matroids())
def test_acceptance_matroids_are_valid_settings(name, m):
    assert check_rank_axioms(m) is None
    setting = matroid_setting(m)
    assert verify_setting_axioms(setting) == []
    out = abstract_friendly(setting)
    assert abstract_verify_nested(setting, out) is None


def test_broken_rank_detected():
    bad = Matroid(3, lambda a: 2 if a == 0b011 else min(a.bit_count(), 1))
    assert check_rank_axioms(bad) is not None
    assert check_rank_axioms(Matroid(2, lambda a: 1)) is not None


def test_corrupted_order_reports_submodularity():
    m = Matroid.uniform(2, 4)
    base = matroid_setting(m)
    r, s = bip([0, 1], 4), bip([0, 2], 4)
    bumped = base.corner(r, s, 0, 0)
    setting = ZeroOrder(m, bumped)
    failures = verify_setting_axioms(setting)
    assert failures and failures[0].axiom == "submodular"
    with pytest.raises(ContractError):
        abstract_max_entanglement(setting)
    with pytest.raises(ContractError):
        abstract_friendly(setting)


def test_u12_whole_setting_is_entanglement():
    setting = matroid_setting(Matroid.uniform(1, 2))
    assert setting.elements == [bip([0], 2)]
    assert abstract_max_entanglement(setting) == setting.elements
    assert abstract_friendly(setting) == setting.elements


def test_u24_friendly():
    setting = matroid_setting(Matroid.uniform(2, 4))
    out = abstract_friendly(setting)
    assert abstract_verify_nested(setting, out) is None
    assert sorted(setting.order(s) for s in out) == [1, 1, 1, 1]


def test_matroid_setting_errors():
    with pytest.raises(CapExceeded):
        matroid_setting(Matroid.uniform(2, 13))
    with pytest.raises(InputError):
        matroid_setting(Matroid.uniform(1, 1))
    with pytest.raises(InputError):
        Matroid.uniform(3, 2)


def test_matroid_from_json():
    assert matroid_from_json({"kind": "uniform", "r": 2, "n": 4}).rank(0b1111) == 2
    g = matroid_from_json({"kind": "graphic", "graph": {"n": 3, "edges": [[0, 1], [1, 2]]}})
    assert g.size == 2 and g.rank(0b11) == 2
    assert matroid_from_json({"kind": "binary", "columns": fano_columns()}).size == 7
    for data in ({"kind": "nope"}, {}, {"kind": "binary", "columns": [[2]]}):
        with pytest.raises(InputError):
            matroid_from_json(data)


def test_graph_setting_examples():
    setting = graph_setting(bowtie())
    assert verify_setting_axioms(setting) == []
    assert abstract_friendly(setting) == [CUT]
    assert graph_setting(complete(4)).elements == []


def test_graph_setting_can_have_repeated_corners():
    # in F2 a strict side can lie inside the other separator
    failures = verify_setting_axioms(graph_setting(farey(2)))
    assert failures and failures[0].axiom == "distinct-corners"


def test_graph_backend_reproduces_farey_example():
    g = farey(2)
    setting = graph_setting(g)
    assert abstract_max_entanglement(setting, check=False) == list(max_entanglement(g))
    assert abstract_friendly(setting, check=False) == list(friendly(g))


@given(graphs(max_n=6))
@settings(max_examples=30)
def test_graph_backend_agrees_with_graph_engine(g):
    setting = graph_setting(g)
    assert abstract_max_entanglement(setting, check=False) == list(max_entanglement(g))
    assert abstract_friendly(setting, check=False) == list(friendly(g))


@given(st.integers(2, 6), st.data())
@settings(max_examples=25)
def test_uniform_matroid_friendly_is_nested(n, data):
    r = data.draw(st.integers(0, n))
    setting = matroid_setting(Matroid.uniform(r, n))
    assert verify_setting_axioms(setting) == []
    assert abstract_verify_nested(setting, abstract_friendly(setting)) is None


@given(graphs(min_n=2, max_n=5))
@settings(max_examples=25)
def test_graphic_matroids(g):
    if len(g.edges) < 2:
        return
    m = Matroid.graphic(g)
    assert check_rank_axioms(m) is None
    setting = matroid_setting(m)
    assert verify_setting_axioms(setting) == []
    assert abstract_verify_nested(setting, abstract_friendly(setting)) is None


@given(graphs(max_n=7))
@settings(max_examples=25)
def test_graphic_rank_is_n_minus_components(g):
    m = Matroid.graphic(g)
    assert m.rank(m.full) == g.n - len(g.component_masks())


def test_path_graph_setting_has_no_failures():
    assert verify_setting_axioms(graph_setting(path(4))) == []
