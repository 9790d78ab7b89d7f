"""Acceptance criteria, one test each. All tolerances are exact.

Corpus: every connected graph on up to 7 vertices plus the named families
with at most 9 vertices. Each test prints one PASS/FAIL line, collected in
the terminal summary.
"""

import pytest

from entangle.corpus import corpus
from entangle.entanglement import friendly
from entangle.graph import bowtie
from entangle.suites import run_suite
from entangle.treedec import build_tree_decomposition

MAX_N = 9
EXHAUSTIVE_N = 7

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def corpus_size():
    return len(corpus(MAX_N, EXHAUSTIVE_N))


def _summary(report):
    parts = []
    for c in report.checks:
        part = f"{c.name}: {c.checked} checked"
        if c.skipped:
            part += f", {c.skipped} skipped"
        if not c.passed:
            part += f", witness {c.witness}"
        parts.append(part)
    return "; ".join(parts)


def _criterion(record, label, suite):
    report = run_suite(suite, MAX_N, EXHAUSTIVE_N)
    record(label, report.passed, _summary(report))
    assert report.passed, _summary(report)
    return report


def test_c01_friendly_nested(record_criterion, corpus_size):
    report = _criterion(record_criterion, "C1  friendly separations are nested", "nestedness")
    assert report.checks[0].checked == corpus_size


def test_c02_wheels_have_no_entanglement(record_criterion):
    _criterion(record_criterion, "C2  wheels 3..8 have no entanglement", "wheels")


def test_c03_farey_entanglements(record_criterion):
    _criterion(record_criterion, "C3  Farey F1, F2: N singletons, friendly contains N, N nested", "farey")


def test_c04_farey_tangle_free(record_criterion):
    _criterion(record_criterion, "C4  F2 has no tangle of order 3 or 4", "farey-tangles")


def test_c05_tangles_induce_entanglements(record_criterion, corpus_size):
    report = _criterion(record_criterion, "C5  efficient tangle distinguishers form entanglements", "tangle-entanglements")
    assert report.checks[0].checked == corpus_size


def test_c06_corner_identities(record_criterion, corpus_size):
    report = _criterion(record_criterion, "C6  corner sum, corner lemma, strict counting, green corners", "corners")
    assert [c.checked for c in report.checks] == [corpus_size] * 4


def test_c07_oracle_equivalence(record_criterion):
    report = _criterion(record_criterion, "C7  fixed points match subset oracles", "oracle")
    assert report.checks[1].checked > 0


def test_c08_end_to_end(record_criterion, corpus_size):
    report = run_suite("treedec", MAX_N, EXHAUSTIVE_N)
    td = build_tree_decomposition(bowtie(), friendly(bowtie()))
    bags = sorted(td.bag_ids(i) for i in range(len(td.bags)))
    ok = report.passed and report.checks[0].checked == corpus_size and bags == [(0, 1, 2), (0, 3, 4)]
    record_criterion(
        "C8  friendly tree-decompositions validate and distinguish tangles (k <= 3)",
        ok,
        f"{_summary(report)}; bowtie bags {bags}",
    )
    assert ok


def test_c09_canonical(record_criterion, corpus_size):
    report = _criterion(record_criterion, "C9  friendly sets and decompositions commute with relabeling", "canonical")
    assert report.checks[0].checked == corpus_size


def test_c10_matroids(record_criterion):
    report = _criterion(record_criterion, "C10 matroid settings valid, friendly output nested", "matroid")
    assert len(report.checks) == 5
