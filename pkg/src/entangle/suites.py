"""Named verification suites and the machine-readable run report."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from functools import partial
from typing import Callable

from . import checks
from .config import DEFAULT_CAPS, Caps
from .corpus import corpus
from .entanglement import check_axiom_E, friendly, max_entanglement, verify_nested
from .errors import CapExceeded
from .graph import Graph, farey, wheel, bowtie, complete
from .io import graph_to_json, separation_to_json
from .matroid import Matroid, check_rank_axioms, fano_columns, matroid_setting
from .separations import Separation
from .tangles import enumerate_tangles
from .uncrossing import abstract_friendly, abstract_verify_nested, verify_setting_axioms


@dataclass
class CheckOutcome:
    name: str
    passed: bool
    checked: int = 0
    skipped: int = 0
    witness: dict | None = None


@dataclass
class RunReport:
    input: dict
    operation: str
    result: dict
    checks: list[CheckOutcome] = field(default_factory=list)
    duration_s: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timing: bool = False) -> dict:
        out = asdict(self)
        if not timing:
            out.pop("duration_s")
        return out


def farey_n(g: Graph) -> list[Separation]:
    """Separations defined by the non-blue edges of a Farey graph."""
    out = []
    blue = set(g.blue)
    for u, v in g.edges:
        if (u, v) in blue:
            continue
        sep = (1 << u) | (1 << v)
        comps = g.component_masks(sep)
        if len(comps) != 2:
            raise ValueError(f"edge {(u, v)} does not leave two components")
        out.append(Separation.make(sep | comps[0], sep | comps[1]))
    return sorted(out)


def _per_graph(name: str, fn: Callable, graphs, jobs: int = 1) -> CheckOutcome:
    outcome = CheckOutcome(name, True)
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(partial(_safe_call, fn), [g for _, g in graphs])
    else:
        results = [_safe_call(fn, g) for _, g in graphs]
    for (gname, _), res in zip(graphs, results):
        if res == "skip":
            outcome.skipped += 1
            continue
        outcome.checked += 1
        if res is not None and outcome.witness is None:
            outcome.passed = False
            outcome.witness = {"graph_name": gname, **res}
    return outcome


def _safe_call(fn, g):
    try:
        return fn(g)
    except CapExceeded:
        return "skip"


def suite_wheels(**_) -> list[CheckOutcome]:
    out = CheckOutcome("wheel-emptiness", True)
    for r in range(3, 9):
        out.checked += 1
        fam = max_entanglement(wheel(r))
        if fam and out.witness is None:
            out.passed = False
            out.witness = {"rim": r, "family": [separation_to_json(s) for s in fam]}
    return [out]


def suite_farey(**_) -> list[CheckOutcome]:
    results = []
    for k in (1, 2):
        g = farey(k)
        n = farey_n(g)
        single = CheckOutcome(f"farey-{k}-singletons", True, checked=len(n))
        for s in n:
            bad = check_axiom_E(g, [s])
            if bad is not None:
                single.passed = False
                single.witness = {"member": separation_to_json(s)}
                break
        contained = CheckOutcome(f"farey-{k}-friendly-contains-N", True, checked=1)
        missing = set(n) - set(friendly(g))
        if missing:
            contained.passed = False
            contained.witness = {"missing": [separation_to_json(s) for s in sorted(missing)]}
        nest = CheckOutcome(f"farey-{k}-N-nested", True, checked=1)
        pair = verify_nested(n)
        if pair:
            nest.passed = False
            nest.witness = {"pair": [separation_to_json(s) for s in pair]}
        results += [single, contained, nest]
    return results


def suite_farey_tangles(**_) -> list[CheckOutcome]:
    g = farey(2)
    out = []
    for k in (3, 4):
        found = enumerate_tangles(g, k)
        o = CheckOutcome(f"farey-2-no-tangle-order-{k}", not found, checked=1)
        if found:
            o.witness = {"count": len(found)}
        out.append(o)
    return out


def acceptance_matroids() -> list[tuple[str, Matroid]]:
    return [
        ("U(2,4)", Matroid.uniform(2, 4)),
        ("U(3,6)", Matroid.uniform(3, 6)),
        ("M(K4)", Matroid.graphic(complete(4))),
        ("M(bowtie)", Matroid.graphic(bowtie())),
        ("F7", Matroid.binary(fano_columns())),
    ]


def suite_matroid(**_) -> list[CheckOutcome]:
    out = []
    for name, m in acceptance_matroids():
        o = CheckOutcome(f"matroid-{name}", True, checked=1)
        rank_bad = check_rank_axioms(m)
        setting = matroid_setting(m)
        failures = verify_setting_axioms(setting)
        if rank_bad or failures:
            o.passed = False
            o.witness = {"rank": rank_bad, "setting": [f.axiom for f in failures]}
        else:
            members = abstract_friendly(setting)
            pair = abstract_verify_nested(setting, members)
            if pair:
                o.passed = False
                o.witness = {"pair": [separation_to_json(s) for s in pair]}
        out.append(o)
    return out


PER_GRAPH = {
    "nestedness": [("friendly-nested", checks.check_nested_friendly)],
    "tangle-entanglements": [("tangles-induce-entanglements", checks.check_tangles_induce_entanglements)],
    "corners": [
        ("corner-sum", checks.check_corner_sum),
        ("corner-lemma", checks.check_corner_lemma),
        ("strict-corner-counting", checks.check_strict_corner_counting),
        ("green-corners", checks.check_green_corners),
    ],
    "oracle": [
        ("union-is-entanglement", checks.check_max_entanglement_is_entanglement),
        ("oracle-equivalence", checks.check_oracles),
    ],
    "treedec": [("end-to-end", checks.check_end_to_end)],
    "canonical": [("canonicality", checks.check_canonical)],
}

FIXED = {
    "wheels": suite_wheels,
    "farey": suite_farey,
    "farey-tangles": suite_farey_tangles,
    "matroid": suite_matroid,
}

SUITES = sorted(list(PER_GRAPH) + list(FIXED) + ["all"])


def run_suite(
    name: str,
    max_n: int = 7,
    exhaustive_n: int | None = None,
    *,
    caps: Caps = DEFAULT_CAPS,
    jobs: int = 1,
) -> RunReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    names = [n for n in SUITES if n != "all"] if name == "all" else [name]
    outcomes: list[CheckOutcome] = []
    graphs = None
    for n in names:
        if n in FIXED:
            outcomes += FIXED[n]()
            continue
        if graphs is None:
            graphs = corpus(max_n, exhaustive_n, caps=caps)
        for check_name, fn in PER_GRAPH[n]:
            outcomes.append(_per_graph(check_name, partial(fn, caps=caps), graphs, jobs))
    report = RunReport(
        input={"suite": name, "max_n": max_n, "exhaustive_n": exhaustive_n, "graphs": len(graphs or [])},
        operation=f"verify:{name}",
        result={},
        checks=outcomes,
    )
    report.result = {
        "passed": sum(c.passed for c in outcomes),
        "failed": sum(not c.passed for c in outcomes),
    }
    report.duration_s = round(time.perf_counter() - start, 3)
    return report


def graph_descriptor(g: Graph) -> dict:
    return {"graph": graph_to_json(g)}
