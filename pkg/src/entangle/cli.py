"""Command-line entry point.

Exit codes: 0 success, 1 a verification check failed, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import graph as gr
from .config import Caps
from .corpus import corpus
from .entanglement import (
    check_axiom_E,
    entanglement_union_oracle,
    family_friendly,
    filter_efficient_tangle_distinguishers,
    friendly,
    friendly_oracle,
    max_entanglement,
    tangle_entanglements,
)
from .errors import CapExceeded, ContractError, InputError, TheoremViolation
from .io import (
    dumps,
    family_from_json,
    family_to_json,
    graph_from_json,
    graph_to_json,
    separation_to_json,
    tangle_to_json,
    violation_to_json,
)
from .matroid import matroid_from_json, matroid_setting
from .separations import enumerate_separations, is_proper, is_tight
from .suites import SUITES, run_suite
from .tangles import enumerate_tangles
from .treedec import build_tree_decomposition, to_dot, to_json
from .uncrossing import abstract_friendly, abstract_max_entanglement, verify_setting_axioms

GENERATORS = {
    "farey": (gr.farey, 1),
    "wheel": (gr.wheel, 1),
    "path": (gr.path, 1),
    "cycle": (gr.cycle, 1),
    "complete": (gr.complete, 1),
    "grid": (gr.grid, 2),
    "glued": (gr.glued_cliques, 2),
    "bowtie": (gr.bowtie, 0),
}


def _read_json(path: str | None):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"could not read JSON input: {exc}") from exc


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _caps(args) -> Caps:
    return Caps.from_env(
        max_vertices=args.max_vertices,
        max_oracle_proper=args.oracle_cap,
        max_tangle_order=args.max_tangle_order,
    )


def cmd_gen(args, caps) -> int:
    fn, arity = GENERATORS[args.family]
    if len(args.params) != arity:
        raise InputError(f"'{args.family}' takes {arity} integer parameter(s)")
    _emit(graph_to_json(fn(*args.params)))
    return 0


def cmd_seps(args, caps) -> int:
    g = graph_from_json(_read_json(args.input))
    seps = enumerate_separations(g, args.max_order, proper_only=args.proper, caps=caps)
    rows = []
    for s in seps:
        row = separation_to_json(s)
        row.update(order=s.order, proper=is_proper(s), tight=is_tight(g, s))
        rows.append(row)
    _emit({"separations": rows})
    return 0


def cmd_tangles(args, caps) -> int:
    g = graph_from_json(_read_json(args.input))
    _emit({"tangles": [tangle_to_json(t) for t in enumerate_tangles(g, args.k, caps=caps)]})
    return 0


def cmd_entangle(args, caps) -> int:
    g = graph_from_json(_read_json(args.input))
    if args.action == "max":
        _emit(family_to_json(max_entanglement(g, caps=caps)))
        return 0
    if args.action == "oracle":
        _emit(family_to_json(entanglement_union_oracle(g, caps=caps)))
        return 0
    if args.family_file is None:
        raise InputError("'entangle check' needs --family FILE")
    fam = family_from_json(_read_json(args.family_file), g)
    bad = check_axiom_E(g, fam, caps=caps)
    if bad is None:
        _emit({"ok": True})
        return 0
    _emit({"ok": False, "violation": violation_to_json(bad)})
    return 1


def _friendly_family(g, args, caps):
    if args.family == "tangles":
        return family_friendly(g, tangle_entanglements(g, args.k, caps=caps), caps=caps)
    if args.oracle:
        return friendly_oracle(g, caps=caps)
    return friendly(g, caps=caps)


def cmd_friendly(args, caps) -> int:
    g = graph_from_json(_read_json(args.input))
    fam = _friendly_family(g, args, caps)
    if args.filter_tangles is not None:
        fam = filter_efficient_tangle_distinguishers(g, fam, args.filter_tangles, caps=caps)
    _emit(family_to_json(fam))
    return 0


def cmd_treedec(args, caps) -> int:
    g = graph_from_json(_read_json(args.input))
    fam = _friendly_family(g, args, caps)
    if args.filter_tangles is not None:
        fam = filter_efficient_tangle_distinguishers(g, fam, args.filter_tangles, caps=caps)
    td = build_tree_decomposition(g, fam)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(td))
    if args.format == "dot":
        sys.stdout.write(to_dot(td))
    else:
        _emit(to_json(td))
    return 0


def cmd_matroid(args, caps) -> int:
    m = matroid_from_json(_read_json(args.input))
    setting = matroid_setting(m, caps=caps)
    failures = verify_setting_axioms(setting)
    if failures:
        _emit({"ok": False, "axiom": failures[0].axiom, "witness": [repr(w) for w in failures[0].witness]})
        return 1
    members = abstract_friendly(setting) if args.action == "friendly" else abstract_max_entanglement(setting)
    _emit({
        "members": [
            {**separation_to_json(s), "order": setting.order(s)} for s in members
        ]
    })
    return 0


def cmd_verify(args, caps) -> int:
    report = run_suite(args.suite, args.max_n, args.exhaustive_n, caps=caps, jobs=args.jobs)
    _emit(report.to_json(timing=args.timing))
    return 0 if report.passed else 1


def cmd_corpus(args, caps) -> int:
    graphs = corpus(args.max_n, args.exhaustive_n, caps=caps)
    _emit({"graphs": [{"name": name, "graph": graph_to_json(g)} for name, g in graphs]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="entangle", description=__doc__.splitlines()[0])
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--oracle-cap", type=int, default=None, help="max proper separations for subset oracles")
    p.add_argument("--max-tangle-order", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for corpus suites")
    p.add_argument("--timing", action="store_true", help="include wall-clock duration in reports")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("--input", "-i", default=None, help="JSON file (default: stdin)")
        return sp

    g = sub.add_parser("gen", help="emit a graph from a named family")
    g.add_argument("family", choices=sorted(GENERATORS))
    g.add_argument("params", type=int, nargs="*")
    g.set_defaults(func=cmd_gen)

    s = with_input(sub.add_parser("seps", help="list separations"))
    s.add_argument("--max-order", type=int, default=None)
    s.add_argument("--proper", action="store_true")
    s.set_defaults(func=cmd_seps)

    t = with_input(sub.add_parser("tangles", help="list tangles of order k"))
    t.add_argument("--k", type=int, required=True)
    t.set_defaults(func=cmd_tangles)

    e = with_input(sub.add_parser("entangle", help="axiom (E) check, entanglement union, oracle"))
    e.add_argument("action", choices=["check", "max", "oracle"])
    e.add_argument("--family", dest="family_file", default=None, help="family JSON for 'check'")
    e.set_defaults(func=cmd_entangle)

    for name, func, helptext in (
        ("friendly", cmd_friendly, "friendly separations"),
        ("treedec", cmd_treedec, "tree-decomposition from the friendly separations"),
    ):
        f = with_input(sub.add_parser(name, help=helptext))
        f.add_argument("--family", choices=["all", "tangles"], default="all",
                       help="all entanglements, or only tangle-induced ones")
        f.add_argument("--k", type=int, default=3, help="tangle order bound for --family tangles")
        f.add_argument("--oracle", action="store_true", help="use the subset-enumeration oracle")
        f.add_argument("--filter-tangles", type=int, default=None, metavar="K",
                       help="keep members efficiently distinguishing tangles of order <= K")
        if name == "treedec":
            f.add_argument("--dot", default=None, help="also write DOT to this file")
            f.add_argument("--format", choices=["json", "dot"], default="json")
        f.set_defaults(func=func)

    m = with_input(sub.add_parser("matroid", help="entanglements of matroid separations"))
    m.add_argument("action", choices=["friendly", "max"])
    m.set_defaults(func=cmd_matroid)

    v = sub.add_parser("verify", help="run a verification suite over the corpus")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--max-n", type=int, default=7)
    v.add_argument("--exhaustive-n", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("corpus", help="emit the graph corpus")
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--exhaustive-n", type=int, default=None)
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        caps = _caps(args)
        return args.func(args, caps)
    except TheoremViolation as exc:
        _emit({"theorem_violation": str(exc), "witness": exc.witness})
        return 1
    except (InputError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
