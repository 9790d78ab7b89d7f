"""JSON wire formats for graphs, separations, families, tangles and matroids."""

from __future__ import annotations

import json
from typing import Any, Iterable

from .errors import InputError
from .graph import Graph, ids_of
from .separations import Separation, check_separation


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges], "blue": [list(e) for e in g.blue]}


def graph_from_json(data: Any) -> Graph:
    try:
        n = int(data["n"])
        edges = [tuple(int(v) for v in e) for e in data.get("edges", [])]
        blue = [tuple(int(v) for v in e) for e in data.get("blue", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from exc
    if any(len(e) != 2 for e in edges + blue):
        raise InputError("edges must be pairs")
    return Graph(n, tuple(edges), tuple(blue))


def separation_to_json(s: Separation) -> dict:
    return {"a": list(s.side_a), "b": list(s.side_b)}


def separation_from_json(data: Any, g: Graph | None = None) -> Separation:
    try:
        s = Separation.from_sides(data["a"], data["b"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed separation JSON: {exc}") from exc
    if g is not None:
        check_separation(g, s)
    return s


def family_to_json(members: Iterable[Separation]) -> dict:
    return {"members": [separation_to_json(s) for s in sorted(set(members))]}


def family_from_json(data: Any, g: Graph | None = None) -> list[Separation]:
    try:
        raw = data["members"]
    except (KeyError, TypeError) as exc:
        raise InputError("family JSON needs a 'members' list") from exc
    return [separation_from_json(m, g) for m in raw]


def tangle_to_json(t) -> dict:
    return {
        "k": t.k,
        "orientation": [
            {"small": list(ids_of(small)), "big": list(ids_of(big))} for small, big in t.oriented()
        ],
    }


def violation_to_json(v) -> dict:
    return {
        "member": separation_to_json(v.member),
        "crossing": separation_to_json(v.crossing),
        "side": list(v.member.side_a if v.side == 0 else v.member.side_b),
        "corners": [
            {**separation_to_json(c), "order": c.order} for c in v.corner_pair
        ],
    }
