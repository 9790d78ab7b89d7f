"""Exhaustive property checks on single graphs.

Each ``check_*`` function returns ``None`` when the property holds and a
JSON-ready witness dict otherwise. Witnesses carry the graph so a failure
can be replayed from the report alone.
"""

from __future__ import annotations

import random

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .entanglement import (
    check_axiom_E,
    crossing_number,
    entanglement_union_oracle,
    friendly,
    friendly_oracle,
    max_entanglement,
    verify_nested,
)
from .errors import TheoremViolation
from .graph import Graph, relabel
from .io import graph_to_json, separation_to_json
from .separations import Separation, corners, crosses, popcount, separation_space
from .tangles import all_distinguishers
from .treedec import (
    build_tree_decomposition,
    check_efficient_distinguishing,
    isomorphic_under,
    validate_tree_decomposition,
)


def _seps(*seps: Separation) -> list[dict]:
    return [separation_to_json(s) for s in seps]


def _corner_arrays(a: int, b: int, C: np.ndarray, D: np.ndarray) -> dict:
    """Small/big side arrays for the four corners of (a, b) against every (C, D)."""
    a = np.uint64(a)
    b = np.uint64(b)
    return {
        (0, 0): (a & C, b | D),
        (0, 1): (a & D, b | C),
        (1, 0): (b & C, a | D),
        (1, 1): (b & D, a | C),
    }


def check_nested_friendly(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    try:
        fam = friendly(g, caps=caps)
    except TheoremViolation as exc:
        return {"kind": "friendly-crossing", **exc.witness}
    pair = verify_nested(fam)
    if pair is not None:
        return {"kind": "friendly-crossing", "graph": graph_to_json(g), "pair": _seps(*pair)}
    return None


def check_corner_sum(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    """Opposite corners of every crossing pair have orders summing to |r| + |s|."""
    space = separation_space(g, caps.max_separations)
    for i, r in enumerate(space.seps):
        cross = space.crossing_mask(r)
        cross[: i + 1] = False
        js = np.flatnonzero(cross)
        if js.size == 0:
            continue
        quad = _corner_arrays(r.a, r.b, space.A[js], space.B[js])
        o = {tag: popcount(x & y) for tag, (x, y) in quad.items()}
        total = r.order + space.orders[js]
        for p, q in (((0, 0), (1, 1)), ((0, 1), (1, 0))):
            bad = np.flatnonzero(o[p] + o[q] != total)
            if bad.size:
                s = space.seps[js[bad[0]]]
                return {"kind": "corner-sum", "graph": graph_to_json(g), "pair": _seps(r, s)}
    return None


def check_corner_lemma(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    """(F1)-(F3) for every crossing pair, each opposite corner pair and every separation t."""
    space = separation_space(g, caps.max_separations)
    M = space.cross_matrix
    for i, r in enumerate(space.seps):
        row = M[i].copy()
        row[: i + 1] = False
        js = np.flatnonzero(row)
        if js.size == 0:
            continue
        quad = _corner_arrays(r.a, r.b, space.A[js], space.B[js])
        idx = {tag: space.lookup_many(x, y) for tag, (x, y) in quad.items()}
        Ms = M[js]
        for p, q in (((0, 0), (1, 1)), ((0, 1), (1, 0))):
            c, d = idx[p], idx[q]
            if (c < 0).any() or (d < 0).any():
                j = js[int(np.flatnonzero((c < 0) | (d < 0))[0])]
                return {"kind": "corner-not-a-separation", "graph": graph_to_json(g), "pair": _seps(r, space.seps[j])}
            Mc, Md = M[c], M[d]
            f3 = M[i, c] | M[i, d] | M[js, c] | M[js, d]
            f1 = ((Mc | Md) & ~(M[i] | Ms)).any(axis=1)
            f2 = ((Mc & Md) & ~(M[i] & Ms)).any(axis=1)
            for name, bad in (("F3", f3), ("F1", f1), ("F2", f2)):
                hit = np.flatnonzero(bad)
                if hit.size:
                    h = int(hit[0])
                    s = space.seps[js[h]]
                    witness = {
                        "kind": f"corner-lemma-{name}",
                        "graph": graph_to_json(g),
                        "pair": _seps(r, s),
                        "corners": _seps(space.seps[c[h]], space.seps[d[h]]),
                    }
                    if name != "F3":
                        cond = (Mc[h] | Md[h]) & ~(M[i] | Ms[h]) if name == "F1" else (Mc[h] & Md[h]) & ~(M[i] & Ms[h])
                        witness["t"] = _seps(space.seps[int(np.flatnonzero(cond)[0])])[0]
                    return witness
    return None


def _union_data(g: Graph, caps: Caps):
    space = separation_space(g, caps.max_separations)
    union = max_entanglement(g, caps=caps)
    u_idx = np.array([space.index[s] for s in union], dtype=np.int64)
    return space, union, u_idx


def check_strict_corner_counting(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    """x(c) + x(d) < x(r) + x(s) for crossing r, s in entanglements, x against the union."""
    space, union, u_idx = _union_data(g, caps)
    if u_idx.size < 2:
        return None
    M = space.cross_matrix
    x = M[:, u_idx].sum(axis=1)
    for pos, i in enumerate(u_idx):
        js = np.array([j for j in u_idx[pos + 1:] if M[i, j]], dtype=np.int64)
        if js.size == 0:
            continue
        r = space.seps[i]
        quad = _corner_arrays(r.a, r.b, space.A[js], space.B[js])
        idx = {tag: space.lookup_many(a, b) for tag, (a, b) in quad.items()}
        for p, q in (((0, 0), (1, 1)), ((0, 1), (1, 0))):
            bad = np.flatnonzero(x[idx[p]] + x[idx[q]] >= x[i] + x[js])
            if bad.size:
                h = int(bad[0])
                return {
                    "kind": "strict-corner-counting",
                    "graph": graph_to_json(g),
                    "pair": _seps(r, space.seps[js[h]]),
                    "corners": _seps(space.seps[idx[p][h]], space.seps[idx[q][h]]),
                }
    return None


def check_green_corners(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    """At least three corners of crossing s1, s2 in entanglements have order <= max(|s1|, |s2|)."""
    union = max_entanglement(g, caps=caps)
    for i, s1 in enumerate(union):
        for s2 in union[i + 1:]:
            if not crosses(s1, s2):
                continue
            top = max(s1.order, s2.order)
            quad = corners(s1, s2).corners
            if sum(c.order <= top for c in quad.values()) < 3:
                return {"kind": "green-corners", "graph": graph_to_json(g), "pair": _seps(s1, s2)}
    return None


def check_tangles_induce_entanglements(g: Graph, k: int = 3, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    union = set(max_entanglement(g, caps=caps))
    for t1, t2, eff in all_distinguishers(g, k, caps=caps):
        bad = check_axiom_E(g, eff, caps=caps)
        if bad is not None or not eff <= union:
            return {
                "kind": "tangle-entanglement",
                "graph": graph_to_json(g),
                "orders": [t1.k, t2.k],
                "family": _seps(*sorted(eff)),
            }
    return None


def check_max_entanglement_is_entanglement(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    union = max_entanglement(g, caps=caps)
    if union and check_axiom_E(g, union, caps=caps) is not None:
        return {"kind": "union-not-entanglement", "graph": graph_to_json(g), "family": _seps(*union)}
    return None


def check_oracles(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    """Fixed points against subset enumeration; raises CapExceeded when too big."""
    if set(entanglement_union_oracle(g, caps=caps)) != set(max_entanglement(g, caps=caps)):
        return {"kind": "oracle-union", "graph": graph_to_json(g)}
    if set(friendly_oracle(g, caps=caps)) != set(friendly(g, caps=caps)):
        return {"kind": "oracle-friendly", "graph": graph_to_json(g)}
    return None


def check_end_to_end(g: Graph, k: int = 3, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    fam = friendly(g, caps=caps)
    td = build_tree_decomposition(g, fam)
    bad = validate_tree_decomposition(g, td)
    if bad is not None:
        return {"kind": "tree-decomposition", "graph": graph_to_json(g), "violation": bad.kind, "detail": bad.detail}
    pair = check_efficient_distinguishing(g, fam, k, caps=caps)
    if pair is not None:
        return {"kind": "efficient-distinguishing", "graph": graph_to_json(g), "orders": [pair[0].k, pair[1].k]}
    return None


def check_canonical(g: Graph, perms: int = 20, seed: int = 0, *, caps: Caps = DEFAULT_CAPS) -> dict | None:
    rng = random.Random(seed)
    fam = friendly(g, caps=caps)
    td = build_tree_decomposition(g, fam)
    for _ in range(perms):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        image = {s.relabel(perm) for s in fam}
        fam_h = friendly(h, caps=caps)
        if set(fam_h) != image:
            return {"kind": "canonical-friendly", "graph": graph_to_json(g), "perm": perm}
        if not isomorphic_under(td, build_tree_decomposition(h, fam_h), perm):
            return {"kind": "canonical-decomposition", "graph": graph_to_json(g), "perm": perm}
    return None


def crossing_numbers_against(g: Graph, seps, *, caps: Caps = DEFAULT_CAPS) -> list[int]:
    union = max_entanglement(g, caps=caps)
    return [crossing_number(s, union) for s in seps]
