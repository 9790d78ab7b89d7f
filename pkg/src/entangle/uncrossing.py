"""Abstract submodular uncrossing-settings and their entanglements.

A setting supplies a finite list of separations ``elements``, a crossing
relation on them, a corner map and an order function. Here (E)'s crossing
partner ranges over the elements only, as in the abstract axiom; the graph
engine in :mod:`entangle.entanglement` lets it range over all separations
of the graph instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Sequence

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .errors import ContractError, TheoremViolation
from .fixpoint import greatest_fixpoint, threshold_friendly
from .graph import Graph
from .separations import Separation, corner, crosses, crossing_vector, enumerate_separations, is_proper


class UncrossingSetting:
    """Base class; subclasses fill in ``elements`` and the four hooks."""

    name = "setting"
    elements: Sequence[Hashable] = ()

    def sides(self, r) -> tuple:
        raise NotImplementedError

    def crosses(self, r, s) -> bool:
        raise NotImplementedError

    def corner(self, r, s, i: int, j: int):
        """Corner from side ``i`` of ``r`` and side ``j`` of ``s``."""
        raise NotImplementedError

    def order(self, sep) -> float:
        raise NotImplementedError

    @cached_property
    def index(self) -> dict:
        return {s: i for i, s in enumerate(self.elements)}

    @cached_property
    def cross_matrix(self) -> np.ndarray:
        m = len(self.elements)
        if all(isinstance(e, Separation) for e in self.elements):
            A = np.array([e.a for e in self.elements], dtype=np.uint64)
            B = np.array([e.b for e in self.elements], dtype=np.uint64)
            out = np.array([crossing_vector(e.a, e.b, A, B) for e in self.elements], dtype=bool)
            return out.reshape(m, m)
        out = np.zeros((m, m), dtype=bool)
        for i, r in enumerate(self.elements):
            for j in range(i + 1, m):
                if self.crosses(r, self.elements[j]):
                    out[i, j] = out[j, i] = True
        return out

    def corner_quad(self, r, s) -> dict:
        return {(i, j): self.corner(r, s, i, j) for i in (0, 1) for j in (0, 1)}


@dataclass(frozen=True)
class SettingFailure:
    axiom: str
    witness: tuple


OPPOSITE = (((0, 0), (1, 1)), ((0, 1), (1, 0)))


def verify_setting_axioms(setting: UncrossingSetting, *, limit: int | None = 1) -> list[SettingFailure]:
    """Exhaustively check the setting contract; returns failures (empty if ok)."""
    out: list[SettingFailure] = []

    def fail(axiom, *witness) -> bool:
        out.append(SettingFailure(axiom, witness))
        return limit is not None and len(out) >= limit

    els = list(setting.elements)
    for r in els:
        if setting.crosses(r, r) and fail("anti-reflexive", r):
            return out
    for i, r in enumerate(els):
        for s in els[i + 1:]:
            if setting.crosses(r, s) != setting.crosses(s, r) and fail("symmetric", r, s):
                return out
    cross = setting.cross_matrix
    index = setting.index
    for i, j in zip(*np.nonzero(np.triu(cross, 1))):
        r, s = els[i], els[j]
        quad = setting.corner_quad(r, s)
        if len(set(quad.values())) != 4 and fail("distinct-corners", r, s):
            return out
        for p, q in OPPOSITE:
            c, d = quad[p], quad[q]
            if setting.order(c) + setting.order(d) > setting.order(r) + setting.order(s):
                if fail("submodular", r, s, c, d):
                    return out
            if c not in index or d not in index:
                continue
            ci, di = index[c], index[d]
            if cross[i, ci] or cross[i, di] or cross[j, ci] or cross[j, di]:
                if fail("F3", r, s, c, d):
                    return out
            either = cross[ci] | cross[di]
            bad1 = either & ~(cross[i] | cross[j])
            if bad1.any() and fail("F1", r, s, c, d, els[int(np.flatnonzero(bad1)[0])]):
                return out
            both = cross[ci] & cross[di]
            bad2 = both & ~(cross[i] & cross[j])
            if bad2.any() and fail("F2", r, s, c, d, els[int(np.flatnonzero(bad2)[0])]):
                return out
    return out


def _require_valid(setting: UncrossingSetting) -> None:
    bad = verify_setting_axioms(setting)
    if bad:
        raise ContractError(f"setting violates {bad[0].axiom}")


def abstract_requirements(setting: UncrossingSetting) -> dict[int, list[frozenset]]:
    els = setting.elements
    index = setting.index
    cross = setting.cross_matrix
    reqs = {}
    for i, r in enumerate(els):
        k = setting.order(r)
        found = set()
        for j in np.flatnonzero(cross[i]):
            quad = setting.corner_quad(r, els[j])
            for side in (0, 1):
                pair = (quad[side, 0], quad[side, 1])
                if all(setting.order(c) <= k for c in pair):
                    found.add(frozenset(index[c] for c in pair if setting.order(c) == k and c in index))
        reqs[i] = sorted(found, key=sorted)
    return reqs


def abstract_max_entanglement(setting: UncrossingSetting, *, check: bool = True) -> list:
    if check:
        _require_valid(setting)
    keep = greatest_fixpoint(range(len(setting.elements)), abstract_requirements(setting))
    return [setting.elements[i] for i in sorted(keep)]


def abstract_crossing_numbers(setting: UncrossingSetting, union: Sequence) -> dict:
    """Crossings of each element and each S-corner against ``union``."""
    cross = setting.cross_matrix
    cols = [setting.index[u] for u in union]
    counts = cross[:, cols].sum(axis=1) if cols else np.zeros(len(setting.elements), dtype=int)
    return {s: int(c) for s, c in zip(setting.elements, counts)}


def abstract_friendly(setting: UncrossingSetting, *, check: bool = True) -> list:
    """Friendly elements of the setting; raises if two of them cross."""
    if check:
        _require_valid(setting)
    reqs = abstract_requirements(setting)
    union = greatest_fixpoint(range(len(setting.elements)), reqs)
    x = abstract_crossing_numbers(setting, [setting.elements[i] for i in union])
    xi = {i: x[setting.elements[i]] for i in union}
    keep = sorted(threshold_friendly(union, reqs, xi))
    cross = setting.cross_matrix
    for a in keep:
        for b in keep:
            if cross[a, b]:
                raise TheoremViolation(
                    "friendly elements of an uncrossing-setting cross",
                    {"setting": setting.name, "pair": [repr(setting.elements[a]), repr(setting.elements[b])]},
                )
    return [setting.elements[i] for i in keep]


def abstract_verify_nested(setting: UncrossingSetting, members: Sequence) -> tuple | None:
    for i, r in enumerate(members):
        for s in members[i + 1:]:
            if setting.crosses(r, s):
                return (r, s)
    return None


# --- graph backend ------------------------------------------------------


class GraphSetting(UncrossingSetting):
    def __init__(self, g: Graph, max_order: int | None = None, *, caps: Caps = DEFAULT_CAPS):
        self.graph = g
        self.max_order = max_order
        self.name = f"graph(n={g.n}, max_order={max_order})"
        self.elements = [s for s in enumerate_separations(g, max_order, caps=caps) if is_proper(s)]

    def sides(self, r: Separation) -> tuple[int, int]:
        return r.sides

    def crosses(self, r: Separation, s: Separation) -> bool:
        return crosses(r, s)

    def corner(self, r: Separation, s: Separation, i: int, j: int) -> Separation:
        rs, ss = r.sides, s.sides
        return corner(rs[i], rs[1 - i], ss[j], ss[1 - j])

    def order(self, sep: Separation) -> int:
        return sep.order


def graph_setting(g: Graph, max_order: int | None = None, *, caps: Caps = DEFAULT_CAPS) -> GraphSetting:
    return GraphSetting(g, max_order, caps=caps)
