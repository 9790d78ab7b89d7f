"""Axiom (E), entanglements, crossing numbers and friendly separations of graphs.

Two independent routes are kept side by side:

* the fast route precomputes, with numpy kernels over the whole separation
  space, the requirement sets that (E) imposes on each proper separation and
  then takes greatest fixed points (see :mod:`entangle.fixpoint`);
* the literal route (:func:`check_axiom_E` and the ``*_oracle`` functions)
  walks the definition separation by separation and enumerates subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, InputError, TheoremViolation
from .fixpoint import greatest_fixpoint, threshold_friendly
from .graph import Graph
from .separations import (
    Separation,
    check_separation,
    corner,
    crosses,
    is_proper,
    guard_size,
    popcount,
    separation_space,
)

Family = tuple[Separation, ...]


def as_family(members: Iterable[Separation]) -> Family:
    return tuple(sorted(set(members)))


@dataclass(frozen=True)
class AxiomEViolation:
    """``member`` is crossed by ``crossing`` so that both corners on side
    ``side`` (0 = ``member.a``) have order <= ``member.order``, yet neither
    is a same-order member of the family."""

    member: Separation
    crossing: Separation
    side: int
    corner_pair: tuple[Separation, Separation]

    def verify(self, g: Graph, family: Iterable[Separation]) -> bool:
        fam = set(family)
        s, t = self.member, self.crossing
        if s not in fam or not crosses(s, t):
            return False
        check_separation(g, t)
        return _violates_side(s, t, self.side, fam) is not None


def _side_corners(s: Separation, t: Separation, side: int) -> tuple[Separation, Separation]:
    x, xo = s.sides if side == 0 else s.sides[::-1]
    return corner(x, xo, t.a, t.b), corner(x, xo, t.b, t.a)


def _violates_side(s: Separation, t: Separation, side: int, fam) -> tuple | None:
    c1, c2 = _side_corners(s, t, side)
    k = s.order
    if c1.order > k or c2.order > k:
        return None
    if any(c.order == k and c in fam for c in (c1, c2)):
        return None
    return (c1, c2)


def check_axiom_E(g: Graph, family: Iterable[Separation], *, caps: Caps = DEFAULT_CAPS) -> AxiomEViolation | None:
    """First violation of (E) in canonical order, or ``None``.

    The crossing separation ranges over every separation of ``g``.
    """
    fam = set(family)
    if not fam:
        raise InputError("an entanglement is non-empty")
    for s in fam:
        check_separation(g, s)
        if not is_proper(s):
            raise InputError(f"{s!r} is not proper")
    guard_size(g, caps)
    space = separation_space(g, caps.max_separations)
    for s in sorted(fam):
        for t in space.seps:
            if not crosses(s, t):
                continue
            for side in (0, 1):
                pair = _violates_side(s, t, side, fam)
                if pair is not None:
                    return AxiomEViolation(s, t, side, pair)
    return None


# --- fast route ---------------------------------------------------------


@lru_cache(maxsize=64)
def requirements(g: Graph, cap: int = DEFAULT_CAPS.max_separations) -> dict[int, list[frozenset]]:
    """Per proper separation (by space index), the corner sets (E) demands.

    Each entry is a set of space indices of same-order proper corners, one of
    which must be in any entanglement containing the separation.
    """
    space = separation_space(g, cap)
    A, B = space.A, space.B
    reqs: dict[int, list[frozenset]] = {}
    for i in np.flatnonzero(space.proper):
        s = space.seps[i]
        k = s.order
        cross = space.crossing_mask(s)
        found: set[frozenset] = set()
        for x, xo in (s.sides, s.sides[::-1]):
            x = np.uint64(x)
            xo = np.uint64(xo)
            small1, big1 = x & A, xo | B
            small2, big2 = x & B, xo | A
            o1 = popcount(small1 & big1)
            o2 = popcount(small2 & big2)
            hit = np.flatnonzero(cross & (o1 <= k) & (o2 <= k))
            if hit.size == 0:
                continue
            ok1 = (o1[hit] == k) & ((small1[hit] & ~big1[hit]) != 0) & ((big1[hit] & ~small1[hit]) != 0)
            ok2 = (o2[hit] == k) & ((small2[hit] & ~big2[hit]) != 0) & ((big2[hit] & ~small2[hit]) != 0)
            keys = set()
            for j, h in enumerate(hit):
                keys.add((
                    (int(small1[h]), int(big1[h])) if ok1[j] else None,
                    (int(small2[h]), int(big2[h])) if ok2[j] else None,
                ))
            for key in keys:
                found.add(frozenset(space.lookup(*c) for c in key if c is not None))
        reqs[int(i)] = sorted(found, key=sorted)
    return reqs


def _proper_indices(g: Graph, caps: Caps) -> list[int]:
    return [int(i) for i in np.flatnonzero(separation_space(g, caps.max_separations).proper)]


@lru_cache(maxsize=64)
def _max_entanglement_idx(g: Graph, caps: Caps) -> frozenset[int]:
    pool = _proper_indices(g, caps)
    return frozenset(greatest_fixpoint(pool, requirements(g, caps.max_separations)))


def max_entanglement(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> Family:
    """Union of all entanglements of ``g`` (empty if there are none)."""
    guard_size(g, caps)
    space = separation_space(g, caps.max_separations)
    return as_family(space.seps[i] for i in _max_entanglement_idx(g, caps))


def crossing_number(s: Separation, family: Iterable[Separation]) -> int:
    return sum(1 for t in family if crosses(s, t))


def crossing_numbers(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> dict[Separation, int]:
    """``x(s)`` for every separation of ``g`` against the entanglement union."""
    guard_size(g, caps)
    space = separation_space(g, caps.max_separations)
    union = _max_entanglement_idx(g, caps)
    counts = np.zeros(len(space), dtype=np.int64)
    for i in union:
        counts += space.crossing_mask(space.seps[i])
    return {s: int(c) for s, c in zip(space.seps, counts)}


def verify_nested(family: Iterable[Separation]) -> tuple[Separation, Separation] | None:
    fam = sorted(set(family))
    for i, s in enumerate(fam):
        for t in fam[i + 1:]:
            if crosses(s, t):
                return (s, t)
    return None


def _assert_nested(members: Family, what: str, g: Graph | None = None) -> None:
    witness = verify_nested(members)
    if witness is not None:
        from .io import graph_to_json, separation_to_json

        raise TheoremViolation(
            f"{what} are not nested",
            {
                "graph": graph_to_json(g) if g is not None else None,
                "pair": [separation_to_json(s) for s in witness],
            },
        )


@lru_cache(maxsize=64)
def _friendly_cached(g: Graph, caps: Caps) -> Family:
    space = separation_space(g, caps.max_separations)
    union = _max_entanglement_idx(g, caps)
    x = crossing_numbers(g, caps=caps)
    xi = {i: x[space.seps[i]] for i in union}
    keep = threshold_friendly(union, requirements(g, caps.max_separations), xi)
    return as_family(space.seps[i] for i in keep)


def friendly(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> Family:
    """All friendly separations; raises :class:`TheoremViolation` if they cross."""
    guard_size(g, caps)
    out = _friendly_cached(g, caps)
    _assert_nested(out, "friendly separations", g)
    return out


# --- literal route ------------------------------------------------------


def _literal_requirements(g: Graph, proper: Sequence[Separation], caps: Caps) -> list[list[int]]:
    """Per proper separation, requirement bitmasks over positions in ``proper``.

    Walks every (member, crossing separation, side) triple directly.
    """
    pos = {s: i for i, s in enumerate(proper)}
    space = separation_space(g, caps.max_separations)
    out = []
    for s in proper:
        reqs = set()
        for t in space.seps:
            if not crosses(s, t):
                continue
            for side in (0, 1):
                c1, c2 = _side_corners(s, t, side)
                if c1.order > s.order or c2.order > s.order:
                    continue
                m = 0
                for c in (c1, c2):
                    if c.order == s.order and c in pos:
                        m |= 1 << pos[c]
                reqs.add(m)
        out.append(sorted(reqs))
    return out


def _passing_subsets(g: Graph, cap: int | None, caps: Caps) -> tuple[list[Separation], np.ndarray]:
    guard_size(g, caps)
    proper = [s for s in separation_space(g, caps.max_separations).seps if is_proper(s)]
    cap = caps.max_oracle_proper if cap is None else cap
    if len(proper) > cap:
        raise CapExceeded("proper separations for the subset oracle", cap, len(proper))
    m = len(proper)
    subsets = np.arange(1, 1 << m, dtype=np.int64)
    passing = np.ones(subsets.shape, dtype=bool)
    for i, reqs in enumerate(_literal_requirements(g, proper, caps)):
        member = (subsets >> i) & 1 == 1
        ok = np.ones(subsets.shape, dtype=bool)
        for r in reqs:
            ok &= (subsets & r) != 0
        passing &= ~member | ok
    return proper, subsets[passing]


def entanglement_union_oracle(g: Graph, cap: int | None = None, *, caps: Caps = DEFAULT_CAPS) -> Family:
    """Union of every non-empty subset of proper separations satisfying (E)."""
    proper, good = _passing_subsets(g, cap, caps)
    union = int(np.bitwise_or.reduce(good)) if good.size else 0
    return as_family(s for i, s in enumerate(proper) if union >> i & 1)


def friendly_oracle(g: Graph, cap: int | None = None, *, caps: Caps = DEFAULT_CAPS) -> Family:
    """Union over all entanglements of their crossing-number minimisers."""
    proper, good = _passing_subsets(g, cap, caps)
    union = int(np.bitwise_or.reduce(good)) if good.size else 0
    members = [s for i, s in enumerate(proper) if union >> i & 1]
    x = np.array([crossing_number(s, members) for s in proper], dtype=np.int64)
    big = np.iinfo(np.int64).max
    low = np.full(good.shape, big, dtype=np.int64)
    for i in range(len(proper)):
        inside = (good >> i) & 1 == 1
        low = np.where(inside, np.minimum(low, x[i]), low)
    out = []
    for i, s in enumerate(proper):
        inside = (good >> i) & 1 == 1
        if np.any(inside & (low == x[i])):
            out.append(s)
    return as_family(out)


# --- families of entanglements ------------------------------------------


def family_friendly(g: Graph, families: Sequence[Iterable[Separation]], *, caps: Caps = DEFAULT_CAPS) -> Family:
    """Members minimising, inside their own entanglement, crossings with the union."""
    fams = [set(f) for f in families]
    for f in fams:
        bad = check_axiom_E(g, f, caps=caps)
        if bad is not None:
            raise InputError(f"not an entanglement: {bad}")
    union = set().union(*fams)
    x = {s: crossing_number(s, union) for s in union}
    out = set()
    for f in fams:
        low = min(x[s] for s in f)
        out |= {s for s in f if x[s] == low}
    return as_family(out)


def filter_efficient_tangle_distinguishers(
    g: Graph, family: Iterable[Separation], k: int, *, caps: Caps = DEFAULT_CAPS
) -> Family:
    """Members that efficiently distinguish some two tangles of order <= k."""
    from .tangles import all_distinguishers

    fam = set(family)
    if not fam:
        return ()
    wanted = set()
    for _, _, eff in all_distinguishers(g, k, caps=caps):
        wanted |= eff
    return as_family(fam & wanted)


def tangle_entanglements(g: Graph, k: int, *, caps: Caps = DEFAULT_CAPS) -> list[Family]:
    """Distinct entanglements induced by distinguishable tangle pairs of order <= k."""
    from .tangles import all_distinguishers

    seen = {as_family(eff) for _, _, eff in all_distinguishers(g, k, caps=caps)}
    return sorted(seen)

