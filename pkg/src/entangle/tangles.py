"""Exhaustive tangle enumeration for small graphs.

A tangle of order k picks a small side for every separation of order < k so
that no three small sides (repetition allowed) cover G, vertices and edges.
Orienting {A,B} "towards A" makes A the big side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, ContractError, InputError
from .graph import Graph
from .separations import Separation, separation_space


@dataclass(frozen=True)
class Tangle:
    k: int
    smalls: tuple[tuple[Separation, int], ...]  # canonical separation order

    @cached_property
    def small_of(self) -> dict[Separation, int]:
        return dict(self.smalls)

    def oriented(self):
        """Pairs ``(small, big)`` of side masks."""
        for s, small in self.smalls:
            yield small, (s.b if small == s.a else s.a)

    def restrict(self, k: int) -> "Tangle":
        return Tangle(k, tuple((s, m) for s, m in self.smalls if s.order < k))


class _CoverKernel:
    """Small-side vertex/edge masks for the cover test, edges split into 64-bit words."""

    def __init__(self, g: Graph):
        self.full_v = np.uint64(g.full)
        self.words = max(1, -(-len(g.edges) // 64))
        total = (1 << len(g.edges)) - 1
        self.full_e = np.array([(total >> (64 * w)) & (2**64 - 1) for w in range(self.words)], dtype=np.uint64)
        self.g = g

    def encode(self, small: int) -> tuple[np.uint64, np.ndarray]:
        em = self.g.induced_edge_mask(small)
        return np.uint64(small), np.array([(em >> (64 * w)) & (2**64 - 1) for w in range(self.words)], dtype=np.uint64)

    def covers_with(self, vs: np.ndarray, es: np.ndarray, v: np.uint64, e: np.ndarray) -> bool:
        """Does ``(v, e)`` plus two of the rows (repetition allowed, incl. itself) cover G?"""
        vv = np.append(vs, v)
        ee = np.vstack([es, e[None, :]])
        hit = (vv[:, None] | vv[None, :] | v) == self.full_v
        if not hit.any():
            return False
        for w in range(self.words):
            col = ee[:, w]
            hit &= (col[:, None] | col[None, :] | e[w]) == self.full_e[w]
            if not hit.any():
                return False
        return True


def _extend(g: Graph, base: Tangle, new: list[Separation], k: int, kernel: _CoverKernel, cap: int) -> list[Tangle]:
    chosen_v = [kernel.encode(m)[0] for _, m in base.smalls]
    chosen_e = [kernel.encode(m)[1] for _, m in base.smalls]
    vs = np.array(chosen_v, dtype=np.uint64)
    es = np.array(chosen_e, dtype=np.uint64).reshape(len(chosen_e), kernel.words)
    options = []
    for s in new:
        # big side = lexicographically smaller side first
        options.append([(m, *kernel.encode(m)) for m in (s.b, s.a)])
    out: list[Tangle] = []
    picked: list[int] = []

    def dfs(i: int, vs: np.ndarray, es: np.ndarray) -> None:
        if i == len(new):
            smalls = base.smalls + tuple(zip(new, picked))
            out.append(Tangle(k, tuple(sorted(smalls, key=lambda p: p[0].sort_key))))
            if len(out) > cap:
                raise CapExceeded("number of tangles", cap, len(out))
            return
        for m, v, e in options[i]:
            if kernel.covers_with(vs, es, v, e):
                continue
            picked.append(m)
            dfs(i + 1, np.append(vs, v), np.vstack([es, e[None, :]]))
            picked.pop()

    dfs(0, vs, es)
    return out


@lru_cache(maxsize=256)
def _tangles(g: Graph, k: int, caps: Caps) -> tuple[Tangle, ...]:
    space = separation_space(g, caps.max_separations)
    if k == 0:
        return (Tangle(0, ()),)
    kernel = _CoverKernel(g)
    new = [s for s in space.seps if s.order == k - 1]
    out = []
    for base in _tangles(g, k - 1, caps):
        out.extend(_extend(g, base, new, k, kernel, caps.max_tangles))
        if len(out) > caps.max_tangles:
            raise CapExceeded("number of tangles", caps.max_tangles, len(out))
    out.sort(key=lambda t: [(s.sort_key, m) for s, m in t.smalls])
    return tuple(out)


def enumerate_tangles(g: Graph, k: int, *, caps: Caps = DEFAULT_CAPS) -> list[Tangle]:
    """All tangles of order exactly ``k``."""
    if k < 1:
        raise InputError("tangle order must be >= 1")
    if k > caps.max_tangle_order:
        raise CapExceeded("tangle order", caps.max_tangle_order, k)
    if g.n > caps.max_vertices:
        raise CapExceeded("vertex count", caps.max_vertices, g.n)
    return list(_tangles(g, k, caps))


def distinguishable(t1: Tangle, t2: Tangle) -> bool:
    other = t2.small_of
    return any(s in other and other[s] != m for s, m in t1.smalls)


def _distinguishing(t1: Tangle, t2: Tangle) -> list[Separation]:
    other = t2.small_of
    return [s for s, m in t1.smalls if s in other and other[s] != m]


def efficient_distinguishers(g: Graph, t1: Tangle, t2: Tangle) -> frozenset[Separation]:
    seps = _distinguishing(t1, t2)
    if not seps:
        raise ContractError("tangles are not distinguishable")
    low = min(s.order for s in seps)
    return frozenset(s for s in seps if s.order == low)


def all_tangles(g: Graph, k: int, *, caps: Caps = DEFAULT_CAPS) -> list[Tangle]:
    """Tangles of every order 1..k."""
    return [t for j in range(1, k + 1) for t in enumerate_tangles(g, j, caps=caps)]


def all_distinguishers(g: Graph, k: int, *, caps: Caps = DEFAULT_CAPS):
    """``(t1, t2, efficient distinguishers)`` for each distinguishable pair of order <= k."""
    out = []
    for t1, t2 in itertools.combinations(all_tangles(g, k, caps=caps), 2):
        if distinguishable(t1, t2):
            out.append((t1, t2, efficient_distinguishers(g, t1, t2)))
    return out
