"""Finite matroids given by rank oracles, and their separation setting."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Callable, Sequence

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, InputError
from .graph import Graph
from .separations import Separation, crosses
from .uncrossing import UncrossingSetting


class Matroid:
    """Ground set ``0..size-1``; ``rank`` takes a bitmask of elements."""

    def __init__(self, size: int, rank: Callable[[int], int], name: str = "matroid"):
        self.size = size
        self.full = (1 << size) - 1
        self.rank = lru_cache(maxsize=None)(rank)
        self.name = name

    def __repr__(self) -> str:
        return f"Matroid({self.name}, size={self.size})"

    def connectivity(self, a: int) -> int:
        return self.rank(a) + self.rank(self.full & ~a) - self.rank(self.full)

    @classmethod
    def uniform(cls, r: int, n: int) -> "Matroid":
        """U(r, n): rank-r uniform matroid on n elements."""
        if not 0 <= r <= n:
            raise InputError("uniform matroid needs 0 <= r <= n")
        return cls(n, lambda m: min(m.bit_count(), r), f"U({r},{n})")

    @classmethod
    def graphic(cls, g: Graph) -> "Matroid":
        """Cycle matroid; elements are ``g.edges`` in order."""
        edges = g.edges

        def rank(m: int) -> int:
            parent = list(range(g.n))

            def find(v):
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                return v

            r = 0
            for i, (u, v) in enumerate(edges):
                if m >> i & 1:
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[ru] = rv
                        r += 1
            return r

        return cls(len(edges), rank, f"M(graph n={g.n}, m={len(edges)})")

    @classmethod
    def binary(cls, columns: Sequence[Sequence[int]]) -> "Matroid":
        """Column matroid over GF(2); each column is one element."""
        cols = []
        for col in columns:
            if any(v not in (0, 1) for v in col):
                raise InputError("binary matroid entries must be 0 or 1")
            cols.append(sum(v << i for i, v in enumerate(col)))

        def rank(m: int) -> int:
            basis: list[int] = []
            for i, c in enumerate(cols):
                if not m >> i & 1:
                    continue
                for b in basis:
                    c = min(c, c ^ b)
                if c:
                    basis.append(c)
            return len(basis)

        return cls(len(cols), rank, f"binary({len(cols)} columns)")


def check_rank_axioms(m: Matroid, *, samples: int = 2000, seed: int = 0) -> str | None:
    """Normalised, unit-increasing and submodular rank; exhaustive for size <= 10."""
    if m.rank(0) != 0:
        return "rank of the empty set is not 0"
    subsets: Sequence[int]
    if m.size <= 10:
        subsets = range(1 << m.size)
        for x in subsets:
            for e in range(m.size):
                if not x >> e & 1:
                    step = m.rank(x | 1 << e) - m.rank(x)
                    if step not in (0, 1):
                        return f"adding {e} to {x:b} changes rank by {step}"
        pairs = itertools.product(subsets, repeat=2) if m.size <= 7 else None
    else:
        pairs = None
    if pairs is None:
        rng = random.Random(seed)
        pairs = ((rng.getrandbits(m.size), rng.getrandbits(m.size)) for _ in range(samples))
    for x, y in pairs:
        if m.rank(x | y) + m.rank(x & y) > m.rank(x) + m.rank(y):
            return f"submodularity fails on {x:b}, {y:b}"
    return None


class MatroidSetting(UncrossingSetting):
    """Bipartitions ``{A, E - A}`` with both parts non-empty."""

    def __init__(self, m: Matroid):
        self.matroid = m
        self.name = m.name
        full = m.full
        seen = set()
        els = []
        for a in range(1, full):
            sep = Separation.make(a, full & ~a)
            if sep not in seen:
                seen.add(sep)
                els.append(sep)
        self.elements = sorted(els)

    def sides(self, r: Separation) -> tuple[int, int]:
        return r.sides

    def crosses(self, r: Separation, s: Separation) -> bool:
        return crosses(r, s)

    def corner(self, r: Separation, s: Separation, i: int, j: int) -> Separation:
        inner = r.sides[i] & s.sides[j]
        return Separation.make(inner, self.matroid.full & ~inner)

    def order(self, sep: Separation) -> int:
        return self.matroid.connectivity(sep.a)


def matroid_setting(m: Matroid, *, caps: Caps = DEFAULT_CAPS) -> MatroidSetting:
    if m.size > caps.max_matroid_elements:
        raise CapExceeded("matroid ground set", caps.max_matroid_elements, m.size)
    if m.size < 2:
        raise InputError("matroid needs at least two elements to have a separation")
    return MatroidSetting(m)


def matroid_from_json(data) -> Matroid:
    from .io import graph_from_json

    try:
        kind = data["kind"]
        if kind == "uniform":
            return Matroid.uniform(int(data["r"]), int(data["n"]))
        if kind == "graphic":
            return Matroid.graphic(graph_from_json(data["graph"]))
        if kind == "binary":
            return Matroid.binary(data["columns"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed matroid JSON: {exc}") from exc
    raise InputError(f"unknown matroid kind {kind!r}")


def fano_columns() -> list[list[int]]:
    """The seven non-zero vectors of GF(2)^3 (rank 3)."""
    return [[(v >> i) & 1 for i in range(3)] for v in range(1, 8)]
