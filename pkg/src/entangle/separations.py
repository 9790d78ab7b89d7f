"""Separations of a graph: enumeration, predicates and the corner calculus.

Vertex sets are bitmasks internally. A :class:`Separation` stores its two
sides with the lexicographically smaller (as sorted id tuples) side first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, ContractError, InputError
from .graph import Graph, ids_of, mask_of, relabel_mask


def lex_less(x: int, y: int) -> bool:
    """Compare vertex sets as sorted id tuples, without building the tuples."""
    d = x ^ y
    if d == 0:
        return False
    v = (d & -d).bit_length() - 1
    if x >> v & 1:
        return bool(y >> (v + 1))
    return not x >> (v + 1)


@dataclass(frozen=True)
class Separation:
    a: int
    b: int

    @classmethod
    def make(cls, x: int, y: int) -> "Separation":
        if x == y:
            raise InputError("a separation needs two distinct sides")
        if lex_less(y, x):
            x, y = y, x
        return cls(x, y)

    @classmethod
    def from_sides(cls, x: Iterable[int], y: Iterable[int]) -> "Separation":
        return cls.make(mask_of(x), mask_of(y))

    @property
    def sides(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def separator(self) -> int:
        return self.a & self.b

    @property
    def order(self) -> int:
        return (self.a & self.b).bit_count()

    @cached_property
    def side_a(self) -> tuple[int, ...]:
        return ids_of(self.a)

    @cached_property
    def side_b(self) -> tuple[int, ...]:
        return ids_of(self.b)

    @cached_property
    def sort_key(self) -> tuple:
        return (self.order, self.side_a, self.side_b)

    def __lt__(self, other: "Separation") -> bool:
        return self.sort_key < other.sort_key

    def relabel(self, perm: Sequence[int]) -> "Separation":
        return Separation.make(relabel_mask(self.a, perm), relabel_mask(self.b, perm))

    def __repr__(self) -> str:
        return f"Sep({set(self.side_a) or '{}'} | {set(self.side_b) or '{}'})"


def is_separation(g: Graph, x: int, y: int) -> bool:
    """Sides cover V(G) and no edge joins the two strict sides."""
    if x | y != g.full or x == y:
        return False
    only_x, only_y = x & ~y, y & ~x
    return g.neighbourhood(only_x) & only_y == 0


def check_separation(g: Graph, s: Separation) -> None:
    if (s.a | s.b) >> g.n:
        raise InputError(f"{s!r} uses vertices outside the graph")
    if not is_separation(g, s.a, s.b):
        raise InputError(f"{s!r} is not a separation of the graph")


def is_proper(s: Separation) -> bool:
    return bool(s.a & ~s.b) and bool(s.b & ~s.a)


def is_tight(g: Graph, s: Separation) -> bool:
    sep = s.separator

    def has_full_component(strict: int) -> bool:
        for comp in g.component_masks(~strict & g.full):
            if g.neighbourhood(comp) == sep:
                return True
        return False

    return has_full_component(s.a & ~s.b) and has_full_component(s.b & ~s.a)


def _le(a: int, b: int, c: int, d: int) -> bool:
    # (a, b) <= (c, d) as oriented separations
    return a & ~c == 0 and d & ~b == 0


def nested(s: Separation, t: Separation) -> bool:
    a, b, c, d = s.a, s.b, t.a, t.b
    return _le(a, b, c, d) or _le(a, b, d, c) or _le(b, a, c, d) or _le(b, a, d, c)


def crosses(s: Separation, t: Separation) -> bool:
    return not nested(s, t)


def classify_pair(s: Separation, t: Separation) -> str:
    return "nested" if nested(s, t) else "crossing"


def corner(x: int, x_other: int, y: int, y_other: int) -> Separation:
    """Corner {X & Y, X' | Y'} for chosen sides X of one and Y of the other."""
    return Separation.make(x & y, x_other | y_other)


@dataclass(frozen=True)
class CornerQuad:
    """The four corners of a crossing pair ``s``, ``t``.

    ``corners[(i, j)]`` is the corner built from side ``i`` of ``s`` and side
    ``j`` of ``t`` (0 -> ``.a``, 1 -> ``.b``). Corners sharing ``i`` lie on the
    same side of ``s``; ``(i, j)`` and ``(1-i, 1-j)`` are opposite.
    """

    s: Separation
    t: Separation
    corners: dict

    def opposite_pairs(self) -> list[tuple[Separation, Separation]]:
        c = self.corners
        return [(c[0, 0], c[1, 1]), (c[0, 1], c[1, 0])]

    def same_side_of_s(self, i: int) -> tuple[Separation, Separation]:
        return (self.corners[i, 0], self.corners[i, 1])

    def same_side_of_t(self, j: int) -> tuple[Separation, Separation]:
        return (self.corners[0, j], self.corners[1, j])

    def coincidences(self) -> list[tuple[tuple[int, int], str]]:
        """Corners equal to ``s``, ``t`` or to another corner (reported, not removed)."""
        out = []
        tags = sorted(self.corners)
        for k, tag in enumerate(tags):
            c = self.corners[tag]
            if c == self.s:
                out.append((tag, "s"))
            if c == self.t:
                out.append((tag, "t"))
            for other in tags[k + 1:]:
                if self.corners[other] == c:
                    out.append((tag, f"corner{other}"))
        return out


def corners(s: Separation, t: Separation) -> CornerQuad:
    if nested(s, t):
        raise ContractError("corners are only defined for crossing separations")
    ss, ts = s.sides, t.sides
    quad = {
        (i, j): corner(ss[i], ss[1 - i], ts[j], ts[1 - j])
        for i in (0, 1)
        for j in (0, 1)
    }
    return CornerQuad(s, t, quad)


# --- enumeration --------------------------------------------------------


def _raw_separations(g: Graph, max_order: int | None, cap: int) -> list[Separation]:
    bound = g.n if max_order is None else min(max_order, g.n)
    out: list[Separation] = []
    for x in range(1 << g.n):
        if x.bit_count() > bound:
            continue
        comps = g.component_masks(x)
        if not comps:
            continue
        first, rest = comps[0], comps[1:]
        for pick in range(1 << len(rest)):
            g1 = first
            g2 = 0
            for i, c in enumerate(rest):
                if pick >> i & 1:
                    g1 |= c
                else:
                    g2 |= c
            out.append(Separation.make(x | g1, x | g2))
            if len(out) > cap:
                raise CapExceeded("number of separations", cap, len(out))
    out.sort()
    return out


def enumerate_separations(
    g: Graph,
    max_order: int | None = None,
    *,
    proper_only: bool = False,
    caps: Caps = DEFAULT_CAPS,
) -> list[Separation]:
    """All separations of order <= ``max_order`` in canonical order.

    Every separation is {X + group1, X + group2} for its separator X and a
    bipartition of the components of G - X, so we generate it that way.
    """
    guard_size(g, caps)
    seps = separation_space(g, caps.max_separations).seps
    if max_order is not None:
        seps = [s for s in seps if s.order <= max_order]
    if proper_only:
        seps = [s for s in seps if is_proper(s)]
    return list(seps)


class SeparationSpace:
    """All separations of one graph plus vectorised side arrays.

    ``A[i]``, ``B[i]`` are the side masks of ``seps[i]`` as uint64.
    """

    def __init__(self, g: Graph, cap: int = DEFAULT_CAPS.max_separations):
        if g.n > 32:
            raise CapExceeded("vertex count for bitmask kernels", 32, g.n)
        self.graph = g
        self.seps = _raw_separations(g, None, cap)
        self.index = {s: i for i, s in enumerate(self.seps)}
        self.A = np.array([s.a for s in self.seps], dtype=np.uint64)
        self.B = np.array([s.b for s in self.seps], dtype=np.uint64)
        self.orders = np.array([s.order for s in self.seps], dtype=np.int64)
        self.proper = np.array([is_proper(s) for s in self.seps], dtype=bool)
        keys = _pair_keys(self.A, self.B, g.n)
        self._key_order = np.argsort(keys)
        self._keys_sorted = keys[self._key_order]

    def __len__(self) -> int:
        return len(self.seps)

    def lookup(self, x: int, y: int) -> int:
        """Space index of {x, y}, or -1 if it is not a separation here."""
        if x == y:
            return -1
        return self.index.get(Separation.make(x, y), -1)

    def lookup_many(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Space indices of the separations {X[i], Y[i]}; -1 where absent."""
        keys = _pair_keys(X, Y, self.graph.n)
        pos = np.searchsorted(self._keys_sorted, keys)
        pos = np.minimum(pos, len(self._keys_sorted) - 1)
        hit = self._keys_sorted[pos] == keys
        return np.where(hit, self._key_order[pos], -1)

    @cached_property
    def cross_matrix(self) -> np.ndarray:
        return np.array([self.crossing_mask(s) for s in self.seps], dtype=bool).reshape(len(self), len(self))

    def crossing_mask(self, s: Separation) -> np.ndarray:
        """Boolean array: which members of the space cross ``s``."""
        return crossing_vector(s.a, s.b, self.A, self.B)


def crossing_vector(a: int, b: int, C: np.ndarray, D: np.ndarray) -> np.ndarray:
    a = np.uint64(a)
    b = np.uint64(b)
    le = lambda p, q, r, t: ((p & ~r) == 0) & ((t & ~q) == 0)  # noqa: E731
    nest = le(a, b, C, D) | le(a, b, D, C) | le(b, a, C, D) | le(b, a, D, C)
    return ~nest


def guard_size(g: Graph, caps: Caps) -> None:
    if g.n > caps.max_vertices:
        raise CapExceeded("vertex count", caps.max_vertices, g.n)


def _pair_keys(X: np.ndarray, Y: np.ndarray, n: int) -> np.ndarray:
    lo = np.minimum(X, Y).astype(np.uint64)
    hi = np.maximum(X, Y).astype(np.uint64)
    return (lo << np.uint64(n)) | hi


@lru_cache(maxsize=64)
def separation_space(g: Graph, cap: int = DEFAULT_CAPS.max_separations) -> SeparationSpace:
    return SeparationSpace(g, cap)


def popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.int64)
