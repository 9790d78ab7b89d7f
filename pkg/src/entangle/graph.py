"""Finite simple graphs on vertex ids ``0..n-1`` and the example families."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError

Edge = tuple[int, int]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def ids_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _norm_edge(u: int, v: int, n: int) -> Edge:
    if not (0 <= u < n and 0 <= v < n):
        raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    blue: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be non-negative")
        edges = tuple(sorted({_norm_edge(u, v, self.n) for u, v in self.edges}))
        blue = tuple(sorted({_norm_edge(u, v, self.n) for u, v in self.blue}))
        if not set(blue) <= set(edges):
            raise InputError("blue edges must be edges of the graph")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "blue", blue)

    @cached_property
    def full(self) -> int:
        """Bitmask of V(G)."""
        return (1 << self.n) - 1

    @cached_property
    def adj(self) -> tuple[int, ...]:
        nbrs = [0] * self.n
        for u, v in self.edges:
            nbrs[u] |= 1 << v
            nbrs[v] |= 1 << u
        return tuple(nbrs)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v in self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbourhood(self, vertices: int) -> int:
        """Vertices outside ``vertices`` adjacent to some vertex inside (masks)."""
        out = 0
        m = vertices
        while m:
            low = m & -m
            out |= self.adj[low.bit_length() - 1]
            m ^= low
        return out & ~vertices

    def component_masks(self, removed: int = 0) -> list[int]:
        """Components of G - removed as bitmasks, ordered by smallest vertex."""
        todo = self.full & ~removed
        comps = []
        while todo:
            seed = todo & -todo
            comp = seed
            frontier = seed
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = self.adj[low.bit_length() - 1] & todo & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            todo &= ~comp
        return comps

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def induced_edge_mask(self, vertices: int) -> int:
        """Bitmask over ``self.edges`` of the edges of G[vertices]."""
        out = 0
        for i, em in enumerate(self.edge_masks):
            if em & vertices == em:
                out |= 1 << i
        return out


def build_graph(n: int, edges: Sequence[Sequence[int]], blue: Sequence[Sequence[int]] = ()) -> Graph:
    return Graph(n, tuple(tuple(e) for e in edges), tuple(tuple(e) for e in blue))


def components_after_deletion(g: Graph, removed: Iterable[int]) -> list[frozenset[int]]:
    removed = set(removed)
    if any(not 0 <= v < g.n for v in removed):
        raise InputError("deleted vertices must belong to the graph")
    return [frozenset(ids_of(c)) for c in g.component_masks(mask_of(removed))]


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under ``v -> perm[v]``."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise InputError("relabeling must be a permutation of 0..n-1")
    return Graph(
        g.n,
        tuple((perm[u], perm[v]) for u, v in g.edges),
        tuple((perm[u], perm[v]) for u, v in g.blue),
    )


def relabel_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    v = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[v]
        mask >>= 1
        v += 1
    return out


def inverse_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


# --- generators ---------------------------------------------------------


def farey(k: int) -> Graph:
    """Farey graph of order ``k`` with its blue edges.

    Order 1 is the 4-cycle 0-1-2-3 (all blue) plus the chord {0, 2}. Each
    further generation walks the blue edges in sorted order, appends a vertex
    joined to both ends by blue edges and uncolours the old edge.
    """
    if k < 1:
        raise InputError("Farey graphs are defined for order k >= 1")
    n = 4
    edges = {(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)}
    blue = {(0, 1), (1, 2), (2, 3), (0, 3)}
    for _ in range(k - 1):
        new_blue = set()
        for u, v in sorted(blue):
            w = n
            n += 1
            edges |= {(u, w), (v, w)}
            new_blue |= {(u, w), (v, w)}
        blue = new_blue
    return Graph(n, tuple(edges), tuple(blue))


def wheel(r: int) -> Graph:
    """Rim ``0..r-1`` in cycle order, hub ``r``."""
    if r < 3:
        raise InputError("a wheel needs a rim of length >= 3")
    rim = [(i, (i + 1) % r) for i in range(r)]
    spokes = [(i, r) for i in range(r)]
    return Graph(r + 1, tuple(rim + spokes))


def path(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least three vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def bowtie() -> Graph:
    """Triangles {0,1,2} and {0,3,4} sharing the cut vertex 0."""
    return Graph(5, ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)))


def glued_cliques(k: int = 4, shared: int = 2) -> Graph:
    """Two copies of K_k identified on ``shared`` vertices (ids ``0..shared-1``)."""
    if not 0 <= shared <= k:
        raise InputError("shared vertex count must lie in 0..k")
    first = list(range(k))
    second = list(range(shared)) + list(range(k, 2 * k - shared))
    edges = list(itertools.combinations(first, 2)) + list(itertools.combinations(second, 2))
    return Graph(2 * k - shared, tuple(edges))


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise InputError("grid dimensions must be positive")
    vid = lambda i, j: i * cols + j  # noqa: E731
    edges = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((vid(i, j), vid(i, j + 1)))
            if i + 1 < rows:
                edges.append((vid(i, j), vid(i + 1, j)))
    return Graph(rows * cols, tuple(edges))
