"""Deterministic graph corpus: named families plus all small connected graphs."""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded
from .graph import (
    Graph,
    bowtie,
    complete,
    cycle,
    farey,
    glued_cliques,
    grid,
    path,
    wheel,
)

ATLAS_MAX_N = 7


def named_families() -> list[tuple[str, Graph]]:
    out = [(f"farey-{k}", farey(k)) for k in (1, 2, 3)]
    out += [(f"wheel-{r}", wheel(r)) for r in range(3, 9)]
    out += [("bowtie", bowtie())]
    out += [
        ("glued-K4-edge", glued_cliques(4, 2)),
        ("glued-K4-vertex", glued_cliques(4, 1)),
        ("glued-K3-edge", glued_cliques(3, 2)),
        ("glued-K5-triangle", glued_cliques(5, 3)),
    ]
    out += [(f"path-{n}", path(n)) for n in range(2, 9)]
    out += [(f"cycle-{n}", cycle(n)) for n in range(3, 9)]
    out += [(f"complete-{n}", complete(n)) for n in range(2, 6)]
    out += [(f"grid-{r}x{c}", grid(r, c)) for r, c in ((2, 2), (2, 3), (2, 4), (3, 3))]
    return out


@lru_cache(maxsize=None)
def connected_graphs(max_n: int) -> tuple[tuple[str, Graph], ...]:
    """Every connected graph on 1..max_n vertices up to isomorphism (networkx atlas)."""
    if max_n > ATLAS_MAX_N:
        raise CapExceeded("exhaustive corpus vertex bound", ATLAS_MAX_N, max_n)
    out = []
    for i, h in enumerate(nx.graph_atlas_g()):
        n = h.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(h):
            out.append((f"atlas-{i}", Graph(n, tuple(h.edges()))))
    return tuple(out)


def corpus(max_n: int, exhaustive_n: int | None = None, *, caps: Caps = DEFAULT_CAPS) -> list[tuple[str, Graph]]:
    """Named graphs with at most ``max_n`` vertices, then the exhaustive part.

    ``exhaustive_n`` defaults to ``min(max_n, 7)``; pass 0 to disable it.
    """
    if max_n > caps.max_vertices:
        raise CapExceeded("corpus vertex bound", caps.max_vertices, max_n)
    if exhaustive_n is None:
        exhaustive_n = min(max_n, ATLAS_MAX_N)
    out = [(name, g) for name, g in named_families() if g.n <= max_n]
    if exhaustive_n > 0:
        out += list(connected_graphs(min(exhaustive_n, max_n)))
    return out
