#!/usr/bin/env python3
"""Sizes, tangle counts and friendly separations for small Farey graphs and wheels."""

from __future__ import annotations

from entangle.entanglement import friendly, max_entanglement
from entangle.graph import farey, wheel
from entangle.suites import farey_n
from entangle.tangles import enumerate_tangles
from entangle.treedec import build_tree_decomposition


def row(name, g, n_seps=None):
    union = max_entanglement(g)
    fr = friendly(g)
    td = build_tree_decomposition(g, fr)
    tangles = [len(enumerate_tangles(g, k)) for k in (1, 2, 3, 4)]
    extra = "" if n_seps is None else f" N={len(n_seps)} N<=friendly={set(n_seps) <= set(fr)}"
    print(
        f"{name:9s} n={g.n:2d} m={len(g.edges):2d} union={len(union):3d} friendly={len(fr):3d} "
        f"bags={len(td.bags):3d} tangles(k=1..4)={tangles}{extra}"
    )


def main() -> None:
    for k in (1, 2):
        g = farey(k)
        row(f"farey-{k}", g, farey_n(g))
    for r in range(3, 9):
        row(f"wheel-{r}", wheel(r))


if __name__ == "__main__":
    main()
