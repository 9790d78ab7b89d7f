"""Greatest fixed points of the entanglement operator.

Both the graph engine and the abstract engine reduce axiom (E) to the same
shape: each candidate ``s`` carries a list of *requirements*, each a set of
candidate corners of which at least one must stay in the family. An empty
requirement can never be met, so ``s`` lies in no entanglement.

For a pool ``W`` the operator ``F_W(X) = {s in W : every requirement of s meets X}``
is monotone, and a union of families satisfying (E) still satisfies it, so
the greatest fixed point below ``W`` is the largest entanglement inside ``W``
(or empty).
"""

from __future__ import annotations

from collections import defaultdict
from typing import Hashable, Iterable, Mapping, Sequence

Requirements = Mapping[Hashable, Sequence[frozenset]]


def greatest_fixpoint(pool: Iterable[Hashable], requirements: Requirements) -> set:
    alive = set(pool)
    watchers = defaultdict(list)
    for s in alive:
        for req in requirements.get(s, ()):
            for c in req:
                watchers[c].append(s)

    def satisfied(s) -> bool:
        return all(not req.isdisjoint(alive) for req in requirements.get(s, ()))

    queue = [s for s in alive if not satisfied(s)]
    while queue:
        s = queue.pop()
        if s not in alive or satisfied(s):
            continue
        alive.discard(s)
        for w in watchers[s]:
            if w in alive:
                queue.append(w)
    return alive


def threshold_friendly(union: Iterable[Hashable], requirements: Requirements, x: Mapping) -> set:
    """Members ``s`` of some entanglement inside ``{t : x[t] >= x[s]}``.

    Such an entanglement has ``s`` as an ``x``-minimiser, and conversely any
    entanglement minimised by ``s`` sits inside that pool; one fixed point per
    distinct threshold value suffices.
    """
    union = set(union)
    out = set()
    for theta in sorted({x[s] for s in union}):
        pool = {t for t in union if x[t] >= theta}
        kept = greatest_fixpoint(pool, requirements)
        out |= {s for s in kept if x[s] == theta}
    return out
