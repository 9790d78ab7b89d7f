"""Tree-decompositions from nested sets of proper separations.

Nodes are the down-closed orientations of the nested set: one oriented
version ``(small, big)`` per member such that whenever ``(A, B) <= (C, D)``
with ``(C, D)`` chosen, ``(A, B)`` is chosen too. Two nodes are adjacent when
they differ on exactly one member; a node's bag is the intersection of its big
sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import DEFAULT_CAPS, Caps
from .entanglement import verify_nested
from .errors import ContractError
from .graph import Graph, ids_of
from .separations import Separation, is_proper
from .tangles import all_distinguishers, Tangle


@dataclass(frozen=True)
class TreeDecomposition:
    members: tuple[Separation, ...]
    # per node: for each member, 0 if the small side is ``member.a`` else 1
    nodes: tuple[tuple[int, ...], ...]
    bags: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    edge_separation: dict

    def oriented(self, node: int) -> list[tuple[int, int]]:
        out = []
        for s, bit in zip(self.members, self.nodes[node]):
            out.append((s.a, s.b) if bit == 0 else (s.b, s.a))
        return out

    def bag_ids(self, node: int) -> tuple[int, ...]:
        return ids_of(self.bags[node])


@dataclass(frozen=True)
class TDViolation:
    kind: str
    detail: str


def _le(o1: tuple[int, int], o2: tuple[int, int]) -> bool:
    return o1[0] & ~o2[0] == 0 and o2[1] & ~o1[1] == 0


def _orient(s: Separation, bit: int) -> tuple[int, int]:
    return (s.a, s.b) if bit == 0 else (s.b, s.a)


def _compatible(o1: tuple[int, int], o2: tuple[int, int]) -> bool:
    inv1 = (o1[1], o1[0])
    inv2 = (o2[1], o2[0])
    return not _le(inv1, o2) and not _le(inv2, o1)


def down_closed_orientations(members: Sequence[Separation]) -> list[tuple[int, ...]]:
    """All down-closed orientations; down-closure is a pairwise condition."""
    out: list[tuple[int, ...]] = []
    picked: list[tuple[int, int]] = []
    bits: list[int] = []

    def dfs(i: int) -> None:
        if i == len(members):
            out.append(tuple(bits))
            return
        for bit in (0, 1):
            o = _orient(members[i], bit)
            if all(_compatible(o, p) for p in picked):
                picked.append(o)
                bits.append(bit)
                dfs(i + 1)
                picked.pop()
                bits.pop()

    dfs(0)
    return out


def build_tree_decomposition(g: Graph, family: Iterable[Separation]) -> TreeDecomposition:
    members = tuple(sorted(set(family)))
    for s in members:
        if not is_proper(s):
            raise ContractError(f"{s!r} is not proper")
    if verify_nested(members) is not None:
        raise ContractError("separations must be pairwise nested")
    raw = down_closed_orientations(members)
    bag_of = {}
    for bits in raw:
        bag = g.full
        for s, bit in zip(members, bits):
            bag &= _orient(s, bit)[1]
        bag_of[bits] = bag
    nodes = sorted(raw, key=lambda b: (ids_of(bag_of[b]), b))
    pos = {b: i for i, b in enumerate(nodes)}
    edges = []
    edge_sep = {}
    for i, bits in enumerate(nodes):
        for j, s in enumerate(members):
            flipped = bits[:j] + (1 - bits[j],) + bits[j + 1:]
            other = pos.get(flipped)
            if other is not None and i < other:
                edges.append((i, other))
                edge_sep[(i, other)] = s
    return TreeDecomposition(
        members=members,
        nodes=tuple(nodes),
        bags=tuple(bag_of[b] for b in nodes),
        edges=tuple(edges),
        edge_separation=edge_sep,
    )


def _components(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> list[set[int]]:
    adj = {v: set() for v in nodes}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].add(v)
            adj[v].add(u)
    seen, comps = set(), []
    for v in sorted(adj):
        if v in seen:
            continue
        comp, stack = set(), [v]
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u] - comp)
        seen |= comp
        comps.append(comp)
    return comps


def validate_tree_decomposition(g: Graph, td: TreeDecomposition) -> TDViolation | None:
    nodes = range(len(td.bags))
    if not td.bags:
        return TDViolation("tree", "no nodes")
    if len(td.edges) != len(td.bags) - 1 or len(_components(nodes, td.edges)) != 1:
        return TDViolation("tree", "node/edge structure is not a tree")
    covered = 0
    for bag in td.bags:
        covered |= bag
    if covered != g.full:
        return TDViolation("vertex-cover", f"vertices {list(ids_of(g.full & ~covered))} lie in no bag")
    for u, v in g.edges:
        em = (1 << u) | (1 << v)
        if not any(bag & em == em for bag in td.bags):
            return TDViolation("edge-cover", f"edge {(u, v)} lies in no bag")
    for v in range(g.n):
        holders = [i for i in nodes if td.bags[i] >> v & 1]
        if len(_components(holders, td.edges)) != 1:
            return TDViolation("subtree", f"nodes containing vertex {v} are disconnected")
    for edge in td.edges:
        s = td.edge_separation.get(edge)
        if s is None:
            return TDViolation("edge-separation", f"tree edge {edge} has no separation")
        rest = [e for e in td.edges if e != edge]
        sides = []
        for comp in _components(nodes, rest):
            m = 0
            for i in comp:
                m |= td.bags[i]
            sides.append(m)
        if len(sides) != 2 or {sides[0], sides[1]} != {s.a, s.b}:
            return TDViolation("edge-separation", f"tree edge {edge} does not induce {s!r}")
    return None


def check_efficient_distinguishing(
    g: Graph, family: Iterable[Separation], k: int, *, caps: Caps = DEFAULT_CAPS
) -> tuple[Tangle, Tangle] | None:
    """First distinguishable tangle pair (orders <= k) no member distinguishes efficiently."""
    fam = set(family)
    for t1, t2, eff in all_distinguishers(g, k, caps=caps):
        if not fam & eff:
            return (t1, t2)
    return None


def isomorphic_under(td1: TreeDecomposition, td2: TreeDecomposition, perm: Sequence[int]) -> bool:
    """Does relabeling by ``perm`` carry ``td1`` onto ``td2`` (nodes, bags, tree edges)?"""
    from .graph import relabel_mask

    if len(td1.bags) != len(td2.bags) or len(td1.edges) != len(td2.edges):
        return False
    sig2 = {frozenset(td2.oriented(i)): i for i in range(len(td2.bags))}
    image = {}
    for i in range(len(td1.bags)):
        sig = frozenset((relabel_mask(a, perm), relabel_mask(b, perm)) for a, b in td1.oriented(i))
        j = sig2.get(sig)
        if j is None or td2.bags[j] != relabel_mask(td1.bags[i], perm):
            return False
        image[i] = j
    e2 = {frozenset(e) for e in td2.edges}
    return all(frozenset((image[u], image[v])) in e2 for u, v in td1.edges)


def to_dot(td: TreeDecomposition) -> str:
    lines = ["graph decomposition {"]
    for i in range(len(td.bags)):
        label = ",".join(map(str, td.bag_ids(i)))
        lines.append(f'  n{i} [label="{{{label}}}"];')
    for u, v in td.edges:
        adhesion = ",".join(map(str, ids_of(td.edge_separation[(u, v)].separator)))
        lines.append(f'  n{u} -- n{v} [label="{{{adhesion}}}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(td: TreeDecomposition) -> dict:
    from .io import separation_to_json

    return {
        "nodes": [
            {"id": i, "bag": list(td.bag_ids(i))} for i in range(len(td.bags))
        ],
        "edges": [
            {
                "nodes": [u, v],
                "separation": separation_to_json(td.edge_separation[(u, v)]),
                "adhesion": list(ids_of(td.edge_separation[(u, v)].separator)),
            }
            for u, v in td.edges
        ],
    }
