"""Maximum matchings of forests and unicyclic graphs.

Weights never influence the matching number, so everything here looks only
at the underlying graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import NotAForestError, NotUnicyclicError, UnsupportedClassError
from .graph_model import Tag, WeightedGraph, classify_structure


@dataclass(frozen=True)
class MatchingResult:
    size: int
    witness: frozenset[tuple[int, int]]


def max_matching_forest(F: WeightedGraph, rng: random.Random | None = None) -> MatchingResult:
    """Leaf-greedy maximum matching of a forest.

    Repeatedly match a leaf with its only neighbour and delete both. Passing
    ``rng`` processes leaves in random order; the size does not depend on it.
    """
    if classify_structure(F).tag is not Tag.FOREST:
        raise NotAForestError("leaf-greedy matching needs a forest")
    adj = {v: set(F.neighbors(v)) for v in F.vertices}
    leaves = [v for v in F.vertices if len(adj[v]) == 1]
    matched: set[tuple[int, int]] = set()
    while leaves:
        if rng is not None:
            i = rng.randrange(len(leaves))
            leaves[i], leaves[-1] = leaves[-1], leaves[i]
        x = leaves.pop()
        if x not in adj or len(adj[x]) != 1:
            continue
        (y,) = adj[x]
        matched.add((min(x, y), max(x, y)))
        for z in (x, y):
            for t in adj.pop(z):
                if t in adj:
                    adj[t].discard(z)
                    if len(adj[t]) == 1:
                        leaves.append(t)
    return MatchingResult(len(matched), frozenset(matched))


def max_matching_unicyclic(G: WeightedGraph) -> MatchingResult:
    """Split on the first cycle edge ``uv``: either it is unused or it is matched."""
    cls = classify_structure(G)
    if cls.tag is not Tag.UNICYCLIC:
        raise NotUnicyclicError("graph is not unicyclic")
    u, v = cls.cycle[0], cls.cycle[1]
    skip = max_matching_forest(G.delete_edge(u, v))
    take = max_matching_forest(G.delete(u, v))
    if take.size + 1 > skip.size:
        return MatchingResult(take.size + 1, take.witness | {(min(u, v), max(u, v))})
    return skip


def max_matching(G: WeightedGraph) -> MatchingResult:
    """Componentwise matching for graphs whose components are trees or unicyclic."""
    cls = classify_structure(G)
    if cls.tag is Tag.FOREST:
        return max_matching_forest(G)
    if cls.tag is Tag.UNICYCLIC:
        return max_matching_unicyclic(G)
    size, witness = 0, frozenset()
    for comp in G.components():
        H = G.induced(comp)
        if H.size > H.order:
            raise UnsupportedClassError("component with more than one cycle")
        part = max_matching(H)
        size += part.size
        witness |= part.witness
    return MatchingResult(size, witness)


def matching_number(G: WeightedGraph) -> int:
    return max_matching(G).size


def is_saturated(G: WeightedGraph, v: int) -> bool:
    """True iff every maximum matching covers ``v``, i.e. ``m(G - v) = m(G) - 1``."""
    G._check_vertex(v)
    return matching_number(G.delete(v)) == matching_number(G) - 1
