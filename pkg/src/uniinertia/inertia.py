"""Combinatorial inertia of weighted forests, cycles and unicyclic graphs.

Forests: ``(m, m, n - 2m)`` with ``m`` the matching number, whatever the
weights. Cycles: one of four closed forms picked by the cycle's type.
Unicyclic graphs reduce to those two cases through the pendant tree of a
cycle vertex that is saturated in its own tree, or, when no such vertex
exists, by splitting off the cycle. Everything is exact; no tolerance is
involved anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence

from .errors import (
    NoTwinError,
    NotAForestError,
    NotPendantError,
    NotUnicyclicError,
    UnsupportedClassError,
)
from .graph_model import (
    Tag,
    WeightedGraph,
    classify_structure,
    cycle_edge_weights,
    pendant_twins,
    rooted_pendant_tree,
)
from .linalg import ZERO_INERTIA, Inertia, SymmetricRationalMatrix, charpoly_interpolation, congruence_inertia
from .matching import is_saturated, max_matching_forest

__all__ = [
    "CharPoly",
    "CycleType",
    "CycleWeights",
    "ElementarySubgraph",
    "Inertia",
    "SymmetricRationalMatrix",
    "charpoly_interpolation",
    "charpoly_oracle",
    "classify_cycle",
    "congruence_inertia",
    "cycle_inertia",
    "cycle_weights_of",
    "elementary_subgraphs",
    "forest_inertia",
    "inertia",
    "reduce_pendant",
    "reduce_twin",
    "sachs_coefficients",
    "saturated_cycle_vertex",
    "unicyclic_inertia",
]


class CycleType(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


@dataclass(frozen=True)
class CycleWeights:
    """Edge weights ``w_1..w_k`` in cyclic order (``w_k`` closes the cycle)."""

    weights: tuple[Fraction, ...]

    def __init__(self, weights: Sequence):
        ws = tuple(Fraction(w) for w in weights)
        if len(ws) < 3:
            raise ValueError("a cycle needs at least 3 edges")
        if any(w == 0 for w in ws):
            raise ValueError("cycle weights must be nonzero")
        object.__setattr__(self, "weights", ws)

    @property
    def k(self) -> int:
        return len(self.weights)

    @property
    def W(self) -> Fraction:
        return prod(self.weights, start=Fraction(1))

    @property
    def W_e(self) -> Fraction:
        """Product of the even-position weights ``w_2 w_4 ... w_k``; even k only."""
        if self.k % 2:
            raise ValueError("W_e is defined for even cycles only")
        return prod(self.weights[1::2], start=Fraction(1))

    @property
    def W_o(self) -> Fraction:
        if self.k % 2:
            raise ValueError("W_o is defined for even cycles only")
        return prod(self.weights[0::2], start=Fraction(1))


def cycle_weights_of(G: WeightedGraph, cycle: Sequence[int] | None = None) -> CycleWeights:
    if cycle is None:
        cls = classify_structure(G)
        if cls.tag is not Tag.UNICYCLIC:
            raise NotUnicyclicError("graph has no unique cycle")
        cycle = cls.cycle
    return CycleWeights(cycle_edge_weights(G, cycle))


def classify_cycle(cw: CycleWeights) -> CycleType:
    k = cw.k
    if k % 2 == 0:
        sign = -1 if ((k - 2) // 2) % 2 else 1
        return CycleType.A if cw.W_o + sign * cw.W_e == 0 else CycleType.B
    sign = -1 if ((k - 1) // 2) % 2 else 1
    return CycleType.C if sign * cw.W > 0 else CycleType.D


def cycle_inertia(cw: CycleWeights) -> Inertia:
    k = cw.k
    t = classify_cycle(cw)
    if t is CycleType.A:
        return Inertia((k - 2) // 2, (k - 2) // 2, 2)
    if t is CycleType.B:
        return Inertia(k // 2, k // 2, 0)
    if t is CycleType.C:
        return Inertia((k + 1) // 2, (k - 1) // 2, 0)
    return Inertia((k - 1) // 2, (k + 1) // 2, 0)


def forest_inertia(F: WeightedGraph) -> Inertia:
    if classify_structure(F).tag is not Tag.FOREST:
        raise NotAForestError("forest_inertia needs a forest")
    m = max_matching_forest(F).size
    return Inertia(m, m, F.order - 2 * m)


def reduce_pendant(G: WeightedGraph, v: int) -> tuple[WeightedGraph, Inertia]:
    """Delete pendant ``v`` and its neighbour; the deleted pair accounts for (1, 1, 0)."""
    if G.degree(v) != 1:
        raise NotPendantError(f"vertex {v} has degree {G.degree(v)}")
    (u,) = G.neighbors(v)
    return G.delete(u, v), Inertia(1, 1, 0)


def reduce_twin(G: WeightedGraph, v: int) -> WeightedGraph:
    """Delete one of two pendant twins; i+ and i- are unchanged."""
    if not any(v in pair for pair in pendant_twins(G)):
        raise NoTwinError(f"vertex {v} has no pendant twin")
    return G.delete(v)


def saturated_cycle_vertex(G: WeightedGraph, cycle: Sequence[int]) -> int | None:
    """First cycle vertex (in cycle order) saturated in its own pendant tree."""
    for v in cycle:
        tree = rooted_pendant_tree(G, v, cycle)
        if len(tree) > 1 and is_saturated(tree.graph, v):
            return v
    return None


def unicyclic_inertia(G: WeightedGraph) -> Inertia:
    cls = classify_structure(G)
    if cls.tag is not Tag.UNICYCLIC:
        raise NotUnicyclicError("unicyclic_inertia needs a connected unicyclic graph")
    cycle = cls.cycle
    v = saturated_cycle_vertex(G, cycle)
    if v is not None:
        tree = rooted_pendant_tree(G, v, cycle)
        return forest_inertia(tree.graph) + forest_inertia(G.delete(*tree.vertices))
    return cycle_inertia(cycle_weights_of(G, cycle)) + forest_inertia(G.delete(*cycle))


def inertia(G: WeightedGraph) -> Inertia:
    """Inertia of any weighted graph, summed over connected components.

    Trees and unicyclic components use the closed forms; anything else falls
    back to :func:`congruence_inertia` on the component's adjacency matrix.
    """
    cls = classify_structure(G)
    if cls.tag is Tag.FOREST:
        return forest_inertia(G)
    if cls.tag is Tag.UNICYCLIC:
        return unicyclic_inertia(G)
    total = ZERO_INERTIA
    for comp in G.components():
        H = G.induced(comp)
        if H.size == H.order - 1:
            total += forest_inertia(H)
        elif H.size == H.order:
            total += unicyclic_inertia(H)
        else:
            total += congruence_inertia(H.adjacency_matrix())
    return total


# ---------------------------------------------------------------------------
# characteristic polynomial from elementary subgraphs


@dataclass(frozen=True)
class ElementarySubgraph:
    """Vertex-disjoint single edges plus at most one cycle (here)."""

    matching: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...] = ()

    @property
    def components(self) -> int:
        return len(self.matching) + len(self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def vertex_count(self) -> int:
        return 2 * len(self.matching) + sum(len(c) for c in self.cycles)

    def edge_exponents(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Each edge with its exponent: 1 on a cycle component, 2 on a single edge."""
        for c in self.cycles:
            for i in range(len(c)):
                a, b = c[i], c[(i + 1) % len(c)]
                yield (min(a, b), max(a, b)), 1
        for e in self.matching:
            yield e, 2


def _matchings(G: WeightedGraph) -> Iterator[tuple[tuple[int, int], ...]]:
    """All matchings (including the empty one) by branching on the first edge."""
    edges = G.edge_pairs()

    def rec(i: int, used: frozenset, chosen: tuple):
        while i < len(edges) and (edges[i][0] in used or edges[i][1] in used):
            i += 1
        if i == len(edges):
            yield chosen
            return
        u, v = edges[i]
        yield from rec(i + 1, used | {u, v}, chosen + (edges[i],))
        yield from rec(i + 1, used, chosen)

    yield from rec(0, frozenset(), ())


def elementary_subgraphs(G: WeightedGraph) -> Iterator[ElementarySubgraph]:
    """Elementary subgraphs of a graph with at most one cycle."""
    if G.size > G.order - len(G.components()) + 1:
        raise UnsupportedClassError("elementary subgraph enumeration supports at most one cycle")
    for m in _matchings(G):
        yield ElementarySubgraph(m)
    cycle = _the_cycle(G)
    if cycle:
        for m in _matchings(G.delete(*cycle)):
            yield ElementarySubgraph(m, (cycle,))


def _the_cycle(G: WeightedGraph) -> tuple[int, ...]:
    for comp in G.components():
        H = G.induced(comp)
        if H.size == H.order:
            return classify_structure(H).cycle
    return ()


@dataclass(frozen=True)
class CharPoly:
    """Monic ``x^n + a_1 x^{n-1} + ... + a_n`` stored as ``(1, a_1, ..., a_n)``."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def nullity(self) -> int:
        """Multiplicity of the root 0: ``n`` minus the last nonzero index."""
        last = max(i for i, a in enumerate(self.coefficients) if a != 0)
        return self.degree - last

    def __str__(self) -> str:
        from .graph_model import format_rational

        return " ".join(format_rational(a) for a in self.coefficients)


def sachs_coefficients(G: WeightedGraph) -> CharPoly:
    """Char-poly coefficients as signed sums over elementary subgraphs.

    ``a_i = sum over U with i vertices of (-1)^{p(U)} 2^{c(U)} prod w(e)^{zeta(e,U)}``.
    """
    n = G.order
    coeffs = [Fraction(0)] * (n + 1)
    for U in elementary_subgraphs(G):
        term = Fraction((-1) ** U.components * 2**U.cycle_count)
        for (a, b), power in U.edge_exponents():
            term *= G.weight(a, b) ** power
        coeffs[U.vertex_count] += term
    return CharPoly(tuple(coeffs))


def charpoly_oracle(G: WeightedGraph) -> CharPoly:
    return CharPoly(tuple(charpoly_interpolation(G.adjacency_matrix())))
