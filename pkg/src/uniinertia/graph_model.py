"""Weighted simple graphs with exact rational edge weights.

Graphs are immutable. Deleting vertices keeps the surviving labels, so a
subgraph can always be related back to its parent; ``relabeled`` compacts
labels to ``1..n`` when a fresh graph is wanted.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    BadParamsError,
    DuplicateEdgeError,
    NotOnCycleError,
    NotUnicyclicError,
    ParseError,
    SelfLoopError,
    VertexOutOfRangeError,
    ZeroWeightError,
)

Weight = Union[int, Fraction, str]
Edge = tuple[int, int, Fraction]


def as_weight(value: Weight) -> Fraction:
    """Coerce an int, Fraction or ``p/q`` string to a nonzero Fraction."""
    if isinstance(value, float):
        raise TypeError("floating-point weights are not accepted; use Fraction")
    w = parse_rational(value) if isinstance(value, str) else Fraction(value)
    if w == 0:
        raise ZeroWeightError("edge weights must be nonzero")
    return w


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` with integer p and positive integer q."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"not an integer or p/q rational: {text!r}") from None
    if sep and (q <= 0 or den.strip().startswith(("+", "-"))):
        raise ParseError(f"denominator must be a positive integer: {text!r}")
    return Fraction(p, q)


def format_rational(value: Fraction) -> str:
    """Reduced ``p/q``, or bare ``p`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph whose edges carry nonzero rational weights.

    ``edges`` holds ``(u, v, w)`` triples with ``u < v``, sorted by endpoints.
    Use :func:`build_graph` to construct validated instances.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def _adj(self) -> dict[int, dict[int, Fraction]]:
        adj: dict[int, dict[int, Fraction]] = {v: {} for v in self.vertices}
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        return adj

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(sorted(self._adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def weight(self, u: int, v: int) -> Fraction:
        self._check_vertex(u)
        self._check_vertex(v)
        try:
            return self._adj[u][v]
        except KeyError:
            raise KeyError(f"no edge {u}-{v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    def _check_vertex(self, v: int) -> None:
        if v not in self._adj:
            raise VertexOutOfRangeError(f"vertex {v} not in graph")

    def adjacency_rows(self) -> list[list[Fraction]]:
        """Adjacency matrix rows, ordered by sorted vertex label."""
        index = {v: i for i, v in enumerate(self.vertices)}
        n = self.order
        rows = [[Fraction(0)] * n for _ in range(n)]
        for u, v, w in self.edges:
            rows[index[u]][index[v]] = w
            rows[index[v]][index[u]] = w
        return rows

    def adjacency_matrix(self):
        from .linalg import SymmetricRationalMatrix

        return SymmetricRationalMatrix(self.adjacency_rows())

    def induced(self, keep: Iterable[int]) -> WeightedGraph:
        keep = set(keep)
        for v in keep:
            self._check_vertex(v)
        return WeightedGraph(
            tuple(v for v in self.vertices if v in keep),
            tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def delete(self, *removed: int) -> WeightedGraph:
        """``G - {removed}``: drop the vertices and all incident edges."""
        for v in removed:
            self._check_vertex(v)
        gone = set(removed)
        return self.induced(v for v in self.vertices if v not in gone)

    def delete_edge(self, u: int, v: int) -> WeightedGraph:
        a, b = min(u, v), max(u, v)
        if not self.has_edge(a, b):
            raise KeyError(f"no edge {u}-{v}")
        return WeightedGraph(self.vertices, tuple(e for e in self.edges if e[:2] != (a, b)))

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples, ordered by least label."""
        seen: set[int] = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def reweighted(self, weights: Sequence[Weight] | Mapping[tuple[int, int], Weight]) -> WeightedGraph:
        """Same underlying graph with new weights.

        ``weights`` is either a sequence aligned with ``edges`` or a mapping
        from ``(u, v)`` pairs; unmapped edges keep their weight.
        """
        if isinstance(weights, Mapping):
            table = {(min(u, v), max(u, v)): as_weight(w) for (u, v), w in weights.items()}
            for pair in table:
                if not self.has_edge(*pair):
                    raise BadParamsError(f"no edge {pair[0]}-{pair[1]} to reweight")
            new = tuple((u, v, table.get((u, v), w)) for u, v, w in self.edges)
        else:
            if len(weights) != self.size:
                raise BadParamsError(f"expected {self.size} weights, got {len(weights)}")
            new = tuple((u, v, as_weight(w)) for (u, v, _), w in zip(self.edges, weights))
        return WeightedGraph(self.vertices, new)

    def unweighted(self) -> WeightedGraph:
        return self.reweighted([1] * self.size)

    def relabeled(self) -> WeightedGraph:
        """Copy with vertices renamed ``1..n`` preserving their order."""
        index = {v: i + 1 for i, v in enumerate(self.vertices)}
        return _make(self.order, ((index[u], index[v], w) for u, v, w in self.edges))


def _make(n: int, triples: Iterable[tuple[int, int, Fraction]]) -> WeightedGraph:
    edges = sorted((min(u, v), max(u, v), w) for u, v, w in triples)
    return WeightedGraph(tuple(range(1, n + 1)), tuple(edges))


def build_graph(n: int, weighted_edges: Iterable[Sequence]) -> WeightedGraph:
    """Validated graph on vertices ``1..n``.

    Each item is ``(u, v)`` (weight 1) or ``(u, v, w)``.
    """
    if n < 0:
        raise VertexOutOfRangeError("order must be nonnegative")
    seen: dict[tuple[int, int], Fraction] = {}
    for item in weighted_edges:
        if len(item) == 2:
            u, v = item
            w: Weight = 1
        elif len(item) == 3:
            u, v, w = item
        else:
            raise BadParamsError(f"edge must be (u, v) or (u, v, w): {item!r}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        for x in (u, v):
            if not (1 <= x <= n):
                raise VertexOutOfRangeError(f"vertex {x} outside 1..{n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key[0]}-{key[1]}")
        seen[key] = as_weight(w)
    return _make(n, ((u, v, w) for (u, v), w in seen.items()))


# ---------------------------------------------------------------------------
# structure


class Tag(enum.Enum):
    FOREST = "Forest"
    UNICYCLIC = "Unicyclic"
    OTHER = "Other"


@dataclass(frozen=True)
class GraphClass:
    tag: Tag
    cycle: tuple[int, ...] = ()

    @property
    def girth(self) -> int | None:
        return len(self.cycle) if self.cycle else None


def _pruned_core(G: WeightedGraph) -> set[int]:
    """Vertices left after repeatedly deleting vertices of degree <= 1."""
    deg = {v: G.degree(v) for v in G.vertices}
    alive = set(G.vertices)
    stack = [v for v in G.vertices if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in G.neighbors(v):
            if u in alive:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    return alive


def classify_structure(G: WeightedGraph) -> GraphClass:
    """Forest, connected unicyclic (with its cycle in traversal order), or other.

    The cycle starts at its least vertex and proceeds toward the smaller of
    that vertex's two cycle neighbours.
    """
    ncomp = len(G.components())
    if G.size == G.order - ncomp:
        return GraphClass(Tag.FOREST)
    if ncomp != 1 or G.size != G.order:
        return GraphClass(Tag.OTHER)
    core = _pruned_core(G)
    start = min(core)
    cycle = [start]
    prev, cur = start, min(u for u in G.neighbors(start) if u in core)
    while cur != start:
        cycle.append(cur)
        nxt = next(u for u in G.neighbors(cur) if u in core and u != prev)
        prev, cur = cur, nxt
    return GraphClass(Tag.UNICYCLIC, tuple(cycle))


def unique_cycle(G: WeightedGraph) -> tuple[int, ...]:
    cls = classify_structure(G)
    if cls.tag is not Tag.UNICYCLIC:
        raise NotUnicyclicError(f"graph is {cls.tag.value}, not unicyclic")
    return cls.cycle


def cycle_edge_weights(G: WeightedGraph, cycle: Sequence[int]) -> list[Fraction]:
    """``w_i = w(c_i c_{i+1})`` around the cycle, closing with ``w(c_k c_1)``."""
    k = len(cycle)
    return [G.weight(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def girth(G: WeightedGraph) -> int | None:
    return classify_structure(G).girth


def pendant_vertices(G: WeightedGraph) -> list[int]:
    return [v for v in G.vertices if G.degree(v) == 1]


def pendant_twins(G: WeightedGraph) -> list[tuple[int, int]]:
    """All pairs of pendant vertices sharing their neighbour."""
    by_anchor: dict[int, list[int]] = {}
    for v in pendant_vertices(G):
        by_anchor.setdefault(G.neighbors(v)[0], []).append(v)
    pairs = []
    for group in by_anchor.values():
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                pairs.append((a, b))
    return sorted(pairs)


@dataclass(frozen=True)
class RootedPendantTree:
    """The tree hanging off cycle vertex ``root`` once the cycle edges at it are cut."""

    root: int
    vertices: frozenset[int]
    parent: WeightedGraph = field(repr=False, compare=False)

    @property
    def graph(self) -> WeightedGraph:
        return self.parent.induced(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


def rooted_pendant_tree(G: WeightedGraph, v: int, cycle: Sequence[int] | None = None) -> RootedPendantTree:
    if cycle is None:
        cycle = unique_cycle(G)
    on_cycle = set(cycle)
    if v not in on_cycle:
        raise NotOnCycleError(f"vertex {v} is not on the cycle")
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in G.neighbors(x):
            if y not in seen and y not in on_cycle:
                seen.add(y)
                queue.append(y)
    return RootedPendantTree(v, frozenset(seen), G)


# ---------------------------------------------------------------------------
# named families; every constructor returns unit weights unless overridden


def _cycle_edges(k: int, offset: int = 0) -> list[tuple[int, int]]:
    return [(offset + i, offset + i % k + 1) for i in range(1, k + 1)]


def _family_edges(name: str, p: dict) -> tuple[int, list[tuple[int, int]]]:
    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise BadParamsError(f"{name}: {msg}")

    if name == "C":
        k = p["k"]
        need(k >= 3, "cycle length must be >= 3")
        return k, _cycle_edges(k)
    if name == "P":
        n = p["n"]
        need(n >= 1, "path order must be >= 1")
        return n, [(i, i + 1) for i in range(1, n)]
    if name == "star":
        m = p["m"]
        need(m >= 0, "star needs m >= 0 leaves")
        return m + 1, [(1, i) for i in range(2, m + 2)]
    if name == "U":
        n, k = p["n"], p["k"]
        need(3 <= k < n, "requires 3 <= k < n")
        return n, _cycle_edges(k) + [(1, j) for j in range(k + 1, n + 1)]
    if name == "Gstar":
        n, k = p["n"], p["k"]
        need(3 <= k <= n - 2, "requires 3 <= k <= n-2")
        c = k + 1
        return n, _cycle_edges(k) + [(1, c)] + [(c, j) for j in range(c + 1, n + 1)]
    if name == "U1":
        r, s = p["r"], p["s"]
        need(r >= 0 and s >= 0, "r, s must be >= 0")
        n = p.get("n", r + s + 3)
        need(r + s == n - 3, "requires r + s = n - 3")
        leaves = iter(range(4, n + 1))
        return n, _cycle_edges(3) + [(1, next(leaves)) for _ in range(r)] + [(2, next(leaves)) for _ in range(s)]
    if name == "U2":
        a, b = p["p"], p["q"]
        need(a >= 0 and b >= 0, "p, q must be >= 0")
        n = p.get("n", a + b + 4)
        need(a + b == n - 4, "requires p + q = n - 4")
        leaves = iter(range(5, n + 1))
        return n, _cycle_edges(4) + [(1, next(leaves)) for _ in range(a)] + [(3, next(leaves)) for _ in range(b)]
    if name in ("U3", "H1", "U4"):
        k = 4 if name == "U4" else 3
        n = p["n"]
        need(n >= (5 if name == "H1" else k + 1), "order too small for this family")
        c = k + 1
        return n, _cycle_edges(k) + [(1, c)] + [(c, j) for j in range(c + 1, n + 1)]
    if name == "G1":
        return 9, _cycle_edges(8) + [(1, 9)]
    if name == "G2":
        return 8, _cycle_edges(7) + [(1, 8)]
    raise BadParamsError(f"unknown family {name!r}")


FAMILIES = ("C", "P", "star", "U", "Gstar", "U1", "U2", "U3", "U4", "H1", "G1", "G2")


def make_family(name: str, weights=None, **params) -> WeightedGraph:
    """Construct a named graph family.

    ============  ===============================================================
    ``C``         cycle ``C_k`` (``k``)
    ``P``         path ``P_n`` (``n``)
    ``star``      ``K_{1,m}`` centred at vertex 1 (``m``)
    ``U``         ``C_k`` with ``n-k`` pendants on one cycle vertex (``n, k``)
    ``Gstar``     ``C_k`` joined by an edge to the centre of ``K_{1,n-k-1}``
    ``U1``        ``C_3`` with ``r`` and ``s`` pendants on two vertices
    ``U2``        ``C_4`` with ``p`` and ``q`` pendants on opposite vertices
    ``U3``/``H1`` ``C_3`` joined to the centre of ``K_{1,n-4}`` (``n``)
    ``U4``        ``C_4`` joined to the centre of ``K_{1,n-5}`` (``n``)
    ``G1``/``G2`` ``C_8`` / ``C_7`` plus one pendant edge
    ============  ===============================================================

    Cycle vertices are ``1..k`` in order; pendant structure hangs off vertex 1
    (and 2 or 3 for the two-anchor families).
    """
    try:
        n, pairs = _family_edges(name, params)
    except KeyError as exc:
        raise BadParamsError(f"{name}: missing parameter {exc.args[0]!r}") from None
    G = build_graph(n, pairs)
    if weights is not None:
        G = G.reweighted(weights)
    return G


# ---------------------------------------------------------------------------
# edge-list text format


def read_edge_list(text: str) -> WeightedGraph:
    """Parse ``n`` followed by ``u v w`` lines; ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty input: expected vertex count on first line")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from None
    triples = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v w', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"vertex labels must be integers: {ln!r}") from None
        triples.append((u, v, parse_rational(parts[2])))
    try:
        return build_graph(n, triples)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def write_edge_list(G: WeightedGraph) -> str:
    G = G.relabeled()
    out = [str(G.order)]
    out += [f"{u} {v} {format_rational(w)}" for u, v, w in G.edges]
    return "\n".join(out) + "\n"
