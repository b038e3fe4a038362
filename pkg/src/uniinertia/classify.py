"""Characterization predicates, isomorphism-class enumeration and censuses.

Every ``check_*`` function evaluates a structural predicate from a
characterization theorem and compares it with the engine's inertia, so a
verdict ``holds`` exactly when the equivalence is confirmed on that graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable

from .errors import (
    BadParamsError,
    GirthOutOfRangeError,
    NotUnicyclicError,
    OrderTooLargeError,
    OrderTooSmallError,
)
from .graph_model import (
    Tag,
    WeightedGraph,
    build_graph,
    classify_structure,
    make_family,
    pendant_twins,
    rooted_pendant_tree,
)
from .inertia import CycleType, classify_cycle, cycle_weights_of, inertia, saturated_cycle_vertex
from .linalg import Inertia
from .matching import matching_number

MAX_ENUM_ORDER = 10
MAX_BRUTE_ORDER = 8


# ---------------------------------------------------------------------------
# canonical forms


@dataclass(frozen=True, order=True)
class CanonicalGraph:
    """Isomorphism-invariant labelled representative of an unweighted graph."""

    order: int
    edges: tuple[tuple[int, int], ...]

    def graph(self) -> WeightedGraph:
        return build_graph(self.order, self.edges)

    def edge_string(self) -> str:
        return ",".join(f"{u}-{v}" for u, v in self.edges)


def _tree_code(G: WeightedGraph, root: int, parent: int | None, blocked: frozenset) -> str:
    kids = sorted(
        _tree_code(G, c, root, blocked) for c in G.neighbors(root) if c != parent and c not in blocked
    )
    return "(" + "".join(kids) + ")"


def _split_code(code: str) -> list[str]:
    """Top-level child codes of ``(...)``."""
    out, depth, start = [], 0, 1
    for i in range(1, len(code) - 1):
        depth += 1 if code[i] == "(" else -1
        if depth == 0:
            out.append(code[start:i + 1])
            start = i + 1
    return out


def canonical_form(G: WeightedGraph) -> CanonicalGraph:
    """Canonical representative of a connected unicyclic graph.

    Each cycle vertex gets the canonical code of its pendant tree; the code
    sequence is minimised over all rotations and reflections of the cycle.
    Vertices are then labelled from that sequence alone: cycle vertices
    ``1..k`` in order, tree vertices breadth first with children in code
    order. Isomorphic graphs therefore get identical edge sets.
    """
    cls = classify_structure(G)
    if cls.tag is not Tag.UNICYCLIC:
        if G.order <= MAX_BRUTE_ORDER:
            return canonical_form_bruteforce(G)
        raise NotUnicyclicError("fast canonical form handles unicyclic graphs only")
    cycle = cls.cycle
    on_cycle = frozenset(cycle)
    codes = [_tree_code(G, v, None, on_cycle - {v}) for v in cycle]
    k = len(codes)
    variants = []
    for seq in (codes, codes[::-1]):
        variants += [tuple(seq[i:] + seq[:i]) for i in range(k)]
    best = min(variants)
    edges = [(i, i % k + 1) for i in range(1, k + 1)]
    queue = list(zip(range(1, k + 1), best))
    nxt = k + 1
    head = 0
    while head < len(queue):
        label, code = queue[head]
        head += 1
        for child in _split_code(code):
            edges.append((label, nxt))
            queue.append((nxt, child))
            nxt += 1
    return CanonicalGraph(G.order, tuple(sorted((min(a, b), max(a, b)) for a, b in edges)))


def canonical_form_bruteforce(G: WeightedGraph) -> CanonicalGraph:
    """Lexicographically least edge set over degree-ordered relabelings.

    New labels go to vertices in order of decreasing degree; only the
    orderings within each degree class are searched. Works for any graph
    up to ``MAX_BRUTE_ORDER`` vertices.
    """
    if G.order > MAX_BRUTE_ORDER:
        raise OrderTooLargeError(f"brute-force canonical form limited to n <= {MAX_BRUTE_ORDER}")
    by_deg: dict[int, list[int]] = {}
    for v in G.vertices:
        by_deg.setdefault(G.degree(v), []).append(v)
    classes = [by_deg[d] for d in sorted(by_deg, reverse=True)]
    best = None

    def rec(i: int, order: list[int]):
        nonlocal best
        if i == len(classes):
            label = {v: j + 1 for j, v in enumerate(order)}
            cand = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in G.edge_pairs()))
            if best is None or cand < best:
                best = cand
            return
        for perm in permutations(classes[i]):
            rec(i + 1, order + list(perm))

    rec(0, [])
    return CanonicalGraph(G.order, best or ())


def is_isomorphic(G: WeightedGraph, H: WeightedGraph) -> bool:
    if G.order != H.order or G.size != H.size:
        return False
    return canonical_form(G) == canonical_form(H)


@lru_cache(maxsize=None)
def _family_canon(name: str, params: tuple) -> CanonicalGraph | None:
    try:
        return canonical_form(make_family(name, **dict(params)))
    except BadParamsError:
        return None


def underlying_is(G: WeightedGraph, name: str, **params) -> bool:
    """Whether the underlying graph of ``G`` is isomorphic to a named family member."""
    target = _family_canon(name, tuple(sorted(params.items())))
    return target is not None and canonical_form(G) == target


# ---------------------------------------------------------------------------
# enumeration and census


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[CanonicalGraph, ...]:
    found = {canonical_form(make_family("C", k=n))}
    if n > 3:
        for base in _enumerate(n - 1):
            G = base.graph()
            for v in G.vertices:
                grown = build_graph(n, list(G.edge_pairs()) + [(v, n)])
                found.add(canonical_form(grown))
    return tuple(sorted(found))


def enumerate_unicyclic(n: int) -> list[CanonicalGraph]:
    """One representative per isomorphism class of connected unicyclic graphs.

    Every non-cycle unicyclic graph has a leaf whose removal leaves a
    unicyclic graph, so order ``n`` is grown from order ``n - 1`` by adding
    a leaf everywhere and deduplicating canonical forms.
    """
    if n > MAX_ENUM_ORDER:
        raise OrderTooLargeError(f"enumeration limited to n <= {MAX_ENUM_ORDER}")
    if n < 3:
        raise OrderTooSmallError("unicyclic graphs need at least 3 vertices")
    return list(_enumerate(n))


@dataclass(frozen=True)
class CensusRecord:
    canonical: CanonicalGraph
    girth: int
    inertia: Inertia
    branches: tuple[str, ...]


@dataclass
class CensusResult:
    order: int
    criterion: str
    records: list[CensusRecord] = field(default_factory=list)
    total: int = 0
    girth_totals: dict[int, int] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.records)


def rank_filter(r: int) -> Callable[[Inertia], bool]:
    return lambda i: i.rank == r


def nullity_filter(z: int) -> Callable[[Inertia], bool]:
    return lambda i: i.i_zero == z


def census(n: int, predicate: Callable[[Inertia], bool], criterion: str = "") -> CensusResult:
    """Unit-weight unicyclic graphs of order ``n`` whose inertia passes ``predicate``."""
    graphs = enumerate_unicyclic(n)
    result = CensusResult(n, criterion, total=len(graphs))
    for cg in graphs:
        G = cg.graph()
        In = inertia(G)
        k = len(classify_structure(G).cycle)
        result.girth_totals[k] = result.girth_totals.get(k, 0) + 1
        if predicate(In):
            branches = tuple(f"{v.theorem}:{v.witness}" for v in all_verdicts(G, In) if v.predicate)
            result.records.append(CensusRecord(cg, k, In, branches))
    return result


# ---------------------------------------------------------------------------
# characterization verdicts


@dataclass(frozen=True)
class CharacterizationVerdict:
    """Outcome of one characterization on one graph.

    ``predicate`` is the structural side of an equivalence (None for pure
    bounds); ``holds`` says whether the engine's inertia agreed with it.
    """

    theorem: str
    holds: bool
    witness: str
    predicate: bool | None = None


def _iff(theorem: str, predicate: bool, observed: bool, witness: str) -> CharacterizationVerdict:
    return CharacterizationVerdict(theorem, predicate == observed, witness, predicate)


def _ceil_half(k: int) -> int:
    return (k + 1) // 2


def _unicyclic_parts(G: WeightedGraph) -> tuple[int, tuple[int, ...]]:
    cls = classify_structure(G)
    if cls.tag is not Tag.UNICYCLIC:
        raise NotUnicyclicError("characterizations apply to connected unicyclic graphs")
    return G.order, cls.cycle


def _min_index_predicate(G: WeightedGraph, allowed: dict[int, set[CycleType]]) -> tuple[bool, str]:
    """Structural side shared by the three minimal-index characterizations.

    ``allowed`` maps cycle parity (0 even, 1 odd) to the cycle types that
    qualify when no cycle vertex is saturated in its pendant tree.
    """
    n, cycle = _unicyclic_parts(G)
    k = len(cycle)
    if not 3 <= k <= n - 2:
        raise GirthOutOfRangeError(f"girth {k} outside 3..{n - 2}")
    v = saturated_cycle_vertex(G, cycle)
    if v is not None:
        tree = rooted_pendant_tree(G, v, cycle)
        m_tree = matching_number(tree.graph)
        m_rest = matching_number(G.delete(*tree.vertices))
        ok = m_tree == 1 and m_rest == (k - 1) // 2
        return ok, f"saturated v={v} m(tree)={m_tree} m(rest)={m_rest}"
    t = classify_cycle(cycle_weights_of(G, cycle))
    star = underlying_is(G, "Gstar", n=n, k=k)
    ok = star and t in allowed[k % 2]
    return ok, f"no saturated vertex Gstar={'yes' if star else 'no'} type={t.value}"


def check_min_positive_index(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    pred, why = _min_index_predicate(G, {0: {CycleType.A}, 1: {CycleType.D}})
    In = In or inertia(G)
    k = len(classify_structure(G).cycle)
    return _iff("min_positive_index", pred, In.i_plus == _ceil_half(k), why)


def check_min_negative_index(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    pred, why = _min_index_predicate(G, {0: {CycleType.A}, 1: {CycleType.C}})
    In = In or inertia(G)
    k = len(classify_structure(G).cycle)
    return _iff("min_negative_index", pred, In.i_minus == _ceil_half(k), why)


def check_max_nullity(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    pred, why = _min_index_predicate(G, {0: {CycleType.A}, 1: set()})
    In = In or inertia(G)
    k = len(classify_structure(G).cycle)
    return _iff("max_nullity", pred, In.i_zero == G.order - 2 * _ceil_half(k), why)


def _two_family(G: WeightedGraph, cycles: dict[int, CycleType], u3: CycleType | None) -> str | None:
    """Which entry of an index-two / nullity n-4 list ``G`` matches, if any.

    ``cycles`` maps a bare cycle length to its required type; ``u3`` is the
    triangle type required for the U3 family (None excludes the family).
    """
    n, cycle = _unicyclic_parts(G)
    k = len(cycle)
    t = classify_cycle(cycle_weights_of(G, cycle))
    if k == n:
        return f"C{k}" if cycles.get(k) is t else None
    if k == 3:
        if any(underlying_is(G, "U1", r=r, s=n - 3 - r) for r in range((n - 3) // 2, n - 2)):
            return "U1"
        if u3 is not None and t is u3 and underlying_is(G, "U3", n=n):
            return "U3"
    if k == 4:
        if any(underlying_is(G, "U2", p=p, q=n - 4 - p) for p in range((n - 4) // 2, n - 3)):
            return "U2"
        if t is CycleType.A and underlying_is(G, "U4", n=n):
            return "U4"
    return None


def check_positive_index_two(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    hit = _two_family(G, {3: CycleType.C, 4: CycleType.B, 5: CycleType.D, 6: CycleType.A}, CycleType.D)
    In = In or inertia(G)
    return _iff("positive_index_two", hit is not None, In.i_plus == 2, hit or "none")


def check_negative_index_two(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    hit = _two_family(G, {3: CycleType.D, 4: CycleType.B, 5: CycleType.C, 6: CycleType.A}, CycleType.C)
    In = In or inertia(G)
    return _iff("negative_index_two", hit is not None, In.i_minus == 2, hit or "none")


def check_nullity_n4(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    hit = _two_family(G, {4: CycleType.B, 6: CycleType.A}, None)
    In = In or inertia(G)
    return _iff("nullity_n_minus_4", hit is not None, In.i_zero == G.order - 4, hit or "none")


def check_rank_2_3(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    """Rank 2 exactly for a Type A 4-cycle, rank 3 exactly for a triangle.

    ``predicate``/``observed`` pack both equivalences; the verdict holds when
    each structural condition agrees with the observed rank.
    """
    n, cycle = _unicyclic_parts(G)
    In = In or inertia(G)
    is_c4a = n == 4 and len(cycle) == 4 and classify_cycle(cycle_weights_of(G, cycle)) is CycleType.A
    is_c3 = n == 3
    agree = (is_c4a == (In.rank == 2)) and (is_c3 == (In.rank == 3))
    witness = "C4 Type A" if is_c4a else "C3" if is_c3 else "none"
    return CharacterizationVerdict("rank_2_3", agree, witness, is_c4a or is_c3)


def check_rank_5(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    n, cycle = _unicyclic_parts(G)
    if n < 5:
        raise OrderTooSmallError("rank-5 characterization needs n >= 5")
    In = In or inertia(G)
    if n == len(cycle) == 5:
        hit = "C5"
    elif underlying_is(G, "H1", n=n):
        hit = "H1"
    else:
        hit = None
    return _iff("rank_5", hit is not None, In.rank == 5, hit or "none")


def check_girth_lower_bound(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    """``i+, i- >= ceil(k/2)`` and ``i0 <= n - 2 ceil(k/2)`` when ``k <= n - 2``."""
    n, cycle = _unicyclic_parts(G)
    k = len(cycle)
    if not 3 <= k <= n - 2:
        raise GirthOutOfRangeError(f"girth {k} outside 3..{n - 2}")
    In = In or inertia(G)
    h = _ceil_half(k)
    ok = In.i_plus >= h and In.i_minus >= h and In.i_zero <= n - 2 * h
    return CharacterizationVerdict("girth_lower_bound", ok, f"ceil(k/2)={h}")


def check_rank_6_girth(G: WeightedGraph, In: Inertia | None = None) -> CharacterizationVerdict:
    """Girth restrictions for three positive/negative eigenvalues and rank 6.

    Index 3 forces girth at most 8, rank 6 rules out girth 7, and without
    pendant twins a graph of girth 7 (resp. 8) has ``i+ = 3`` exactly when it
    is a Type D 7-cycle (resp. Type A 8-cycle).
    """
    n, cycle = _unicyclic_parts(G)
    k = len(cycle)
    In = In or inertia(G)
    ok = True
    if 3 in (In.i_plus, In.i_minus) and k > 8:
        ok = False
    if In.rank == 6 and k not in (3, 4, 5, 6, 8):
        ok = False
    witness = "girth"
    if k in (7, 8) and not pendant_twins(G):
        t = classify_cycle(cycle_weights_of(G, cycle))
        want = CycleType.D if k == 7 else CycleType.A
        bare = n == k and t is want
        ok = ok and (bare == (In.i_plus == 3))
        witness = f"C{k} Type {want.value}" if bare else "girth"
    return CharacterizationVerdict("rank_6_girth", ok, witness)


def all_verdicts(G: WeightedGraph, In: Inertia | None = None) -> list[CharacterizationVerdict]:
    """Every characterization whose preconditions ``G`` meets."""
    In = In or inertia(G)
    out = []
    for check in (
        check_min_positive_index,
        check_min_negative_index,
        check_max_nullity,
        check_positive_index_two,
        check_negative_index_two,
        check_nullity_n4,
        check_rank_2_3,
        check_rank_5,
        check_girth_lower_bound,
        check_rank_6_girth,
    ):
        try:
            out.append(check(G, In))
        except (GirthOutOfRangeError, OrderTooSmallError):
            continue
    return out
