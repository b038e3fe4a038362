"""Seeded verification sweeps over enumerated unicyclic graphs.

Each weighted instance is pushed through the engine and cross-checked
against the congruence oracle, the char-poly oracle, the structural
invariants and every applicable characterization verdict. Results are
tallied per check name; any failure makes the sweep fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Callable

from . import inertia as engine_mod
from .classify import all_verdicts, enumerate_unicyclic
from .graph_model import (
    WeightedGraph,
    classify_structure,
    format_rational,
    make_family,
    pendant_twins,
    pendant_vertices,
    rooted_pendant_tree,
)
from .inertia import (
    CycleType,
    CycleWeights,
    charpoly_oracle,
    classify_cycle,
    cycle_inertia,
    forest_inertia,
    reduce_pendant,
    reduce_twin,
    sachs_coefficients,
)
from .linalg import Inertia, congruence_inertia
from .matching import is_saturated, matching_number

WEIGHT_RANGE = [x for x in range(-5, 6) if x != 0]

Engine = Callable[[WeightedGraph], Inertia]


def random_weight(rng: random.Random) -> Fraction:
    """Numerator and denominator drawn uniformly from {-5..5} without 0."""
    return Fraction(rng.choice(WEIGHT_RANGE), rng.choice(WEIGHT_RANGE))


def random_weights(G: WeightedGraph, rng: random.Random) -> WeightedGraph:
    return G.reweighted([random_weight(rng) for _ in range(G.size)])


def type_a_weights(k: int, rng: random.Random) -> list[Fraction]:
    """Random even-cycle weights with the last one solved to force Type A."""
    if k % 2 or k < 4:
        raise ValueError("Type A needs an even cycle length >= 4")
    ws = [random_weight(rng) for _ in range(k - 1)]
    w_odd = prod(ws[0::2], start=Fraction(1))
    w_even_partial = prod(ws[1::2], start=Fraction(1))
    sign = -1 if ((k - 2) // 2) % 2 else 1
    ws.append(-w_odd / (sign * w_even_partial))
    return ws


def force_type_a(G: WeightedGraph) -> WeightedGraph:
    """Re-solve the closing cycle edge of an even-girth graph so the cycle is Type A."""
    cycle = classify_structure(G).cycle
    k = len(cycle)
    if k % 2:
        raise ValueError("Type A needs an even cycle")
    ws = [G.weight(cycle[i], cycle[i + 1]) for i in range(k - 1)]
    w_odd = prod(ws[0::2], start=Fraction(1))
    w_even_partial = prod(ws[1::2], start=Fraction(1))
    sign = -1 if ((k - 2) // 2) % 2 else 1
    return G.reweighted({(cycle[-1], cycle[0]): -w_odd / (sign * w_even_partial)})


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0


@dataclass
class VerificationReport:
    order: int
    samples: int
    seed: int
    weighted_order: int
    graphs: int = 0
    instances: int = 0
    tallies: dict[str, Tally] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, check: str, ok: bool, detail: Callable[[], str] | None = None) -> None:
        t = self.tallies.setdefault(check, Tally())
        if ok:
            t.passed += 1
        else:
            t.failed += 1
            self.failures.append(f"{check}: {detail() if detail else ''}")

    def failed(self, prefix: str) -> int:
        return sum(t.failed for name, t in self.tallies.items() if name.startswith(prefix))

    def passed(self, prefix: str) -> int:
        return sum(t.passed for name, t in self.tallies.items() if name.startswith(prefix))

    def lines(self) -> list[str]:
        out = [
            f"verify order={self.order} weighted_order={self.weighted_order} samples={self.samples} seed={self.seed}",
            f"graphs={self.graphs} instances={self.instances}",
        ]
        for name in sorted(self.tallies):
            t = self.tallies[name]
            out.append(f"{name} pass={t.passed} fail={t.failed}")
        out += [f"FAILURE {f}" for f in self.failures[:50]]
        out.append("PASS" if self.ok else "FAIL")
        return out

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "weighted_order": self.weighted_order,
            "samples": self.samples,
            "seed": self.seed,
            "graphs": self.graphs,
            "instances": self.instances,
            "checks": {k: {"pass": v.passed, "fail": v.failed} for k, v in sorted(self.tallies.items())},
            "failures": self.failures,
            "result": "PASS" if self.ok else "FAIL",
        }


def describe(G: WeightedGraph) -> str:
    return f"n={G.order} edges=" + ",".join(f"{u}-{v}:{format_rational(w)}" for u, v, w in G.edges)


def check_instance(
    G: WeightedGraph,
    report: VerificationReport,
    rng: random.Random,
    engine: Engine,
    *,
    sachs: bool = True,
) -> Inertia:
    """Run every invariant on one weighted unicyclic graph and tally the outcome."""
    n = G.order
    In = engine(G)
    cycle = classify_structure(G).cycle
    k = len(cycle)

    def where(extra: str = "") -> Callable[[], str]:
        return lambda: f"{describe(G)} engine={In} {extra}".rstrip()

    oracle = congruence_inertia(G.adjacency_matrix())
    report.record("oracle_equivalence", In == oracle, where(f"oracle={oracle}"))
    report.record("sum_rule", In.order == n, where())
    if k % 2 == 0:
        report.record("bipartite_symmetry", In.i_plus == In.i_minus, where())
    report.record("odd_cycle_bound", abs(In.i_plus - In.i_minus) <= (k % 2), where())

    for v in G.vertices:
        sub = engine(G.delete(v))
        dp, dm = In.i_plus - sub.i_plus, In.i_minus - sub.i_minus
        report.record("interlacing", dp in (0, 1) and dm in (0, 1), where(f"v={v} sub={sub}"))

    m = matching_number(G)
    for v in G.vertices:
        report.record("matching_deletion", matching_number(G.delete(v)) in (m, m - 1), where(f"v={v}"))

    for v in pendant_vertices(G):
        rest, delta = reduce_pendant(G, v)
        report.record("pendant_deletion", engine(rest) + delta == In, where(f"pendant={v}"))
    for a, b in pendant_twins(G):
        sub = engine(reduce_twin(G, b))
        ok = (sub.i_plus, sub.i_minus) == (In.i_plus, In.i_minus)
        report.record("twin_deletion", ok, where(f"twins={a},{b} sub={sub}"))

    M = G.adjacency_matrix()
    for i in range(n):
        factor = random_weight(rng)
        scaled = congruence_inertia(M.scaled(i, factor))
        report.record("diagonal_congruence", scaled == In, where(f"row={i} factor={factor}"))

    # every saturated choice of cycle vertex must give the same triple
    for v in cycle:
        tree = rooted_pendant_tree(G, v, cycle)
        if len(tree) > 1 and is_saturated(tree.graph, v):
            alt = forest_inertia(tree.graph) + forest_inertia(G.delete(*tree.vertices))
            report.record("saturated_choice", alt == In, where(f"v={v} alt={alt}"))

    if sachs:
        poly = sachs_coefficients(G)
        ref = charpoly_oracle(G)
        report.record("sachs_oracle", poly == ref, where(f"sachs={poly} oracle={ref}"))
        report.record("sachs_nullity", poly.nullity() == In.i_zero, where(f"sachs={poly}"))

    for verdict in all_verdicts(G, In):
        report.record(f"verdict:{verdict.theorem}", verdict.holds, where(verdict.witness))
    return In


def run_verification(
    order: int,
    samples: int,
    seed: int,
    *,
    weighted_order: int | None = None,
    engine: Engine | None = None,
    type_a: bool = True,
) -> VerificationReport:
    """Sweep unit weights on orders ``3..order`` and ``samples`` random
    weightings per graph on orders ``3..weighted_order``.

    With ``type_a`` every random weighting of an even-girth graph is followed
    by a copy whose closing cycle weight is solved to make the cycle Type A;
    uniform sampling almost never lands on that boundary otherwise.
    """
    engine = engine or engine_mod.inertia
    weighted_order = order if weighted_order is None else weighted_order
    report = VerificationReport(order, samples, seed, weighted_order)
    rng = random.Random(seed)
    for n in range(3, order + 1):
        for cg in enumerate_unicyclic(n):
            G = cg.graph()
            report.graphs += 1
            check_instance(G, report, rng, engine)
            report.instances += 1
            if n <= weighted_order:
                even = len(classify_structure(G).cycle) % 2 == 0
                for _ in range(samples):
                    H = random_weights(G, rng)
                    check_instance(H, report, rng, engine)
                    report.instances += 1
                    if type_a and even:
                        check_instance(force_type_a(H), report, rng, engine)
                        report.instances += 1
    return report


def _cycle_table(k: int, t: CycleType) -> Inertia:
    """Expected cycle inertia, written out independently of ``cycle_inertia``."""
    half = k // 2
    return {
        CycleType.A: Inertia(half - 1, half - 1, 2),
        CycleType.B: Inertia(half, half, 0),
        CycleType.C: Inertia(half + 1, half, 0),
        CycleType.D: Inertia(half, half + 1, 0),
    }[t]


def verify_cycles(max_k: int, samples: int, seed: int, engine: Engine | None = None) -> VerificationReport:
    """Weighted cycles ``C_3..C_max_k``: random weights plus forced Type A instances."""
    engine = engine or engine_mod.inertia
    report = VerificationReport(max_k, samples, seed, max_k)
    rng = random.Random(seed)
    for k in range(3, max_k + 1):
        base = make_family("C", k=k)
        report.graphs += 1
        batches = [([random_weight(rng) for _ in range(k)], False) for _ in range(samples)]
        if k % 2 == 0:
            batches += [(type_a_weights(k, rng), True) for _ in range(samples)]
        for ws, forced in batches:
            G = base.reweighted({(i + 1, (i + 1) % k + 1): w for i, w in enumerate(ws)})
            cw = CycleWeights(ws)
            t = classify_cycle(cw)
            closed = cycle_inertia(cw)
            oracle = congruence_inertia(G.adjacency_matrix())
            report.instances += 1
            detail = lambda: f"{describe(G)} type={t.value} closed={closed} oracle={oracle}"  # noqa: E731
            report.record("cycle_vs_oracle", closed == oracle, detail)
            report.record("cycle_vs_table", closed == _cycle_table(k, t), detail)
            report.record("engine_vs_oracle", engine(G) == oracle, detail)
            if forced:
                report.record("forced_type_a", t is CycleType.A, detail)
    return report


def verify_girth_sharpness(max_n: int, samples: int, seed: int, engine: Engine | None = None) -> VerificationReport:
    """``i+ = i- = ceil(k/2)`` on weighted ``U_{n,k}`` for all ``3 <= k <= n-2``."""
    engine = engine or engine_mod.inertia
    report = VerificationReport(max_n, samples, seed, max_n)
    rng = random.Random(seed)
    for n in range(5, max_n + 1):
        for k in range(3, n - 1):
            base = make_family("U", n=n, k=k)
            report.graphs += 1
            for G in [base] + [random_weights(base, rng) for _ in range(samples)]:
                In = engine(G)
                h = (k + 1) // 2
                report.instances += 1
                report.record("U_nk_sharp", In.i_plus == In.i_minus == h, lambda: f"{describe(G)} inertia={In}")
                report.record(
                    "U_nk_oracle",
                    In == congruence_inertia(G.adjacency_matrix()),
                    lambda: f"{describe(G)} inertia={In}",
                )
    return report
