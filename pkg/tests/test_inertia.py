import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uniinertia.classify import enumerate_unicyclic
from uniinertia.errors import NoTwinError, NotAForestError, NotPendantError, NotUnicyclicError, UnsupportedClassError
from uniinertia.graph_model import build_graph, girth, make_family
from uniinertia.inertia import (
    CycleType,
    CycleWeights,
    charpoly_oracle,
    classify_cycle,
    cycle_inertia,
    cycle_weights_of,
    elementary_subgraphs,
    forest_inertia,
    inertia,
    reduce_pendant,
    reduce_twin,
    sachs_coefficients,
    saturated_cycle_vertex,
    unicyclic_inertia,
)
from uniinertia.linalg import Inertia, congruence_inertia
from uniinertia.verify import force_type_a, random_weights, type_a_weights

from .conftest import from_networkx, rationals


def oracle(G):
    return congruence_inertia(G.adjacency_matrix())


@pytest.mark.parametrize(
    "name, params, expected",
    [
        ("C", dict(k=3), (1, 2, 0)),
        ("C", dict(k=4), (1, 1, 2)),
        ("C", dict(k=5), (3, 2, 0)),
        # unit C6: W_o + W_e = 2, so Type B, spectrum +-2, +-1, +-1
        ("C", dict(k=6), (3, 3, 0)),
        ("C", dict(k=8), (3, 3, 2)),
        ("U", dict(n=5, k=3), (2, 2, 1)),
        ("U", dict(n=6, k=4), (2, 2, 2)),
        ("U", dict(n=7, k=3), (2, 2, 3)),
        ("Gstar", dict(n=6, k=4), (2, 2, 2)),
        ("Gstar", dict(n=7, k=3), (2, 3, 2)),
        ("U1", dict(r=1, s=1), (2, 2, 1)),
        ("U1", dict(r=1, s=0), (2, 2, 0)),
        ("H1", dict(n=7), (2, 3, 2)),
        ("G1", {}, (4, 4, 1)),
    ],
)
def test_unit_weight_examples(name, params, expected):
    G = make_family(name, **params)
    assert tuple(inertia(G)) == expected
    assert oracle(G) == inertia(G)


def test_G2_has_four_positive():
    assert inertia(make_family("G2")).i_plus == 4


@pytest.mark.parametrize(
    "weights, t, expected",
    [
        ([1, 1, 1, 1], CycleType.A, (1, 1, 2)),
        ([1, 1, 1, 2], CycleType.B, (2, 2, 0)),
        ([1, 1, 1], CycleType.D, (1, 2, 0)),
        ([-1, 1, 1], CycleType.C, (2, 1, 0)),
        ([1, 1, 1, 1, 1], CycleType.C, (3, 2, 0)),
        ([1, 1, 1, 1, -1], CycleType.D, (2, 3, 0)),
        ([1] * 6, CycleType.B, (3, 3, 0)),
        ([1, 1, 1, 1, 1, -1], CycleType.A, (2, 2, 2)),
        ([1] * 8, CycleType.A, (3, 3, 2)),
    ],
)
def test_cycle_types(weights, t, expected):
    cw = CycleWeights(weights)
    assert classify_cycle(cw) is t
    assert tuple(cycle_inertia(cw)) == expected
    G = make_family("C", k=len(weights)).reweighted(
        {(i + 1, (i + 1) % len(weights) + 1): w for i, w in enumerate(weights)}
    )
    assert oracle(G) == cycle_inertia(cw)


def test_cycle_weight_products():
    cw = CycleWeights([2, 3, 5, 7])
    assert (cw.W, cw.W_o, cw.W_e) == (210, 10, 21)
    with pytest.raises(ValueError):
        CycleWeights([1, 2, 3]).W_e
    with pytest.raises(ValueError):
        CycleWeights([1, 0, 1])
    with pytest.raises(ValueError):
        CycleWeights([1, 1])


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 12).flatmap(lambda k: st.lists(rationals, min_size=k, max_size=k)))
def test_cycle_closed_form_matches_oracle(ws):
    k = len(ws)
    G = make_family("C", k=k).reweighted({(i + 1, (i + 1) % k + 1): w for i, w in enumerate(ws)})
    assert cycle_inertia(cycle_weights_of(G)) == oracle(G)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([4, 6, 8, 10, 12]), st.integers(0, 10**6))
def test_forced_type_a_cycles(k, seed):
    ws = type_a_weights(k, random.Random(seed))
    cw = CycleWeights(ws)
    assert classify_cycle(cw) is CycleType.A
    G = make_family("C", k=k).reweighted({(i + 1, (i + 1) % k + 1): w for i, w in enumerate(ws)})
    assert oracle(G) == Inertia(k // 2 - 1, k // 2 - 1, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6), st.data())
def test_tree_inertia_ignores_weights(n, seed, data):
    F = from_networkx(nx.random_labeled_tree(n, seed=seed))
    ws = data.draw(st.lists(rationals, min_size=F.size, max_size=F.size))
    W = F.reweighted(ws)
    assert forest_inertia(W) == forest_inertia(F) == oracle(W)


@pytest.mark.parametrize("n", range(3, 8))
def test_engine_matches_oracle_on_every_unicyclic_graph(n):
    rng = random.Random(n)
    for cg in enumerate_unicyclic(n):
        G = cg.graph()
        for H in [G] + [random_weights(G, rng) for _ in range(3)]:
            assert unicyclic_inertia(H) == oracle(H), cg.edge_string()


@pytest.mark.parametrize("n", [6, 7, 8])
def test_engine_on_forced_type_a(n):
    rng = random.Random(100 + n)
    for cg in enumerate_unicyclic(n):
        G = cg.graph()
        if girth(G) % 2 == 0:
            H = force_type_a(random_weights(G, rng))
            assert classify_cycle(cycle_weights_of(H)) is CycleType.A
            assert inertia(H) == oracle(H), cg.edge_string()


def test_saturated_vertex_choice():
    G = make_family("U", n=6, k=3)
    assert saturated_cycle_vertex(G, (1, 2, 3)) == 1
    assert saturated_cycle_vertex(make_family("C", k=5), (1, 2, 3, 4, 5)) is None
    # a pendant P3 hung by its endpoint leaves the root unsaturated, a P4 does not
    G = build_graph(5, [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5)])
    assert saturated_cycle_vertex(G, (1, 2, 3)) is None
    G = build_graph(6, [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (5, 6)])
    assert saturated_cycle_vertex(G, (1, 2, 3)) == 1


def test_pendant_reduction():
    G = make_family("U", n=6, k=4)
    rest, delta = reduce_pendant(G, 5)
    assert delta == Inertia(1, 1, 0)
    assert inertia(rest) + delta == inertia(G)
    with pytest.raises(NotPendantError):
        reduce_pendant(G, 1)


def test_twin_reduction_keeps_nonzero_indices():
    G = make_family("U3", n=7)
    before = inertia(G)
    after = inertia(reduce_twin(G, 7))
    assert before.i_plus == after.i_plus == 2
    assert before.i_minus == after.i_minus
    with pytest.raises(NoTwinError):
        reduce_twin(make_family("C", k=4), 1)


def test_class_errors():
    with pytest.raises(NotAForestError):
        forest_inertia(make_family("C", k=3))
    with pytest.raises(NotUnicyclicError):
        unicyclic_inertia(make_family("P", n=3))


def test_inertia_of_disconnected_and_dense_graphs():
    G = build_graph(7, [(1, 2), (2, 3), (1, 3), (4, 5), (6, 7)])
    assert inertia(G) == Inertia(1, 2, 0) + Inertia(2, 2, 0)
    K4 = build_graph(4, [(u, v) for u in range(1, 5) for v in range(u + 1, 5)])
    assert inertia(K4) == Inertia(1, 3, 0) == oracle(K4)
    assert inertia(build_graph(3, [])) == Inertia(0, 0, 3)


@pytest.mark.parametrize(
    "G, text",
    [
        (make_family("C", k=4), "1 0 -4 0 0"),
        (make_family("C", k=3), "1 0 -3 -2"),
        (make_family("P", n=3), "1 0 -2 0"),
        (make_family("C", k=3, weights=[2, 1, Fraction(1, 2)]), "1 0 -21/4 -2"),
    ],
)
def test_sachs_examples(G, text):
    assert str(sachs_coefficients(G)) == text
    assert sachs_coefficients(G) == charpoly_oracle(G)


def test_elementary_subgraph_count_of_c4():
    subs = list(elementary_subgraphs(make_family("C", k=4)))
    # empty, 4 single edges, 2 perfect matchings, the cycle itself
    assert len(subs) == 8
    assert sum(1 for U in subs if U.cycle_count) == 1


def test_sachs_rejects_two_cycles():
    G = build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])
    with pytest.raises(UnsupportedClassError):
        list(elementary_subgraphs(G))


@pytest.mark.parametrize("n", range(3, 8))
def test_sachs_nullity_equals_engine_nullity(n):
    rng = random.Random(7 * n)
    for cg in enumerate_unicyclic(n):
        G = random_weights(cg.graph(), rng)
        poly = sachs_coefficients(G)
        assert poly == charpoly_oracle(G)
        assert poly.nullity() == inertia(G).i_zero
