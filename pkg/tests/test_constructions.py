from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from orichrom.constructions import (
    FactorData,
    StructuredTarget,
    bipartite_hom,
    bipartite_target,
    bipartite_tight_orientation,
    c3_cartesian_path_hom,
    cartesian_upper_hom,
    cartesian_upper_target,
    direct_arc_rule,
    direct_order_closed_form,
    direct_upper_hom,
    direct_upper_labels,
    direct_upper_order,
    direct_upper_target,
    lexico_arc_rule,
    lexico_upper_hom,
    lexico_upper_order,
    lexico_upper_target,
    one_based,
    path_factor_data,
    product_hom_compose,
    projection_hom,
    square_coloring,
    square_labels,
    strong_upper_hom,
    strong_upper_order,
    strong_upper_target,
    t7_strong_grid_hom,
)
from orichrom.errors import CapExceededError, ConstructionError
from orichrom.graphs import (
    OrientedGraph,
    circulant_tournament,
    complete,
    complete_bipartite,
    cycle,
    directed_cycle,
    directed_path,
    is_oriented_clique,
    orientation_at,
    orientations,
    path,
    square,
)
from orichrom.homomorphism import find_homomorphism, verify_homomorphism, verify_oriented_coloring
from orichrom.products import ProductKind, product_oriented, product_undirected
from orichrom.solvers import chi_o_oriented, optimal_coloring

import expected
from oracles import is_oriented_coloring
from strategies import oriented_graphs

C3 = directed_cycle(3)
T7 = circulant_tournament(7, {1, 2, 3})


# -- complete bipartite -----------------------------------------------------------


def test_bipartite_target_shape():
    st2 = bipartite_target(2)
    t = st2.graph
    assert t.n == 6
    a1, a2 = st2.index[("a", 1)], st2.index[("a", 2)]
    assert t.has_arc(a1, st2.index[("b", (1, 2))])
    assert not t.has_arc(a2, st2.index[("b", (1,))])
    assert t.has_arc(st2.index[("b", (1,))], a2)
    assert len(t.in_neighbors[st2.index[("b", ())]]) == 0
    assert st2.index[("b", (1, 2))] == 2 + 0b11
    # every a_i is joined to every b_S, so the target is an oriented clique
    assert len(t.arcs) == 2 * 4 and is_oriented_clique(t)


def test_bipartite_target_cap():
    with pytest.raises(CapExceededError):
        bipartite_target(17)


@pytest.mark.parametrize("m, n", [(1, 3), (2, 3), (3, 2)])
def test_bipartite_hom_all_orientations(m, n):
    t = bipartite_target(m)
    for d in orientations(complete_bipartite(m, n)):
        h = bipartite_hom(d, m)
        assert verify_homomorphism(d, t.graph, h)
        assert h[:m] == list(range(m))


def test_bipartite_hom_labels():
    d = OrientedGraph.from_arcs(3, [(0, 2), (2, 1)])
    st2 = bipartite_target(2)
    assert st2.label_of(bipartite_hom(d, 2)) == [("a", 1), ("a", 2), ("b", (1,))]
    e = OrientedGraph.from_arcs(3, [(2, 0), (2, 1)])
    assert st2.label_of(bipartite_hom(e, 2))[2] == ("b", ())
    with pytest.raises(ConstructionError):
        bipartite_hom(directed_path(3), 2)


def test_tight_orientation():
    d = bipartite_tight_orientation(2, 4)
    assert is_oriented_clique(d) and chi_o_oriented(d) == 6
    assert chi_o_oriented(bipartite_tight_orientation(2, 2)) == 4
    d13 = bipartite_tight_orientation(1, 2)
    assert d13.n == 3 and chi_o_oriented(d13) == 3
    x = bipartite_tight_orientation(2, 6).induced(range(6))
    assert is_oriented_clique(x)


# -- square colourings ---------------------------------------------------------------


def test_square_labels():
    labels = square_labels(3)
    assert len(labels) == 7 and labels[0] == (1,)
    assert labels[(1 << 2) - 1 + 0b10] == (3, 0, 1)


@pytest.mark.parametrize("g", [path(5), cycle(6), cycle(5), complete_bipartite(1, 3)])
def test_square_coloring_all_orientations(g):
    k, sigma = optimal_coloring(square(g))
    sigma = one_based(sigma)
    for d in orientations(g):
        c = square_coloring(g, sigma, d)
        assert is_oriented_coloring(d, c)
        assert len(set(c)) <= 2**k - 1


def test_square_coloring_paths_mod3():
    g = path(5)
    sigma = [(i % 3) + 1 for i in range(5)]
    for d in orientations(g):
        c = square_coloring(g, sigma, d)
        assert verify_oriented_coloring(d, c)
        assert c[0] == 0 and c[3] == 0  # colour 1 carries no bits


def test_square_coloring_rejects_bad_sigma():
    with pytest.raises(ConstructionError):
        square_coloring(path(3), [1, 2, 1], directed_path(3))


# -- composed and projected homomorphisms -----------------------------------------------


@settings(max_examples=40)
@given(oriented_graphs(1, 4), oriented_graphs(1, 4), st.sampled_from(["lexicographic", "strong", "cartesian"]))
def test_product_hom_compose(d, e, kind):
    from orichrom.homomorphism import find_oriented_coloring, quotient_target

    a = find_oriented_coloring(d, d.n)
    b = find_oriented_coloring(e, e.n)
    t, u = quotient_target(d, a), quotient_target(e, b)
    m = product_hom_compose(kind, a, b, u.n)
    assert verify_homomorphism(product_oriented(kind, d, e), product_oriented(kind, t, u), m)


def test_product_hom_compose_identity_and_direct():
    d = directed_path(3)
    ident = list(range(3))
    assert product_hom_compose("strong", ident, ident, 3) == list(range(9))
    with pytest.raises(ValueError):
        product_hom_compose("direct", ident, ident, 3)


def test_product_hom_compose_paths_into_c3():
    rng = random.Random(5)
    for _ in range(20):
        p = orientation_at(path(4), rng.randrange(8))
        q = orientation_at(path(3), rng.randrange(4))
        a, b = find_homomorphism(p, C3), find_homomorphism(q, C3)
        m = product_hom_compose("cartesian", a, b, 3)
        assert verify_homomorphism(product_oriented("cartesian", p, q), product_oriented("cartesian", C3, C3), m)


def test_lexico_paths_clique():
    d = product_oriented("lexicographic", directed_path(3), directed_path(3))
    assert is_oriented_clique(d)
    assert chi_o_oriented(d) == expected.CHI_O_LEXICO_DP3


@given(oriented_graphs(1, 4), oriented_graphs(1, 4))
def test_projections(d, e):
    de = product_oriented("direct", d, e)
    assert verify_homomorphism(de, d, projection_hom("left", d, e))
    assert verify_homomorphism(de, e, projection_hom("right", d, e))
    assert chi_o_oriented(de) <= min(chi_o_oriented(d), chi_o_oriented(e))


def test_projection_examples():
    d = directed_path(3)
    assert verify_homomorphism(product_oriented("direct", d, d), d, projection_hom("left", d, d))
    k2 = directed_path(2)
    one = OrientedGraph(1, frozenset())
    assert projection_hom("right", k2, one) == [0, 0]
    with pytest.raises(ValueError):
        projection_hom("middle", d, d)


# -- oriented path grids --------------------------------------------------------------


def test_t7_values():
    m = t7_strong_grid_hom(3, 3)
    assert m[(2 - 1) * 3 + (3 - 1)] == 1
    assert all((m[(i + 1) * 3 + j + 1] - m[i * 3 + j]) % 7 == 3 for i in range(2) for j in range(2))
    d = product_oriented("strong", directed_path(20), directed_path(20))
    assert verify_homomorphism(d, T7, t7_strong_grid_hom(20, 20))


def test_strong_dp3_needs_fewer_than_seven_colours():
    d = product_oriented("strong", directed_path(3), directed_path(3))
    five = [(i + j) % 5 for i in range(3) for j in range(3)]
    assert is_oriented_coloring(d, five)
    assert verify_homomorphism(d, circulant_tournament(5, {1, 2}), five)
    # no 4-vertex tournament receives it, so no 4-vertex oriented graph does
    pairs = list(combinations(range(4), 2))
    for code in range(1 << 6):
        t = OrientedGraph.from_arcs(4, ((a, b) if (code >> i) & 1 else (b, a) for i, (a, b) in enumerate(pairs)))
        assert find_homomorphism(d, t) is None
    assert chi_o_oriented(d) == expected.CHI_O_STRONG_DP3
    witness = [0, 3, 4, 5, 6, 7, 8]  # cells (1,1),(2,1),(2,2),(2,3),(3,1),(3,2),(3,3)
    assert not is_oriented_clique(d.induced(witness))


def test_c3_cartesian_directed_closed_form():
    m = c3_cartesian_path_hom(directed_path(4), directed_path(5))
    assert m == [(i + j) % 3 for i in range(4) for j in range(5)]


def test_c3_cartesian_all_p4_pairs():
    ps = list(orientations(path(4)))
    for p in ps:
        for q in ps:
            m = c3_cartesian_path_hom(p, q)
            assert m[0] == 0
            assert verify_homomorphism(product_oriented("cartesian", p, q), C3, m)


def test_c3_cartesian_rejects_non_paths():
    with pytest.raises(ConstructionError):
        c3_cartesian_path_hom(directed_cycle(3), directed_path(2))


# -- W targets: structure -----------------------------------------------------------------


def _check_target(st_: StructuredTarget):
    assert len(set(st_.labels)) == st_.order
    assert all(st_.index[lab] == i for i, lab in enumerate(st_.labels))
    # OrientedGraph construction already rejects loops and opposite arcs


def test_lexico_target():
    u = OrientedGraph.from_arcs(2, [(0, 1)])
    t = lexico_upper_target(3, u, 2)
    _check_target(t)
    assert t.order == lexico_upper_order(3, 2, 2) == expected.ORDER_LEXICO_W_P3_P2
    assert lexico_upper_order(3, 3, 3) == 1089
    rule = lexico_arc_rule(u, 2)
    assert t.graph == StructuredTarget.build(t.labels, rule).graph
    assert all(lab[1 + lab[0]] == 0 for lab in t.labels)


def test_strong_target():
    t = strong_upper_target(2, 3, C3, C3)
    _check_target(t)
    assert t.order == strong_upper_order(2, 3, 3, 3) == expected.ORDER_STRONG_W_PATHS
    assert all(len(lab) == 4 + lab[1] - 1 for lab in t.labels)


def test_cartesian_target():
    t = cartesian_upper_target(2, C3, C3)
    _check_target(t)
    assert t.order == expected.ORDER_CARTESIAN_W_PATHS
    assert cartesian_upper_target(2, C3, directed_cycle(3)).order == 6 * 3


@pytest.mark.parametrize("k, l", [(1, 1), (2, 2), (3, 3), (2, 4), (4, 2)])
def test_direct_target(k, l):  # noqa: E741
    t = direct_upper_target(k, l)
    _check_target(t)
    assert t.order == direct_upper_order(k, l) == l * direct_order_closed_form(k, l)
    assert len(direct_upper_labels(k, l)) == t.order


def test_direct_target_order_3_3():
    assert direct_upper_target(3, 3).order == expected.ORDER_DIRECT_W_K3_L3
    assert direct_order_closed_form(3, 3) == 21
    assert direct_order_closed_form(2, 2) == 3


def test_direct_rule_antisymmetric_on_labels():
    labels = direct_upper_labels(3, 2)
    rule = direct_arc_rule(2)
    assert not any(rule(x, y) and rule(y, x) for x, y in combinations(labels, 2))


# -- W targets: homomorphisms ---------------------------------------------------------------


def test_cartesian_w_all_orientations_p3():
    p3 = path(3)
    data = path_factor_data(p3, p3)
    target = cartesian_upper_target(2, C3, C3)
    for d in orientations(product_undirected("cartesian", p3, p3)):
        _, m = cartesian_upper_hom(d, data, target)
        assert verify_homomorphism(d, target.graph, m)


def test_cartesian_w_tree_factor():
    g, tree = cycle(5), complete_bipartite(1, 3)
    from orichrom.constructions import universal_target_for

    t = universal_target_for(g)
    data = FactorData(g, tree, right_coloring=one_based(optimal_coloring(tree)[1]), left_target=t, right_target=C3)
    target = cartesian_upper_target(2, t, C3)
    assert target.order == 6 * t.n
    rng = random.Random(1)
    prod = product_undirected("cartesian", g, tree)
    for _ in range(50):
        d = orientation_at(prod, rng.randrange(2 ** len(prod.edges)))
        _, m = cartesian_upper_hom(d, data, target)
        assert verify_homomorphism(d, target.graph, m)


def test_direct_w_all_orientations_p3():
    p3 = path(3)
    data = path_factor_data(p3, p3, left_square=True, right_square=True)
    target = direct_upper_target(3, 3)
    for d in orientations(product_undirected("direct", p3, p3)):
        _, m = direct_upper_hom(d, data, target)
        assert verify_homomorphism(d, target.graph, m)


def test_direct_w_other_factors():
    g, h = path(4), cycle(4)
    data = path_factor_data(g, h, left_square=True, right_square=True)
    prod = product_undirected("direct", g, h)
    rng = random.Random(2)
    for _ in range(100):
        d = orientation_at(prod, rng.randrange(2 ** len(prod.edges)))
        target, m = direct_upper_hom(d, data)
        assert verify_homomorphism(d, target.graph, m)


def test_lexico_w_samples():
    p3, p2 = path(3), path(2)
    u = OrientedGraph.from_arcs(2, [(0, 1)])
    data = FactorData(p3, p2, left_coloring=one_based(optimal_coloring(square(p3))[1]), right_target=u)
    target = lexico_upper_target(3, u, 2)
    prod = product_undirected("lexicographic", p3, p2)
    rng = random.Random(3)
    for _ in range(300):
        d = orientation_at(prod, rng.randrange(2 ** len(prod.edges)))
        _, m = lexico_upper_hom(d, data, target)
        assert verify_homomorphism(d, target.graph, m)


def test_lexico_w_pair_coordinate():
    # the c-coordinate at the neighbour's colour is that vertex's image in the pair map
    p2 = path(2)
    u = OrientedGraph.from_arcs(2, [(0, 1)])
    data = FactorData(p2, p2, left_coloring=[1, 2], right_target=u)
    d = orientation_at(product_undirected("lexicographic", p2, p2), 0)
    target, m = lexico_upper_hom(d, data)
    lab = target.labels[m[0]]  # [0, 0]: colour 1, neighbour colour 2
    assert lab[0] == 1 and lab[2] == 0
    assert lab[3] == 1  # a_1 in the 2-vertex bipartite target, 1-based


def test_strong_w_single_edge_factor_verifies():
    # with a single-edge left factor every cross-arc bit is determined
    g, h = path(2), path(3)
    data = path_factor_data(g, h, right_square=True)
    target = strong_upper_target(2, 3, C3, C3)
    for d in orientations(product_undirected("strong", g, h)):
        _, m = strong_upper_hom(d, data, target)
        assert verify_homomorphism(d, target.graph, m)


def test_strong_w_ambiguous_bit_on_p3():
    p3 = path(3)
    data = path_factor_data(p3, p3, right_square=True)
    target = strong_upper_target(2, 3, C3, C3)
    prod = product_undirected("strong", p3, p3)
    rng = random.Random(0)
    conflicts = 0
    for _ in range(100):
        d = orientation_at(prod, rng.randrange(2 ** len(prod.edges)))
        try:
            _, m = strong_upper_hom(d, data, target)
            assert verify_homomorphism(d, target.graph, m)
        except ConstructionError:
            conflicts += 1
            assert find_homomorphism(d, target.graph) is not None
    assert conflicts > 0


def test_w_rejects_malformed_data():
    p3 = path(3)
    prod = product_undirected("direct", p3, p3)
    d = orientation_at(prod, 0)
    bad = FactorData(p3, p3, left_coloring=[1, 2, 1], right_coloring=[1, 2, 3])  # not proper on P3 squared
    with pytest.raises(ConstructionError):
        direct_upper_hom(d, bad)
    with pytest.raises(ConstructionError):
        cartesian_upper_hom(d, path_factor_data(p3, p3))
    cart = orientation_at(product_undirected("cartesian", p3, p3), 0)
    wrong_layer = FactorData(
        p3, p3, right_coloring=[1, 2, 1], left_target=C3, right_target=C3, left_layer_homs={0: [0, 0, 0]}
    )
    with pytest.raises(ConstructionError):
        cartesian_upper_hom(cart, wrong_layer)


@pytest.mark.parametrize("k", [2, 5, 10])
@pytest.mark.parametrize("l", [3, 7])
def test_strong_grids_five_colour_map(k, l):  # noqa: E741
    d = product_oriented("strong", directed_path(k), directed_path(l))
    assert verify_homomorphism(d, circulant_tournament(5, {1, 2}), [(i + j) % 5 for i in range(k) for j in range(l)])
