from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, strategies as st

from orichrom.graphs import (
    OrientedGraph,
    complete,
    complete_bipartite,
    directed_cycle,
    directed_path,
    orientations,
    path,
    transitive_tournament,
)
from orichrom.constructions import bipartite_target
from orichrom.homomorphism import (
    compose,
    find_homomorphism,
    find_oriented_coloring,
    is_proper_coloring,
    quotient_target,
    verify_homomorphism,
    verify_oriented_coloring,
    verify_undirected_homomorphism,
)

from oracles import has_homomorphism, is_oriented_coloring
from strategies import oriented_graphs

C3 = directed_cycle(3)


def test_verify_examples():
    d = transitive_tournament(4)
    assert verify_homomorphism(d, d, list(range(4)))
    assert verify_homomorphism(directed_path(7), C3, [i % 3 for i in range(7)])
    t3 = transitive_tournament(3)
    assert not any(verify_homomorphism(t3, C3, list(m)) for m in product(range(3), repeat=3))


def test_verify_rejects_bad_maps():
    with pytest.raises(ValueError):
        verify_homomorphism(directed_path(3), C3, [0, 1])
    assert not verify_homomorphism(directed_path(2), C3, [0, 5])


def test_find_examples():
    m = find_homomorphism(directed_path(5), C3)
    assert m is not None and verify_homomorphism(directed_path(5), C3, m)
    assert find_homomorphism(transitive_tournament(3), C3) is None
    t = bipartite_target(2).graph
    for d in orientations(complete_bipartite(2, 3)):
        assert find_homomorphism(d, t) is not None


def test_find_edge_cases():
    empty = OrientedGraph(0, frozenset())
    assert find_homomorphism(empty, C3) == []
    assert find_homomorphism(directed_path(1), empty) is None
    assert find_homomorphism(OrientedGraph(3, frozenset()), directed_path(1)) == [0, 0, 0]


@given(oriented_graphs(max_n=4), oriented_graphs(min_n=1, max_n=4))
def test_find_agrees_with_exhaustive(d, t):
    m = find_homomorphism(d, t)
    assert (m is not None) == has_homomorphism(d, t)
    if m is not None:
        assert verify_homomorphism(d, t, m)


@given(oriented_graphs(max_n=5), st.data())
def test_composition(d, data):
    c = find_oriented_coloring(d, d.n)
    t = quotient_target(d, c)
    s_arcs = set(t.arcs)
    perm = data.draw(st.permutations(range(t.n)))
    s = OrientedGraph.from_arcs(t.n, ((perm[a], perm[b]) for a, b in s_arcs))
    assert verify_homomorphism(d, t, c)
    assert verify_homomorphism(t, s, list(perm))
    assert verify_homomorphism(d, s, compose(c, list(perm)))


def test_oriented_coloring_examples():
    assert verify_oriented_coloring(C3, [0, 1, 2])
    assert not verify_oriented_coloring(directed_path(3), [0, 1, 0])
    alternating = OrientedGraph.from_arcs(3, [(0, 1), (2, 1)])
    assert verify_oriented_coloring(alternating, [0, 1, 0])
    assert find_oriented_coloring(C3, 3) is not None
    assert find_oriented_coloring(C3, 2) is None
    assert find_oriented_coloring(directed_cycle(5), 4) is None


@given(oriented_graphs(max_n=5), st.integers(0, 5))
def test_find_oriented_coloring_exact(d, k):
    c = find_oriented_coloring(d, k)
    if c is None:
        assert not any(is_oriented_coloring(d, x) for x in product(range(k), repeat=d.n))
    else:
        assert verify_oriented_coloring(d, c) and max(c, default=-1) < k


@given(oriented_graphs(max_n=5), st.data())
def test_coloring_iff_quotient_hom(d, data):
    c = data.draw(st.lists(st.integers(0, 3), min_size=d.n, max_size=d.n))
    assert verify_oriented_coloring(d, c) == is_oriented_coloring(d, c)
    if verify_oriented_coloring(d, c):
        assert find_homomorphism(d, quotient_target(d, c, 4)) is not None


@given(oriented_graphs(max_n=6))
def test_identity_coloring(d):
    assert find_oriented_coloring(d, d.n) == list(range(d.n))


def test_undirected_homs():
    assert verify_undirected_homomorphism(path(4), complete(2), [0, 1, 0, 1])
    assert not verify_undirected_homomorphism(path(3), complete(2), [0, 0, 1])
    assert is_proper_coloring(path(3), [0, 1, 0])
    assert not is_proper_coloring(complete(3), [0, 1, 1])
