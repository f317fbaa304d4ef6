"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from itertools import permutations, product

from orichrom.graphs import OrientedGraph, UndirectedGraph


def all_homomorphisms(d: OrientedGraph, t: OrientedGraph):
    for m in product(range(t.n), repeat=d.n):
        if all((m[u], m[v]) in t.arcs for u, v in d.arcs):
            yield list(m)


def has_homomorphism(d: OrientedGraph, t: OrientedGraph) -> bool:
    return next(all_homomorphisms(d, t), None) is not None


def is_oriented_coloring(d: OrientedGraph, c) -> bool:
    directions = {}
    for u, v in d.arcs:
        if c[u] == c[v]:
            return False
        key = frozenset((c[u], c[v]))
        if directions.setdefault(key, (c[u], c[v])) != (c[u], c[v]):
            return False
    return True


def chi_o_brute(d: OrientedGraph) -> int:
    for k in range(0 if d.n == 0 else 1, d.n + 1):
        if any(is_oriented_coloring(d, c) for c in product(range(k), repeat=d.n)):
            return k
    return d.n


def chi_brute(g: UndirectedGraph) -> int:
    for k in range(0 if g.n == 0 else 1, g.n + 1):
        if any(all(c[u] != c[v] for u, v in g.edges) for c in product(range(k), repeat=g.n)):
            return k
    return g.n


def isomorphic_brute(d: OrientedGraph, e: OrientedGraph) -> bool:
    if d.n != e.n or len(d.arcs) != len(e.arcs):
        return False
    return any({(p[u], p[v]) for u, v in d.arcs} == e.arcs for p in permutations(range(d.n)))


def bfs_square(g: UndirectedGraph) -> set[tuple[int, int]]:
    edges = set()
    for u in range(g.n):
        seen = {u: 0}
        frontier = [u]
        for depth in (1, 2):
            nxt = []
            for x in frontier:
                for y in g.adjacency[x]:
                    if y not in seen:
                        seen[y] = depth
                        nxt.append(y)
            frontier = nxt
        edges |= {(min(u, v), max(u, v)) for v, dist in seen.items() if 1 <= dist <= 2}
    return edges
