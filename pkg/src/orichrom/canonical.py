"""Brute-force canonical forms for small oriented graphs.

Vertices are first split by colour refinement (an isomorphism-invariant
ordered partition); the canonical form is the lexicographically smallest
adjacency code over all relabellings that respect that partition. This is
exact, and cheap as long as refinement leaves small cells.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Sequence

from .graphs import OrientedGraph

Code = tuple[int, ...]


def _refine(d: OrientedGraph) -> list[list[int]]:
    out, inn = d.out_neighbors, d.in_neighbors
    colour = [(len(out[v]), len(inn[v])) for v in range(d.n)]
    ranks = _rank(colour)
    while True:
        sig = [
            (ranks[v], tuple(sorted(ranks[w] for w in out[v])), tuple(sorted(ranks[w] for w in inn[v])))
            for v in range(d.n)
        ]
        new = _rank(sig)
        if len(set(new)) == len(set(ranks)):
            break
        ranks = new
    cells: dict[int, list[int]] = {}
    for v, r in enumerate(ranks):
        cells.setdefault(r, []).append(v)
    return [cells[r] for r in sorted(cells)]


def _rank(values: Sequence) -> list[int]:
    table = {val: i for i, val in enumerate(sorted(set(values)))}
    return [table[val] for val in values]


def _code(d: OrientedGraph, order: Sequence[int]) -> Code:
    # row-major adjacency of the relabelled graph: new vertex i is order[i]
    arcs = d.arcs
    return tuple(1 if (a, b) in arcs else 0 for a in order for b in order)


def canonical_form(d: OrientedGraph) -> tuple[int, Code]:
    """A complete isomorphism invariant: ``(n, minimal adjacency code)``."""
    cells = _refine(d)
    best: Code | None = None
    for parts in product(*(permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        code = _code(d, order)
        if best is None or code < best:
            best = code
    return d.n, best if best is not None else ()


def canonical_graph(d: OrientedGraph) -> OrientedGraph:
    n, code = canonical_form(d)
    return OrientedGraph.from_arcs(n, ((i // n, i % n) for i, bit in enumerate(code) if bit))


def is_isomorphic(d: OrientedGraph, e: OrientedGraph) -> bool:
    return d.n == e.n and len(d.arcs) == len(e.arcs) and canonical_form(d) == canonical_form(e)
