"""Cartesian, strong, direct and lexicographic products.

Product vertex ``[u, v]`` has flat index ``u * |V(right)| + v``.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple, overload

from .errors import InvalidGraphError
from .graphs import OrientedGraph, UndirectedGraph


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    STRONG = "strong"
    DIRECT = "direct"
    LEXICOGRAPHIC = "lexicographic"


class ProductVertex(NamedTuple):
    u: int
    v: int

    def flat(self, right_order: int) -> int:
        return self.u * right_order + self.v


def flat_index(u: int, v: int, right_order: int) -> int:
    return u * right_order + v


def product_vertex(index: int, right_order: int) -> ProductVertex:
    return ProductVertex(*divmod(index, right_order))


def _kind(kind) -> ProductKind:
    try:
        return ProductKind(kind)
    except ValueError:
        raise InvalidGraphError(f"unknown product kind {kind!r}") from None


def _pairs(kind: ProductKind, gn: int, g_pairs, hn: int, h_pairs, symmetric: bool):
    """Yield product pairs ``(x, y)`` for factor pairs (edges or arcs).

    With ``symmetric`` the factor pairs are undirected edges, so the direct part
    also joins ``[u, v']`` with ``[u', v]``.
    """
    f = lambda u, v: u * hn + v  # noqa: E731
    if kind in (ProductKind.CARTESIAN, ProductKind.STRONG):
        for u in range(gn):
            for v, w in h_pairs:
                yield f(u, v), f(u, w)
        for u, w in g_pairs:
            for v in range(hn):
                yield f(u, v), f(w, v)
    if kind in (ProductKind.STRONG, ProductKind.DIRECT):
        for u, w in g_pairs:
            for v, x in h_pairs:
                yield f(u, v), f(w, x)
                if symmetric:
                    yield f(u, x), f(w, v)
    if kind is ProductKind.LEXICOGRAPHIC:
        for u, w in g_pairs:
            for v in range(hn):
                for x in range(hn):
                    yield f(u, v), f(w, x)
        for u in range(gn):
            for v, w in h_pairs:
                yield f(u, v), f(u, w)


def product_undirected(kind, g: UndirectedGraph, h: UndirectedGraph) -> UndirectedGraph:
    kind = _kind(kind)
    return UndirectedGraph.from_edges(g.n * h.n, _pairs(kind, g.n, g.edges, h.n, h.edges, symmetric=True))


def product_oriented(kind, d: OrientedGraph, e: OrientedGraph) -> OrientedGraph:
    """Product of oriented graphs, obtained by reading every factor edge as an arc.

    For the strong and direct products, a pair ``[u, v], [u', v']`` with
    ``(u, u')`` and ``(v', v)`` arcs is not joined, so the underlying graph is
    in general a proper subgraph of the product of the underlying graphs.
    """
    kind = _kind(kind)
    return OrientedGraph(d.n * e.n, frozenset(_pairs(kind, d.n, d.arcs, e.n, e.arcs, symmetric=False)))


class Layer(NamedTuple):
    graph: UndirectedGraph | OrientedGraph
    vertices: tuple[int, ...]  # vertices[i] is the product vertex playing factor vertex i


@overload
def layer(kind, g: UndirectedGraph, h: UndirectedGraph, which: str, fixed: int) -> Layer: ...
@overload
def layer(kind, g: OrientedGraph, h: OrientedGraph, which: str, fixed: int) -> Layer: ...


def layer(kind, g, h, which, fixed):
    """Subgraph induced by one copy of a factor.

    ``which="left"`` gives the ``v``-layer ``V(G) x {fixed}`` (a copy of the left
    factor); ``which="right"`` gives the ``u``-layer ``{fixed} x V(H)``. Lexicographic
    products only have right layers.
    """
    kind = _kind(kind)
    if which not in ("left", "right"):
        raise ValueError(f"which must be 'left' or 'right', got {which!r}")
    if kind is ProductKind.LEXICOGRAPHIC and which == "left":
        raise ValueError("lexicographic products only have u-layers (which='right')")
    if which == "left":
        if not 0 <= fixed < h.n:
            raise IndexError(f"vertex {fixed} not in right factor of order {h.n}")
        vertices = tuple(u * h.n + fixed for u in range(g.n))
    else:
        if not 0 <= fixed < g.n:
            raise IndexError(f"vertex {fixed} not in left factor of order {g.n}")
        vertices = tuple(fixed * h.n + v for v in range(h.n))
    if isinstance(g, OrientedGraph):
        whole = product_oriented(kind, g, h)
    else:
        whole = product_undirected(kind, g, h)
    return Layer(whole.induced(vertices), vertices)


def swap_factors(index: int, left_order: int, right_order: int) -> int:
    """Flat index of ``[v, u]`` in ``H x G`` for flat index of ``[u, v]`` in ``G x H``."""
    u, v = divmod(index, right_order)
    return v * left_order + u
