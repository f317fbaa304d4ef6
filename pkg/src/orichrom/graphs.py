"""Graph values, standard families, orientations, squares and line digraphs.

Vertices are always the dense integers ``0..n-1``. Both graph classes are
immutable and hashable; adjacency views are computed lazily and cached.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .config import Caps, check_cap, resolve
from .errors import AntisymmetryError, InvalidGraphError

Edge = tuple[int, int]
Arc = tuple[int, int]


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise InvalidGraphError(f"edge {(u, v)} not normalised or out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "UndirectedGraph":
        """Build from any iterable of pairs; pairs are normalised to ``(min, max)``."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adjacency[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def edge_order(self) -> tuple[Edge, ...]:
        """Default :data:`EdgeOrder`: edges in lexicographic ``(min, max)`` order."""
        return tuple(sorted(self.edges))

    def is_subgraph_of(self, other: "UndirectedGraph") -> bool:
        return self.n == other.n and self.edges <= other.edges

    def induced(self, vertices: Sequence[int]) -> "UndirectedGraph":
        pos = {v: i for i, v in enumerate(vertices)}
        return UndirectedGraph.from_edges(
            len(vertices), ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        )

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"negative vertex count {self.n}")
        for u, v in self.arcs:
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"arc {(u, v)} out of range for n={self.n}")
            if (v, u) in self.arcs:
                raise AntisymmetryError(f"opposite arcs {(u, v)} and {(v, u)}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> "OrientedGraph":
        return cls(n, frozenset((int(u), int(v)) for u, v in arcs))

    @cached_property
    def out_neighbors(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].add(v)
        return tuple(frozenset(o) for o in out)

    @cached_property
    def in_neighbors(self) -> tuple[frozenset[int], ...]:
        inn: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].add(u)
        return tuple(frozenset(i) for i in inn)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in o) for o in self.out_neighbors)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in i) for i in self.in_neighbors)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def underlying(self) -> UndirectedGraph:
        return UndirectedGraph.from_edges(self.n, self.arcs)

    def is_subgraph_of(self, other: "OrientedGraph") -> bool:
        return self.n == other.n and self.arcs <= other.arcs

    def induced(self, vertices: Sequence[int]) -> "OrientedGraph":
        """Induced subgraph; vertex ``i`` of the result is ``vertices[i]``."""
        pos = {v: i for i, v in enumerate(vertices)}
        return OrientedGraph.from_arcs(
            len(vertices), ((pos[u], pos[v]) for u, v in self.arcs if u in pos and v in pos)
        )

    def is_tournament(self) -> bool:
        return len(self.arcs) == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, arcs={sorted(self.arcs)})"


# -- standard families ------------------------------------------------------


def empty_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, frozenset())


def path(k: int) -> UndirectedGraph:
    if k < 1:
        raise InvalidGraphError(f"path needs k >= 1, got {k}")
    return UndirectedGraph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> UndirectedGraph:
    if k < 3:
        raise InvalidGraphError(f"cycle needs k >= 3, got {k}")
    return UndirectedGraph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def complete(n: int) -> UndirectedGraph:
    if n < 1:
        raise InvalidGraphError(f"complete graph needs n >= 1, got {n}")
    return UndirectedGraph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> UndirectedGraph:
    """K_{m,n}; the x-part is ``0..m-1`` and the y-part is ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise InvalidGraphError(f"complete bipartite graph needs m, n >= 1, got {m}, {n}")
    return UndirectedGraph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def directed_path(k: int) -> OrientedGraph:
    if k < 1:
        raise InvalidGraphError(f"directed path needs k >= 1, got {k}")
    return OrientedGraph.from_arcs(k, ((i, i + 1) for i in range(k - 1)))


def directed_cycle(k: int) -> OrientedGraph:
    if k < 3:
        raise InvalidGraphError(f"directed cycle needs k >= 3, got {k}")
    return OrientedGraph.from_arcs(k, ((i, (i + 1) % k) for i in range(k)))


def transitive_tournament(n: int) -> OrientedGraph:
    return OrientedGraph.from_arcs(n, combinations(range(n), 2))


def circulant_tournament(n: int, s: Iterable[int]) -> OrientedGraph:
    """Tournament on Z_n with arc (i, j) iff (j - i) mod n is in ``s``."""
    s = frozenset(s)
    if n < 1 or n % 2 == 0:
        raise InvalidGraphError(f"circulant tournament needs odd n, got {n}")
    if not s <= set(range(1, n)):
        raise InvalidGraphError(f"residues {sorted(s)} not within 1..{n - 1}")
    for d in range(1, n):
        if (d in s) == ((n - d) in s):
            raise InvalidGraphError(f"exactly one of {d}, {n - d} must be in the connection set")
    return OrientedGraph.from_arcs(n, ((i, j) for i in range(n) for j in range(n) if i != j and (j - i) % n in s))


# -- derived graphs ---------------------------------------------------------


def square(g: UndirectedGraph) -> UndirectedGraph:
    """Join every pair of vertices at distance 1 or 2."""
    edges = set(g.edges)
    for u in range(g.n):
        for w in g.adjacency[u]:
            for v in g.adjacency[w]:
                if v != u:
                    edges.add((min(u, v), max(u, v)))
    return UndirectedGraph(g.n, frozenset(edges))


def distances_from(g: UndirectedGraph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_oriented_clique(d: OrientedGraph) -> bool:
    """True iff every pair of vertices is joined by a directed path of length 1 or 2."""
    out = d.out_neighbors
    for u, v in combinations(range(d.n), 2):
        if v in out[u] or u in out[v]:
            continue
        if any(v in out[w] for w in out[u]) or any(u in out[w] for w in out[v]):
            continue
        return False
    return True


def line_digraph(d: OrientedGraph) -> OrientedGraph:
    """Line digraph; vertex ``i`` stands for ``sorted(d.arcs)[i]``."""
    arcs = sorted(d.arcs)
    by_tail: dict[int, list[int]] = {}
    for i, (u, _) in enumerate(arcs):
        by_tail.setdefault(u, []).append(i)
    return OrientedGraph.from_arcs(
        len(arcs), ((i, j) for i, (_, v) in enumerate(arcs) for j in by_tail.get(v, ()))
    )


# -- orientations -----------------------------------------------------------


def orientation_count(g: UndirectedGraph) -> int:
    return 1 << len(g.edges)


def orientation_at(g: UndirectedGraph, index: int, order: Sequence[Edge] | None = None) -> OrientedGraph:
    """The orientation with binary counter value ``index``.

    Bit ``i`` refers to ``order[i]``; a clear bit gives arc ``(min, max)``.
    """
    order = g.edge_order() if order is None else order
    arcs = []
    for i, (u, v) in enumerate(order):
        arcs.append((v, u) if (index >> i) & 1 else (u, v))
    return OrientedGraph(g.n, frozenset(arcs))


def orientation_index(d: OrientedGraph, order: Sequence[Edge]) -> int:
    """Inverse of :func:`orientation_at` for an orientation of the ordered edges."""
    return sum(1 << i for i, (u, v) in enumerate(order) if (v, u) in d.arcs)


def orientations(
    g: UndirectedGraph,
    order: Sequence[Edge] | None = None,
    caps: Caps | None = None,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[OrientedGraph]:
    """Yield the orientations of ``g`` with counter values in ``[start, stop)``."""
    check_cap("edge count", len(g.edges), resolve(caps).edges)
    order = g.edge_order() if order is None else tuple(order)
    if sorted(order) != sorted(g.edges) or len(set(order)) != len(order):
        raise InvalidGraphError("edge order is not a permutation of the edge set")
    stop = orientation_count(g) if stop is None else stop
    for index in range(start, stop):
        yield orientation_at(g, index, order)


def is_orientation_of(d: OrientedGraph, g: UndirectedGraph) -> bool:
    return d.n == g.n and len(d.arcs) == len(g.edges) and d.underlying() == g
