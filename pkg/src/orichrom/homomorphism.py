"""Homomorphism search/verification and oriented colourings."""

from __future__ import annotations

from typing import Sequence

from .graphs import OrientedGraph, UndirectedGraph

VertexMap = list[int]


def _is_total(m: Sequence[int], n: int) -> bool:
    return len(m) == n


def verify_homomorphism(d: OrientedGraph, t: OrientedGraph, m: Sequence[int]) -> bool:
    """True iff ``m`` sends every arc of ``d`` to an arc of ``t``."""
    if not _is_total(m, d.n):
        raise ValueError(f"map has {len(m)} entries, source has {d.n} vertices")
    if any(not 0 <= x < t.n for x in m):
        return False
    arcs = t.arcs
    return all((m[u], m[v]) in arcs for u, v in d.arcs)


def verify_undirected_homomorphism(g: UndirectedGraph, h: UndirectedGraph, m: Sequence[int]) -> bool:
    if not _is_total(m, g.n):
        raise ValueError(f"map has {len(m)} entries, source has {g.n} vertices")
    if any(not 0 <= x < h.n for x in m):
        return False
    return all(m[u] != m[v] and h.has_edge(m[u], m[v]) for u, v in g.edges)


def is_proper_coloring(g: UndirectedGraph, c: Sequence) -> bool:
    return len(c) == g.n and all(c[u] != c[v] for u, v in g.edges)


def compose(first: Sequence[int], second: Sequence[int]) -> VertexMap:
    """``second o first``."""
    return [second[x] for x in first]


def find_homomorphism(d: OrientedGraph, t: OrientedGraph) -> VertexMap | None:
    """Exact homomorphism search, or ``None`` when none exists.

    Backtracking with bitmask domains, maintaining arc consistency after each
    assignment. Variables are picked by smallest domain (ties: smallest index),
    values in ascending order.
    """
    n = d.n
    if n == 0:
        return []
    if t.n == 0:
        return None
    full = (1 << t.n) - 1
    t_out, t_in = t.out_masks, t.in_masks
    has_out = sum(1 << a for a in range(t.n) if t_out[a])
    has_in = sum(1 << a for a in range(t.n) if t_in[a])
    d_out, d_in = d.out_neighbors, d.in_neighbors

    domains = []
    for x in range(n):
        dom = full
        if d_out[x]:
            dom &= has_out
        if d_in[x]:
            dom &= has_in
        domains.append(dom)

    def support(dom: int, masks: Sequence[int], other: int) -> int:
        # values a in dom with masks[a] & other != 0
        out = 0
        while dom:
            low = dom & -dom
            a = low.bit_length() - 1
            if masks[a] & other:
                out |= low
            dom ^= low
        return out

    def propagate(doms: list[int], queue: list[int]) -> bool:
        pending = set(queue)
        while queue:
            y = queue.pop()
            pending.discard(y)
            dy = doms[y]
            # x -> y arcs: x needs an out-neighbour in dom(y)
            for x in d_in[y]:
                new = support(doms[x], t_out, dy)
                if new != doms[x]:
                    if not new:
                        return False
                    doms[x] = new
                    if x not in pending:
                        pending.add(x)
                        queue.append(x)
            for x in d_out[y]:
                new = support(doms[x], t_in, dy)
                if new != doms[x]:
                    if not new:
                        return False
                    doms[x] = new
                    if x not in pending:
                        pending.add(x)
                        queue.append(x)
        return True

    if any(dom == 0 for dom in domains) or not propagate(domains, list(range(n))):
        return None

    assigned = [False] * n

    def search(doms: list[int], depth: int) -> list[int] | None:
        if depth == n:
            return doms
        best, best_size = -1, None
        for x in range(n):
            if not assigned[x]:
                size = bin(doms[x]).count("1")
                if best_size is None or size < best_size:
                    best, best_size = x, size
        x = best
        assigned[x] = True
        dom = doms[x]
        while dom:
            low = dom & -dom
            dom ^= low
            trial = list(doms)
            trial[x] = low
            if propagate(trial, [x]):
                found = search(trial, depth + 1)
                if found is not None:
                    return found
        assigned[x] = False
        return None

    result = search(domains, 0)
    if result is None:
        return None
    return [dom.bit_length() - 1 for dom in result]


def verify_oriented_coloring(d: OrientedGraph, c: Sequence[int]) -> bool:
    """Arc endpoints get distinct colours and all arcs between two colour classes agree in direction."""
    if not _is_total(c, d.n):
        raise ValueError(f"colouring has {len(c)} entries, graph has {d.n} vertices")
    seen: set[tuple[int, int]] = set()
    for u, v in d.arcs:
        a, b = c[u], c[v]
        if a == b or (b, a) in seen:
            return False
        seen.add((a, b))
    return True


def quotient_target(d: OrientedGraph, c: Sequence[int], k: int | None = None) -> OrientedGraph:
    """The oriented graph on colour classes with arcs induced by ``c``.

    Raises :class:`~orichrom.errors.InvalidGraphError` when ``c`` is not an
    oriented colouring (the quotient would have a loop or opposite arcs).
    """
    k = (max(c, default=-1) + 1) if k is None else k
    return OrientedGraph.from_arcs(k, {(c[u], c[v]) for u, v in d.arcs})


def find_oriented_coloring(d: OrientedGraph, k: int) -> VertexMap | None:
    """An oriented colouring with at most ``k`` colours, or ``None``.

    Colour classes are opened in order (a vertex may take any used colour or
    the next fresh one), and a count matrix of arcs between classes enforces
    that no two classes are joined in both directions.
    """
    n = d.n
    if n == 0:
        return []
    if k <= 0:
        return None
    if k >= n:
        return list(range(n))

    out, inn = d.out_neighbors, d.in_neighbors
    und = [out[v] | inn[v] for v in range(n)]
    order = _coloring_order(n, und)
    col = [-1] * n
    between = [[0] * k for _ in range(k)]

    def place(v: int, c: int) -> bool:
        for w in out[v]:
            cw = col[w]
            if cw >= 0 and (cw == c or between[cw][c]):
                return False
        for w in inn[v]:
            cw = col[w]
            if cw >= 0 and (cw == c or between[c][cw]):
                return False
        return True

    def apply(v: int, c: int, delta: int) -> None:
        for w in out[v]:
            if col[w] >= 0:
                between[c][col[w]] += delta
        for w in inn[v]:
            if col[w] >= 0:
                between[col[w]][c] += delta

    def mixed_neighbourhood(v: int) -> bool:
        # a coloured in- and out-neighbour sharing a class rule out every colour for v
        dirs: dict[int, int] = {}
        for w in out[v]:
            cw = col[w]
            if cw >= 0:
                if dirs.get(cw, 1) != 1:
                    return True
                dirs[cw] = 1
        for w in inn[v]:
            cw = col[w]
            if cw >= 0:
                if dirs.get(cw, -1) != -1:
                    return True
                dirs[cw] = -1
        return False

    def search(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        if mixed_neighbourhood(v):
            return False
        for c in range(min(used + 1, k)):
            if place(v, c):
                col[v] = c
                apply(v, c, +1)
                if search(i + 1, max(used, c + 1)):
                    return True
                apply(v, c, -1)
                col[v] = -1
        return False

    return list(col) if search(0, 0) else None


def _coloring_order(n: int, und: Sequence[frozenset[int]]) -> list[int]:
    """Greedy order: each next vertex has the most already-ordered neighbours (ties: higher degree, lower index)."""
    order: list[int] = []
    placed = [False] * n
    weight = [0] * n
    for _ in range(n):
        best = max(
            (v for v in range(n) if not placed[v]),
            key=lambda v: (weight[v], len(und[v]), -v),
        )
        placed[best] = True
        order.append(best)
        for w in und[best]:
            weight[w] += 1
    return order
