"""Exact brute-force oracles.

chi(G), chi_o of oriented and undirected graphs, the upper oriented chromatic
number chi_o^+, the minimum order of an n-universal tournament, and Moon's
bounds on the latter. Everything here is exponential and guarded by caps.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .canonical import canonical_form, canonical_graph
from .config import Caps, check_cap, resolve
from .graphs import OrientedGraph, UndirectedGraph, orientation_at, orientation_count
from .homomorphism import find_homomorphism, find_oriented_coloring

# -- chromatic number ---------------------------------------------------------


def find_proper_coloring(g: UndirectedGraph, k: int) -> list[int] | None:
    """A proper colouring with colours ``0..k-1``, or ``None``."""
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    adj = g.adjacency
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    col = [-1] * n

    def search(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = {col[w] for w in adj[v]}
        for c in range(min(used + 1, k)):
            if c not in taken:
                col[v] = c
                if search(i + 1, max(used, c + 1)):
                    return True
        col[v] = -1
        return False

    return list(col) if search(0, 0) else None


def optimal_coloring(g: UndirectedGraph, caps: Caps | None = None) -> tuple[int, list[int]]:
    check_cap("vertex count", g.n, resolve(caps).chromatic_order)
    k = 1 if not g.edges else 2
    if g.n == 0:
        return 0, []
    while True:
        c = find_proper_coloring(g, k)
        if c is not None:
            return k, c
        k += 1


def chromatic_number(g: UndirectedGraph, caps: Caps | None = None) -> int:
    return optimal_coloring(g, caps)[0]


# -- oriented chromatic number ------------------------------------------------


def optimal_oriented_coloring(d: OrientedGraph, caps: Caps | None = None) -> tuple[int, list[int]]:
    check_cap("vertex count", d.n, resolve(caps).order)
    if d.n == 0:
        return 0, []
    k = 1 if not d.arcs else 2
    while True:
        c = find_oriented_coloring(d, k)
        if c is not None:
            return k, c
        k += 1


def chi_o_oriented(d: OrientedGraph, caps: Caps | None = None) -> int:
    return optimal_oriented_coloring(d, caps)[0]


def _chi_o_sweep(g: UndirectedGraph, start: int, stop: int, floor: int) -> tuple[int, int | None]:
    # returns (best value, index attaining it) over orientations [start, stop)
    best, arg = floor, None
    order = g.edge_order()
    for index in range(start, stop):
        if best >= g.n:
            break
        d = orientation_at(g, index, order)
        if best and find_oriented_coloring(d, best) is not None:
            continue
        k = best + 1
        while find_oriented_coloring(d, k) is None:
            k += 1
        best, arg = k, index
    return best, arg


def _chunks(total: int, jobs: int) -> list[tuple[int, int]]:
    size = max(1, -(-total // (jobs * 4)))
    return [(s, min(total, s + size)) for s in range(0, total, size)]


def chi_o_undirected_witness(
    g: UndirectedGraph, caps: Caps | None = None, jobs: int = 1
) -> tuple[int, int | None]:
    """``(chi_o(G), index of an orientation attaining it)``.

    Orientations are scanned in counter order; each one is first tested
    against the best value found so far, so most need a single search.
    ``chi_o(G) <= |V(G)|`` ends the scan early. The value is independent of
    ``jobs``; the witness index is the smallest attaining one only for ``jobs=1``.
    """
    caps = resolve(caps)
    check_cap("edge count", len(g.edges), caps.edges)
    check_cap("vertex count", g.n, caps.order)
    if g.n == 0:
        return 0, None
    floor = 0
    total = orientation_count(g)
    if jobs <= 1:
        return _chi_o_sweep(g, 0, total, floor)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_chi_o_sweep, g, a, b, floor) for a, b in _chunks(total, jobs)]
        results = [f.result() for f in futures]
    best = max(r[0] for r in results)
    arg = next((r[1] for r in results if r[0] == best and r[1] is not None), None)
    return best, arg


def chi_o_undirected(g: UndirectedGraph, caps: Caps | None = None, jobs: int = 1) -> int:
    return chi_o_undirected_witness(g, caps, jobs)[0]


# -- tournaments ----------------------------------------------------------------


@lru_cache(maxsize=None)
def tournament_classes(n: int) -> tuple[OrientedGraph, ...]:
    """One canonical representative per isomorphism class of n-vertex tournaments."""
    if n <= 1:
        return (OrientedGraph(max(n, 0), frozenset()),)
    seen: dict = {}
    for base in tournament_classes(n - 1):
        for d in _extensions(base):
            key = canonical_form(d)
            if key not in seen:
                seen[key] = canonical_graph(d)
    return tuple(seen[key] for key in sorted(seen))


def _extensions(base: OrientedGraph):
    # every way of adding vertex n-1 to ``base``
    m = base.n
    for pattern in range(1 << m):
        arcs = set(base.arcs)
        for v in range(m):
            arcs.add((m, v) if (pattern >> v) & 1 else (v, m))
        yield OrientedGraph(m + 1, frozenset(arcs))


# -- upper oriented chromatic number --------------------------------------------


def _accepts(orients: Sequence[OrientedGraph], target: OrientedGraph, first: Sequence[int] = ()) -> int | None:
    """Index of an orientation with no homomorphism to ``target``, or ``None`` if all map."""
    tried = set()
    for i in list(first) + list(range(len(orients))):
        if i in tried:
            continue
        tried.add(i)
        if find_homomorphism(orients[i], target) is None:
            return i
    return None


def _accepts_worker(g: UndirectedGraph, target: OrientedGraph) -> bool:
    orients = [orientation_at(g, i) for i in range(orientation_count(g))]
    return _accepts(orients, target) is None


def upper_oriented_chromatic(
    g: UndirectedGraph, max_order: int, caps: Caps | None = None, jobs: int = 1
) -> tuple[int | None, OrientedGraph | None]:
    """``(chi_o^+(G), a universal target)``, or ``(None, None)`` if above ``max_order``.

    A target may be enlarged to a tournament on the same vertices without
    losing homomorphisms, so only tournaments are tried, one per isomorphism
    class, in canonical order.
    """
    caps = resolve(caps)
    check_cap("edge count", len(g.edges), caps.edges)
    check_cap("target order", max_order, caps.target_order)
    if g.n == 0:
        return 0, OrientedGraph(0, frozenset())
    orients = [orientation_at(g, i) for i in range(orientation_count(g))]
    failing: list[int] = []
    for k in range(1, max_order + 1):
        candidates = tournament_classes(k)
        if jobs > 1 and len(candidates) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                ok = list(pool.map(_accepts_worker, [g] * len(candidates), candidates))
            for target, good in zip(candidates, ok):
                if good:
                    return k, target
            continue
        for target in candidates:
            bad = _accepts(orients, target, failing)
            if bad is None:
                return k, target
            if bad in failing:
                failing.remove(bad)
            failing.insert(0, bad)
    return None, None


def chi_o_plus(g: UndirectedGraph, max_order: int, caps: Caps | None = None, jobs: int = 1) -> int | None:
    """Least order of a target receiving every orientation of ``g``; ``None`` means unknown up to ``max_order``."""
    return upper_oriented_chromatic(g, max_order, caps, jobs)[0]


# -- universal tournaments ----------------------------------------------------


@lru_cache(maxsize=None)
def _subtournament_table(n: int) -> tuple[tuple[int, ...], int]:
    """Class id of every n-vertex tournament code, and the number of classes.

    Code bit ``t`` (pairs ``i < j`` in combinations order) is set iff the arc is ``(i, j)``.
    """
    pairs = list(combinations(range(n), 2))
    ids: dict = {}
    table = []
    for code in range(1 << len(pairs)):
        d = OrientedGraph(n, frozenset((i, j) if (code >> t) & 1 else (j, i) for t, (i, j) in enumerate(pairs)))
        key = canonical_form(d)
        table.append(ids.setdefault(key, len(ids)))
    return tuple(table), len(ids)


def contains_all_tournaments(t: OrientedGraph, n: int) -> bool:
    """True iff every tournament of order ``n`` is a subtournament of ``t``."""
    table, classes = _subtournament_table(n)
    pairs = list(combinations(range(n), 2))
    arcs = t.arcs
    found: set[int] = set()
    for subset in combinations(range(t.n), n):
        code = 0
        for bit, (i, j) in enumerate(pairs):
            if (subset[i], subset[j]) in arcs:
                code |= 1 << bit
        found.add(table[code])
        if len(found) == classes:
            return True
    return False


def universal_tournament(n: int, caps: Caps | None = None) -> OrientedGraph:
    """A smallest tournament containing every n-vertex tournament."""
    check_cap("universal tournament n", n, resolve(caps).epsilon_n)
    if n <= 1:
        return OrientedGraph(max(n, 0), frozenset())
    size = n
    while True:
        candidates = tournament_classes(n) if size == n else (
            d for base in tournament_classes(size - 1) for d in _extensions(base)
        )
        for t in candidates:
            if contains_all_tournaments(t, n):
                return t
        size += 1


def universal_tournament_size(n: int, caps: Caps | None = None) -> int:
    """epsilon(n): the minimum order of an n-universal tournament."""
    return universal_tournament(n, caps).n


# -- Moon's bounds and cited constants -----------------------------------------


@dataclass(frozen=True)
class BoundPair:
    """Bounds on epsilon(n).

    ``lower`` is the least integer at least ``2**((n-1)/2)``; ``upper`` is the
    exact (always rational) value of Moon's upper-bound expression.
    """

    n: int
    lower: int
    upper: Fraction

    @property
    def lower_real(self) -> float:
        return 2 ** ((self.n - 1) / 2)

    def contains(self, value: int) -> bool:
        return self.lower_real <= value <= self.upper

    def display(self) -> dict:
        return {
            "n": self.n,
            "lower": float(f"{self.lower_real:.6g}"),
            "upper": float(f"{float(self.upper):.6g}"),
        }


def moon_bounds(n: int) -> BoundPair:
    if n < 1:
        raise ValueError(f"moon_bounds needs n >= 1, got {n}")
    if n % 2:
        half = 1 << ((n - 1) // 2)
        return BoundPair(n, half, Fraction(n * half))
    # 2**((n-1)/2) is irrational; the even-case upper bound simplifies to 3n * 2**((n-4)/2)
    lower = math.isqrt((1 << (n - 1)) - 1) + 1
    return BoundPair(n, lower, Fraction(3 * n) * Fraction(2) ** ((n - 4) // 2))


@dataclass(frozen=True)
class CitedBounds:
    """Upper bounds on chi_o^+ for graph classes, quoted from the literature (data only)."""

    forest: int = 3
    cycle: int = 4
    cycle_c5: int = 5
    outerplanar: int = 7
    two_outerplanar: int = 67
    planar: int = 80
    triangle_free_planar: int = 59

    @staticmethod
    def acyclic(a: int) -> int:
        """Graphs with acyclic chromatic number at most ``a``."""
        return a * 2 ** (a - 1)

    @staticmethod
    def max_degree(k: int) -> int:
        return 2 * k * k * 2**k

    def cycle_value(self, k: int) -> int:
        return self.cycle_c5 if k == 5 else self.cycle


CITED_BOUNDS = CitedBounds()
