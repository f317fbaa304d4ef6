"""Explicit targets and homomorphisms.

Each ``*_target`` builder returns a :class:`StructuredTarget` whose vertices
carry decoded labels; each ``*_hom`` builder returns a vertex map into it.
Colourings supplied to these builders use colours ``1..k`` (they become label
coordinates); vertex maps into oriented graphs use target indices ``0..n-1``.

Layer maps default to :func:`find_homomorphism` into the supplied factor
targets; pass explicit maps for reproducible output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Hashable, Sequence

from .config import Caps, check_cap, resolve
from .errors import ConstructionError
from .graphs import (
    OrientedGraph,
    UndirectedGraph,
    complete_bipartite,
    directed_cycle,
    is_orientation_of,
    path,
    square,
)
from .homomorphism import find_homomorphism, is_proper_coloring, verify_homomorphism
from .products import ProductKind, layer, product_undirected

Label = Hashable


@dataclass(frozen=True)
class StructuredTarget:
    graph: OrientedGraph
    labels: tuple[Label, ...]
    index: dict = field(compare=False, repr=False)

    @classmethod
    def build(cls, labels: Sequence[Label], arc_rule: Callable[[Label, Label], bool]) -> "StructuredTarget":
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ConstructionError("duplicate target labels")
        arcs = [(i, j) for i, a in enumerate(labels) for j, b in enumerate(labels) if i != j and arc_rule(a, b)]
        return cls(OrientedGraph.from_arcs(len(labels), arcs), labels, index)

    @property
    def order(self) -> int:
        return self.graph.n

    def label_of(self, m: Sequence[int]) -> list[Label]:
        return [self.labels[x] for x in m]


@dataclass
class FactorData:
    """Inputs of the product constructions.

    Not every construction reads every field; see each ``*_hom`` function.
    Colourings are 1-based. Layer maps are keyed by the fixed factor vertex:
    ``left_layer_homs[v]`` maps the ``v``-layer (a copy of the left factor) into
    ``left_target``; ``right_layer_homs[u]`` maps the ``u``-layer into ``right_target``.
    """

    left: UndirectedGraph
    right: UndirectedGraph
    left_coloring: Sequence[int] | None = None
    right_coloring: Sequence[int] | None = None
    left_target: OrientedGraph | None = None
    right_target: OrientedGraph | None = None
    left_layer_homs: dict[int, Sequence[int]] | None = None
    right_layer_homs: dict[int, Sequence[int]] | None = None


# -- complete bipartite graphs -------------------------------------------------


def bipartite_target(m: int, caps: Caps | None = None) -> StructuredTarget:
    """Target for every orientation of K_{m,n}.

    Vertices ``a_i`` (index ``i - 1``) and ``b_S`` (index ``m + S`` with ``S`` a
    bitmask over ``0..m-1``). ``a_i`` and ``b_S`` are always joined, by
    ``(a_i, b_S)`` when ``i`` is in ``S`` and by ``(b_S, a_i)`` otherwise.
    """
    if m < 1:
        raise ValueError(f"bipartite_target needs m >= 1, got {m}")
    check_cap("bipartite target m", m, resolve(caps).word)
    labels: list[Label] = [("a", i + 1) for i in range(m)]
    labels += [("b", tuple(i + 1 for i in range(m) if (s >> i) & 1)) for s in range(1 << m)]
    arcs = []
    for s in range(1 << m):
        for i in range(m):
            arcs.append((i, m + s) if (s >> i) & 1 else (m + s, i))
    graph = OrientedGraph.from_arcs(m + (1 << m), arcs)
    return StructuredTarget(graph, tuple(labels), {lab: i for i, lab in enumerate(labels)})


def bipartite_hom(d: OrientedGraph, m: int) -> list[int]:
    """``x_i -> a_i`` and ``y_j -> b_S`` with ``S`` the in-neighbourhood of ``y_j``."""
    if not 1 <= m < d.n or not is_orientation_of(d, complete_bipartite(m, d.n - m)):
        raise ConstructionError(f"not an orientation of K_{{{m},{d.n - m}}}")
    images = list(range(m))
    for y in range(m, d.n):
        s = sum(1 << x for x in d.in_neighbors[y])
        images.append(m + s)
    return images


def bipartite_tight_orientation(m: int, n: int) -> OrientedGraph:
    """``(x_i, y_j)`` iff ``j <= 2**m`` and ``i`` is in ``S_j`` (``S_j`` = bitmask ``j - 1``), else ``(y_j, x_i)``."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got {m}, {n}")
    arcs = []
    for j in range(n):
        for i in range(m):
            if j < (1 << m) and (j >> i) & 1:
                arcs.append((i, m + j))
            else:
                arcs.append((m + j, i))
    return OrientedGraph.from_arcs(m + n, arcs)


# -- bound from the square ---------------------------------------------------------


def square_labels(k: int) -> list[tuple[int, ...]]:
    """All labels ``(a, b_1, ..., b_{a-1})``; label index ``2**(a-1) - 1 + bits``."""
    labels = []
    for a in range(1, k + 1):
        for bits in range(1 << (a - 1)):
            labels.append((a,) + tuple((bits >> i) & 1 for i in range(a - 1)))
    return labels


def _square_label_index(a: int, bits: int) -> int:
    return (1 << (a - 1)) - 1 + bits


def square_coloring(g: UndirectedGraph, sigma: Sequence[int], d: OrientedGraph) -> list[int]:
    """Oriented colouring of ``d`` from a proper colouring ``sigma`` (colours ``1..k``) of the square of ``g``.

    Bit ``b_i(u)`` is set iff ``u`` has an in-neighbour coloured ``i``.
    """
    if not is_orientation_of(d, g):
        raise ConstructionError("d is not an orientation of g")
    if not is_proper_coloring(square(g), sigma) or min(sigma, default=1) < 1:
        raise ConstructionError("sigma is not a proper 1-based colouring of the square")
    colours = []
    for u in range(g.n):
        a = sigma[u]
        bits = 0
        for v in d.in_neighbors[u]:
            if sigma[v] < a:
                bits |= 1 << (sigma[v] - 1)
        colours.append(_square_label_index(a, bits))
    return colours


# -- product homomorphisms -----------------------------------------------------


def product_hom_compose(kind, alpha: Sequence[int], beta: Sequence[int], right_target_order: int) -> list[int]:
    """``[u, v] -> [alpha(u), beta(v)]`` for the lexicographic, strong and Cartesian products."""
    kind = ProductKind(kind)
    if kind is ProductKind.DIRECT:
        raise ValueError("use projection_hom for direct products")
    return [a * right_target_order + b for a in alpha for b in beta]


def projection_hom(which: str, d: OrientedGraph, e: OrientedGraph) -> list[int]:
    """Projection of the direct product ``d x e`` onto one factor."""
    if which == "left":
        return [u for u in range(d.n) for _ in range(e.n)]
    if which == "right":
        return [v for _ in range(d.n) for v in range(e.n)]
    raise ValueError(f"which must be 'left' or 'right', got {which!r}")


def t7_strong_grid_hom(k: int, l: int) -> list[int]:  # noqa: E741
    """``[x_i, y_j] -> 2j + i (mod 7)`` (1-based ``i, j``) on the strong product of two directed paths."""
    if k < 1 or l < 1:
        raise ValueError(f"need k, l >= 1, got {k}, {l}")
    return [(2 * j + i) % 7 for i in range(1, k + 1) for j in range(1, l + 1)]


def c3_cartesian_path_hom(p: OrientedGraph, q: OrientedGraph) -> list[int]:
    """Map the Cartesian product of two oriented paths into the directed 3-cycle ``0 -> 1 -> 2 -> 0``.

    The first row follows ``q`` (+1 along an arc, -1 against it), and every
    later row shifts the previous one by +/-1 according to ``p``.
    """
    for name, f in (("p", p), ("q", q)):
        if f.n < 1 or not is_orientation_of(f, path(f.n)):
            raise ConstructionError(f"{name} is not an oriented path on vertices 0..n-1 in order")
    row = [0]
    for j in range(1, q.n):
        row.append((row[-1] + (1 if q.has_arc(j - 1, j) else -1)) % 3)
    rows = [row]
    for i in range(1, p.n):
        step = 1 if p.has_arc(i - 1, i) else -1
        rows.append([(x + step) % 3 for x in rows[-1]])
    return [x for r in rows for x in r]


# -- helpers for the upper constructions ------------------------------------------


def _layer_homs(kind, g, h, d, which, target, given):
    """Layer maps for every layer of ``d`` (an orientation of ``g ? h``), found or checked."""
    count = h.n if which == "left" else g.n
    homs = {}
    for fixed in range(count):
        vertices = layer(kind, g, h, which, fixed).vertices
        sub = d.induced(vertices)
        m = given.get(fixed) if given else None
        if m is None:
            m = find_homomorphism(sub, target)
            if m is None:
                raise ConstructionError(f"{which} layer {fixed} has no homomorphism to the supplied target")
        elif not verify_homomorphism(sub, target, m):
            raise ConstructionError(f"supplied map for {which} layer {fixed} is not a homomorphism")
        homs[fixed] = list(m)
    return homs


def _check_orientation(d: OrientedGraph, kind, g: UndirectedGraph, h: UndirectedGraph) -> None:
    if not is_orientation_of(d, product_undirected(kind, g, h)):
        raise ConstructionError(f"input is not an orientation of the {ProductKind(kind).value} product")


def _check_coloring(graph: UndirectedGraph, coloring, k: int | None, what: str) -> list[int]:
    if coloring is None:
        raise ConstructionError(f"{what} is required")
    coloring = list(coloring)
    if not is_proper_coloring(graph, coloring) or any(c < 1 for c in coloring):
        raise ConstructionError(f"{what} is not a proper 1-based colouring")
    if k is not None and any(c > k for c in coloring):
        raise ConstructionError(f"{what} uses colours above {k}")
    return coloring


# -- lexicographic products --------------------------------------------------------


def lexico_upper_target(k: int, u: OrientedGraph, n: int) -> StructuredTarget:
    """Target for every orientation of ``G[H]`` with ``chi(G^2) <= k`` and ``|V(H)| = n``.

    Labels ``(a, b, c_1, ..., c_k)`` with ``c_a = 0`` and every other ``c_i`` a
    1-based vertex of :func:`bipartite_target` ``(n)``; labels are listed in
    lexicographic order. Arc iff ``a = a'`` and ``(b, b')`` is an arc of ``u``, or
    ``a != a'`` and ``(c_{a'}, c'_a)`` is an arc of the bipartite target.
    """
    t = bipartite_target(n).graph
    big = t.n
    labels = []
    for a in range(1, k + 1):
        for b in range(1, u.n + 1):
            for rest in cartesian(range(1, big + 1), repeat=k - 1):
                cs = list(rest)
                cs.insert(a - 1, 0)
                labels.append((a, b) + tuple(cs))
    index = {lab: i for i, lab in enumerate(labels)}

    arcs = []
    by_class: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        by_class.setdefault(lab[0], []).append(i)
    for a, members in by_class.items():
        by_b: dict[int, list[int]] = {}
        for i in members:
            by_b.setdefault(labels[i][1], []).append(i)
        for b, b2 in u.arcs:
            arcs.extend((i, j) for i in by_b.get(b + 1, ()) for j in by_b.get(b2 + 1, ()))
    for a in by_class:
        for a2 in by_class:
            if a == a2:
                continue
            src: dict[int, list[int]] = {}
            for i in by_class[a]:
                src.setdefault(labels[i][1 + a2], []).append(i)
            dst: dict[int, list[int]] = {}
            for j in by_class[a2]:
                dst.setdefault(labels[j][1 + a], []).append(j)
            for p, q in t.arcs:
                arcs.extend((i, j) for i in src.get(p + 1, ()) for j in dst.get(q + 1, ()))
    return StructuredTarget(OrientedGraph.from_arcs(len(labels), arcs), tuple(labels), index)


def lexico_arc_rule(u: OrientedGraph, n: int) -> Callable[[tuple, tuple], bool]:
    """The defining arc predicate of :func:`lexico_upper_target`, for cross-checking."""
    t = bipartite_target(n).graph

    def rule(x: tuple, y: tuple) -> bool:
        a, b, cs = x[0], x[1], x[2:]
        a2, b2, cs2 = y[0], y[1], y[2:]
        if a == a2:
            return u.has_arc(b - 1, b2 - 1)
        return t.has_arc(cs[a2 - 1] - 1, cs2[a - 1] - 1)

    return rule


def lexico_upper_order(k: int, l: int, n: int) -> int:  # noqa: E741
    return k * l * (n + 2**n) ** (k - 1)


def lexico_upper_hom(d: OrientedGraph, data: FactorData, target: StructuredTarget | None = None):
    """Map an orientation of ``G[H]`` into :func:`lexico_upper_target`.

    Reads ``left_coloring`` (proper on G^2), ``right_target`` (U) and optional
    ``right_layer_homs``. The map between layers ``u < u'`` is
    :func:`bipartite_hom` of the arcs joining them, with layer ``u`` as the x-side.
    A coordinate with no matching neighbour is set to 1 (any value works there).
    Returns ``(target, vertex map)``.
    """
    g, h = data.left, data.right
    kind = ProductKind.LEXICOGRAPHIC
    _check_orientation(d, kind, g, h)
    alpha = _check_coloring(square(g), data.left_coloring, None, "left_coloring (of G^2)")
    k = max(alpha, default=1)
    if data.right_target is None:
        raise ConstructionError("right_target is required")
    u_target = data.right_target
    n = h.n
    if target is None:
        target = lexico_upper_target(k, u_target, n)
    lam = _layer_homs(kind, g, h, d, "right", u_target, data.right_layer_homs)

    pair: dict[tuple[int, int], list[int]] = {}
    for x, y in sorted(g.edges):
        verts = [x * n + v for v in range(n)] + [y * n + v for v in range(n)]
        sub = d.induced(verts)
        between = OrientedGraph.from_arcs(2 * n, ((p, q) for p, q in sub.arcs if (p < n) != (q < n)))
        mu = bipartite_hom(between, n)
        pair[(x, y)] = mu[:n]
        pair[(y, x)] = mu[n:]

    images = []
    for uu in range(g.n):
        a = alpha[uu]
        by_colour = {}
        for w in g.adjacency[uu]:
            if alpha[w] in by_colour:
                raise ConstructionError(f"two neighbours of {uu} share colour {alpha[w]}")
            by_colour[alpha[w]] = w
        for v in range(n):
            cs = []
            for i in range(1, k + 1):
                if i == a:
                    cs.append(0)
                elif i in by_colour:
                    cs.append(pair[(uu, by_colour[i])][v] + 1)
                else:
                    cs.append(1)
            images.append(target.index[(a, lam[uu][v] + 1) + tuple(cs)])
    return target, images


# -- strong products ------------------------------------------------------------


def strong_upper_labels(l: int, k: int, m: int, n: int) -> list[tuple]:  # noqa: E741
    """``(alpha, beta, mu, lambda, c_1, ..., c_{beta-1})`` in lexicographic order."""
    labels = []
    for alpha in range(1, l + 1):
        for beta in range(1, k + 1):
            for mu in range(1, m + 1):
                for lam in range(1, n + 1):
                    for bits in cartesian((0, 1), repeat=beta - 1):
                        labels.append((alpha, beta, mu, lam) + bits)
    return labels


def strong_upper_target(l: int, k: int, t: OrientedGraph, u: OrientedGraph) -> StructuredTarget:  # noqa: E741
    """Target for orientations of ``G x H`` (strong) with ``chi(G) <= l``, ``chi(H^2) <= k``.

    ``t`` receives the orientations of G, ``u`` those of H. Order ``(2**k - 1) l |t| |u|``.
    """
    return StructuredTarget.build(strong_upper_labels(l, k, t.n, u.n), strong_arc_rule(t, u))


def strong_arc_rule(t: OrientedGraph, u: OrientedGraph) -> Callable[[tuple, tuple], bool]:
    def rule(x: tuple, y: tuple) -> bool:
        alpha, beta, mu, lam, cs = x[0], x[1], x[2], x[3], x[4:]
        alpha2, beta2, mu2, lam2, cs2 = y[0], y[1], y[2], y[3], y[4:]
        if alpha == alpha2:
            return u.has_arc(lam - 1, lam2 - 1)
        if beta == beta2:
            return t.has_arc(mu - 1, mu2 - 1)
        if beta < beta2:
            return cs2[beta - 1] == 1
        return cs[beta2 - 1] == 0

    return rule


def strong_upper_order(l: int, k: int, m: int, n: int) -> int:  # noqa: E741
    return (2**k - 1) * l * m * n


def strong_upper_hom(d: OrientedGraph, data: FactorData, target: StructuredTarget | None = None):
    """Map an orientation of ``G x H`` (strong) into :func:`strong_upper_target`.

    Reads ``left_coloring`` (proper on G), ``right_coloring`` (proper on H^2),
    ``left_target`` (T), ``right_target`` (U) and optional layer maps. Bit
    ``c_i`` of ``[u, v]`` records the direction of the arc joining it to a vertex
    ``[w, x]`` with ``w != u`` and ``x`` coloured ``i < h(v)``: 1 when incoming,
    0 when outgoing. Raises :class:`ConstructionError` when two such arcs
    disagree, which can happen as soon as a vertex of G has two neighbours.
    """
    g, h = data.left, data.right
    kind = ProductKind.STRONG
    _check_orientation(d, kind, g, h)
    gamma = _check_coloring(g, data.left_coloring, None, "left_coloring (of G)")
    hc = _check_coloring(square(h), data.right_coloring, None, "right_coloring (of H^2)")
    if data.left_target is None or data.right_target is None:
        raise ConstructionError("left_target and right_target are required")
    t, u = data.left_target, data.right_target
    if target is None:
        target = strong_upper_target(max(gamma, default=1), max(hc, default=1), t, u)
    mu = _layer_homs(kind, g, h, d, "left", t, data.left_layer_homs)
    lam = _layer_homs(kind, g, h, d, "right", u, data.right_layer_homs)
    nh = h.n

    images = []
    for x in range(g.n):
        for v in range(nh):
            me = x * nh + v
            beta = hc[v]
            bits: dict[int, int] = {}
            for other, value in [(w, 1) for w in d.in_neighbors[me]] + [(w, 0) for w in d.out_neighbors[me]]:
                w, y = divmod(other, nh)
                if w == x or hc[y] >= beta:
                    continue
                i = hc[y]
                if bits.get(i, value) != value:
                    raise ConstructionError(
                        f"vertex [{x},{v}]: cross arcs to colour {i} disagree in direction; "
                        "the bit is not determined"
                    )
                bits[i] = value
            cs = tuple(bits.get(i, 0) for i in range(1, beta))
            images.append(target.index[(gamma[x], beta, mu[v][x] + 1, lam[x][v] + 1) + cs])
    return target, images


# -- Cartesian products ------------------------------------------------------------


def cartesian_upper_target(k: int, t: OrientedGraph, u: OrientedGraph) -> StructuredTarget:
    """Labels ``(l, a, b)``; arc iff ``l = l'`` and ``(a, a')`` in ``t``, or ``l != l'`` and ``(b, b')`` in ``u``."""
    labels = [(c, a, b) for c in range(1, k + 1) for a in range(1, t.n + 1) for b in range(1, u.n + 1)]

    def rule(x, y):
        if x[0] == y[0]:
            return t.has_arc(x[1] - 1, y[1] - 1)
        return u.has_arc(x[2] - 1, y[2] - 1)

    return StructuredTarget.build(labels, rule)


def cartesian_upper_hom(d: OrientedGraph, data: FactorData, target: StructuredTarget | None = None):
    """Map an orientation of ``G [] H`` to :func:`cartesian_upper_target`.

    The right factor H is the coloured one: reads ``right_coloring`` (proper
    on H), ``left_target`` (T), ``right_target`` (U) and optional layer maps.
    ``[u, v] -> (colour(v), alpha_v(u), beta_u(v))``.
    """
    g, h = data.left, data.right
    kind = ProductKind.CARTESIAN
    _check_orientation(d, kind, g, h)
    lam = _check_coloring(h, data.right_coloring, None, "right_coloring (of H)")
    if data.left_target is None or data.right_target is None:
        raise ConstructionError("left_target and right_target are required")
    t, u = data.left_target, data.right_target
    if target is None:
        target = cartesian_upper_target(max(lam, default=1), t, u)
    alpha = _layer_homs(kind, g, h, d, "left", t, data.left_layer_homs)
    beta = _layer_homs(kind, g, h, d, "right", u, data.right_layer_homs)
    images = [
        target.index[(lam[v], alpha[v][x] + 1, beta[x][v] + 1)] for x in range(g.n) for v in range(h.n)
    ]
    return target, images


# -- direct products -------------------------------------------------------------


def direct_upper_labels(k: int, l: int) -> list[tuple]:  # noqa: E741
    """``(alpha, beta, c_{1,1}, ..., c_{1,l}, ..., c_{alpha-1,l})`` with ``c_{i,beta} = 0``, lexicographic order."""
    labels = []
    for alpha in range(1, k + 1):
        for beta in range(1, l + 1):
            free = (alpha - 1) * (l - 1)
            for bits in cartesian((0, 1), repeat=free):
                it = iter(bits)
                cs = []
                for _ in range(alpha - 1):
                    cs.extend(0 if j == beta else next(it) for j in range(1, l + 1))
                labels.append((alpha, beta) + tuple(cs))
    return labels


def _dbit(label: tuple, i: int, j: int, l: int) -> int:  # noqa: E741
    return label[2 + (i - 1) * l + (j - 1)]


def direct_arc_rule(l: int) -> Callable[[tuple, tuple], bool]:  # noqa: E741
    """Arc iff the vertex with the larger ``alpha`` stores, at the other's ``(alpha, beta)``, the bit
    ``1`` for "the larger-beta end is the head" and ``0`` otherwise."""

    def rule(x: tuple, y: tuple) -> bool:
        a, b = x[0], x[1]
        a2, b2 = y[0], y[1]
        if a == a2 or b == b2:
            return False
        if a < a2:
            return _dbit(y, a, b, l) == (1 if b < b2 else 0)
        return _dbit(x, a2, b2, l) == (1 if b < b2 else 0)

    return rule


def direct_upper_target(k: int, l: int) -> StructuredTarget:  # noqa: E741
    return StructuredTarget.build(direct_upper_labels(k, l), direct_arc_rule(l))


def direct_upper_order(k: int, l: int) -> int:  # noqa: E741
    """Order of :func:`direct_upper_target`: ``l * sum_{a<k} 2**(a(l-1))``."""
    return l * sum(2 ** (a * (l - 1)) for a in range(k))


def direct_order_closed_form(k: int, l: int) -> Fraction:  # noqa: E741
    """``(2**(k(l-1)) - 1) / (2**(l-1) - 1)``, the sum above without the factor ``l``."""
    if l == 1:
        return Fraction(k)
    return Fraction(2 ** (k * (l - 1)) - 1, 2 ** (l - 1) - 1)


def direct_upper_hom(d: OrientedGraph, data: FactorData, target: StructuredTarget | None = None):
    """Map an orientation of ``G x H`` (direct) to :func:`direct_upper_target`.

    Reads ``left_coloring`` (proper on G^2) and ``right_coloring`` (proper on H^2).
    At ``[u, v]``, the bit indexed by the colours of a neighbour ``[w, x]`` with a
    smaller G^2-colour is 1 iff the arc between them points toward the end
    with the larger H^2-colour.
    """
    g, h = data.left, data.right
    kind = ProductKind.DIRECT
    _check_orientation(d, kind, g, h)
    a = _check_coloring(square(g), data.left_coloring, None, "left_coloring (of G^2)")
    b = _check_coloring(square(h), data.right_coloring, None, "right_coloring (of H^2)")
    k, l = max(a, default=1), max(b, default=1)  # noqa: E741
    if target is None:
        target = direct_upper_target(k, l)
    nh = h.n
    images = []
    for x in range(g.n):
        for v in range(nh):
            me = x * nh + v
            cs = [0] * ((a[x] - 1) * l)
            seen: dict[tuple[int, int], int] = {}
            for other, outgoing in [(w, True) for w in d.out_neighbors[me]] + [(w, False) for w in d.in_neighbors[me]]:
                w, y = divmod(other, nh)
                if a[w] >= a[x]:
                    continue
                i, j = a[w], b[y]
                # outgoing and b(v) < b(x), or incoming and b(v) > b(x)
                bit = 1 if outgoing == (b[v] < j) else 0
                if seen.get((i, j), bit) != bit:
                    raise ConstructionError(f"vertex [{x},{v}]: coordinate ({i},{j}) set twice")
                seen[(i, j)] = bit
                cs[(i - 1) * l + (j - 1)] = bit
            images.append(target.index[(a[x], b[v]) + tuple(cs)])
    return target, images


# -- factor data helpers --------------------------------------------------------------


def universal_target_for(g: UndirectedGraph, max_order: int = 5, caps: Caps | None = None) -> OrientedGraph:
    """A smallest oriented graph receiving every orientation of ``g`` (paths and trees give the 3-cycle)."""
    from .solvers import upper_oriented_chromatic

    k, t = upper_oriented_chromatic(g, max_order, caps)
    if t is None:
        raise ConstructionError(f"no universal target of order <= {max_order}")
    return t


def one_based(coloring: Sequence[int]) -> list[int]:
    return [c + 1 for c in coloring]


def path_factor_data(
    left: UndirectedGraph, right: UndirectedGraph, left_square: bool = False, right_square: bool = False
) -> FactorData:
    """Factor data with optimal colourings and the directed 3-cycle as both targets.

    ``left_square`` / ``right_square`` colour the square of that factor instead
    (lexicographic and direct need G^2, strong and direct need H^2). The 3-cycle
    receives every orientation of a forest, so this suits paths and trees.
    """
    from .solvers import optimal_coloring

    def colour(g: UndirectedGraph, sq: bool) -> list[int]:
        return one_based(optimal_coloring(square(g) if sq else g)[1])

    c3 = directed_cycle(3)
    return FactorData(
        left=left,
        right=right,
        left_target=c3,
        right_target=c3,
        left_coloring=colour(left, left_square),
        right_coloring=colour(right, right_square),
    )
