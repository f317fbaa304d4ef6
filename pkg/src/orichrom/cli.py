"""Command-line interface: ``orichrom <command> [options]``.

Exit status is 0 on success, 1 when a ``verify`` check or a constructed map
fails and 2 for usage
errors, malformed input and refused (over-cap) searches.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from typing import Callable, Sequence

from . import constructions as cons
from .checks import CHECKS
from .config import Caps
from .errors import CapExceededError, ConstructionError, OrichromError
from .formats import Report, format_label, parse_any, write_digraph6, write_dot, write_graph6
from .graphs import (
    OrientedGraph,
    UndirectedGraph,
    circulant_tournament,
    complete,
    complete_bipartite,
    cycle,
    directed_cycle,
    directed_path,
    empty_graph,
    line_digraph,
    orientation_at,
    path,
    square,
    transitive_tournament,
)
from .homomorphism import find_homomorphism, verify_homomorphism, verify_oriented_coloring
from .products import ProductKind, product_oriented, product_undirected
from .solvers import (
    chi_o_undirected_witness,
    chromatic_number,
    moon_bounds,
    optimal_coloring,
    optimal_oriented_coloring,
    universal_tournament,
    upper_oriented_chromatic,
)

Graph = UndirectedGraph | OrientedGraph


class UsageError(OrichromError):
    pass


# -- graph specs ------------------------------------------------------------------


def _ints(text: str, count: int, spec: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError(f"{spec!r}: expected {count} comma-separated integers")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"{spec!r}: expected integers") from None


FAMILIES: dict[str, tuple[int, Callable[..., Graph]]] = {
    "path": (1, path),
    "cycle": (1, cycle),
    "complete": (1, complete),
    "bipartite": (2, complete_bipartite),
    "empty": (1, empty_graph),
    "dpath": (1, directed_path),
    "dcycle": (1, directed_cycle),
    "transitive": (1, transitive_tournament),
}


def parse_graph_spec(spec: str) -> Graph:
    """``path:K``, ``cycle:K``, ``complete:N``, ``bipartite:M,N``, ``empty:N``, ``dpath:K``,
    ``dcycle:K``, ``transitive:N``, ``circulant:N,a-b-c``, or a graph6 / digraph6 string."""
    name, sep, args = spec.partition(":")
    if sep and name == "circulant":
        n_text, _, residues = args.partition(",")
        try:
            return circulant_tournament(int(n_text), [int(r) for r in residues.split("-") if r])
        except ValueError as exc:
            raise UsageError(f"{spec!r}: {exc}") from None
    if sep and name in FAMILIES:
        count, build = FAMILIES[name]
        return build(*_ints(args, count, spec))
    return parse_any(spec)


def _undirected(g: Graph, what: str) -> UndirectedGraph:
    if not isinstance(g, UndirectedGraph):
        raise UsageError(f"{what} must be an undirected graph")
    return g


def _oriented(g: Graph, what: str) -> OrientedGraph:
    if not isinstance(g, OrientedGraph):
        raise UsageError(f"{what} must be an oriented graph (dpath:K, digraph6, ...)")
    return g


def describe(g: Graph) -> dict:
    if isinstance(g, OrientedGraph):
        return {"kind": "oriented", "n": g.n, "arcs": len(g.arcs), "digraph6": write_digraph6(g)}
    return {"kind": "undirected", "n": g.n, "edges": len(g.edges), "graph6": write_graph6(g)}


def render(g: Graph, fmt: str, labels=None) -> str:
    if fmt == "dot":
        return write_dot(g, labels)
    if fmt == "digraph6" or (fmt == "graph6" and isinstance(g, OrientedGraph)):
        if not isinstance(g, OrientedGraph):
            raise UsageError("digraph6 output needs an oriented graph")
        return write_digraph6(g) + "\n"
    return write_graph6(g) + "\n"


# -- commands ----------------------------------------------------------------------
# each fills ``report`` and returns text to print instead of the JSON report, or None


def cmd_family(a, caps, report):
    g = parse_graph_spec(a.spec)
    report.values["graph"] = describe(g)
    return None if a.format == "json" else render(g, a.format)


def cmd_product(a, caps, report):
    g, h = parse_graph_spec(a.left), parse_graph_spec(a.right)
    if isinstance(g, OrientedGraph) and isinstance(h, OrientedGraph):
        p = product_oriented(a.kind, g, h)
    elif isinstance(g, UndirectedGraph) and isinstance(h, UndirectedGraph):
        p = product_undirected(a.kind, g, h)
    else:
        raise UsageError("both factors must be undirected or both oriented")
    report.inputs.update(kind=a.kind, left=describe(g), right=describe(h))
    report.values["product"] = describe(p)
    return None if a.format == "json" else render(p, a.format)


def cmd_chi(a, caps, report):
    g = _undirected(parse_graph_spec(a.graph), "--graph")
    k, colouring = optimal_coloring(g, caps)
    report.inputs["graph"] = describe(g)
    report.values["chi"] = k
    if a.witness:
        report.witness = {"coloring": colouring}


def cmd_chi_o(a, caps, report):
    g = parse_graph_spec(a.graph)
    report.inputs["graph"] = describe(g)
    if isinstance(g, OrientedGraph):
        k, colouring = optimal_oriented_coloring(g, caps)
        report.values["chi_o"] = k
        if a.witness:
            report.witness = {"coloring": colouring}
        return None
    k, index = chi_o_undirected_witness(g, caps, a.jobs)
    report.values["chi_o"] = k
    report.values["orientations"] = 2 ** len(g.edges)
    if a.witness and index is not None:
        d = orientation_at(g, index)
        report.witness = {
            "orientation_index": index,
            "orientation": write_digraph6(d),
            "coloring": optimal_oriented_coloring(d, caps)[1],
        }
    return None


def cmd_chi_o_plus(a, caps, report):
    g = _undirected(parse_graph_spec(a.graph), "--graph")
    k, target = upper_oriented_chromatic(g, a.max_order, caps, a.jobs)
    report.inputs.update(graph=describe(g), max_order=a.max_order)
    report.values["chi_o_plus"] = k if k is not None else "unknown"
    if a.witness and target is not None:
        report.witness = {"target": write_digraph6(target)}


def cmd_epsilon(a, caps, report):
    t = universal_tournament(a.n, caps)
    report.inputs["n"] = a.n
    report.values["epsilon"] = t.n
    if a.witness:
        report.witness = {"tournament": write_digraph6(t)}


def cmd_moon_bounds(a, caps, report):
    b = moon_bounds(a.n)
    report.inputs["n"] = a.n
    report.values.update(b.display())
    report.values["lower_ceiling"] = b.lower
    report.values["upper_exact"] = str(b.upper)


def cmd_hom(a, caps, report):
    d = _oriented(parse_graph_spec(a.source), "--from")
    t = _oriented(parse_graph_spec(a.target), "--to")
    m = find_homomorphism(d, t)
    report.inputs.update(source=describe(d), target=describe(t))
    report.values["exists"] = m is not None
    if a.witness and m is not None:
        report.witness = {"map": m}


def cmd_line_digraph(a, caps, report):
    d = _oriented(parse_graph_spec(a.graph), "--graph")
    ld = line_digraph(d)
    report.inputs["graph"] = describe(d)
    report.values["line_digraph"] = describe(ld)
    if a.witness:
        report.witness = {"vertex_arcs": [list(x) for x in sorted(d.arcs)]}
    return None if a.format == "json" else render(ld, a.format)


def _orientation_of(g: UndirectedGraph, a) -> tuple[OrientedGraph, int]:
    count = 2 ** len(g.edges)
    index = a.orientation if a.orientation is not None else random.Random(a.seed).randrange(count)
    if not 0 <= index < count:
        raise UsageError(f"--orientation must lie in 0..{count - 1}")
    return orientation_at(g, index), index


def _w_target(a, report):
    left = _undirected(parse_graph_spec(a.left or "path:3"), "--left")
    right = _undirected(parse_graph_spec(a.right or "path:3"), "--right")
    report.inputs.update(left=describe(left), right=describe(right))
    t = cons.universal_target_for(left) if a.which != "direct-w" else None
    u = cons.universal_target_for(right) if a.which != "direct-w" else None

    def colour(g: UndirectedGraph) -> list[int]:
        return cons.one_based(optimal_coloring(g)[1])

    if a.which == "lexico-w":
        kind = ProductKind.LEXICOGRAPHIC
        data = cons.FactorData(left, right, left_coloring=colour(square(left)), right_target=u)
        target = cons.lexico_upper_target(max(data.left_coloring), u, right.n)
        build = cons.lexico_upper_hom
    elif a.which == "strong-w":
        kind = ProductKind.STRONG
        data = cons.FactorData(left, right, colour(left), colour(square(right)), t, u)
        target = cons.strong_upper_target(max(data.left_coloring), max(data.right_coloring), t, u)
        build = cons.strong_upper_hom
    elif a.which == "cartesian-w":
        kind = ProductKind.CARTESIAN
        if chromatic_number(left) < chromatic_number(right):
            # colour the factor with the smaller chromatic number; it has to sit on the right
            left, right, t, u = right, left, u, t
            report.inputs["factors_swapped"] = True
        data = cons.FactorData(left, right, right_coloring=colour(right), left_target=t, right_target=u)
        target = cons.cartesian_upper_target(max(data.right_coloring), t, u)
        build = cons.cartesian_upper_hom
    else:
        kind = ProductKind.DIRECT
        data = cons.FactorData(left, right, colour(square(left)), colour(square(right)))
        target = cons.direct_upper_target(max(data.left_coloring), max(data.right_coloring))
        build = cons.direct_upper_hom
    return kind, data, target, build


def cmd_construct(a, caps, report):
    report.inputs["which"] = a.which
    labels = None
    if a.which == "bipartite":
        st = cons.bipartite_target(a.m, caps)
        report.inputs["m"] = a.m
        graph, labels = st.graph, st.labels
        if a.n is not None:
            g = complete_bipartite(a.m, a.n)
            d, index = _orientation_of(g, a)
            m = cons.bipartite_hom(d, a.m)
            report.values.update(orientation_index=index, verifies=verify_homomorphism(d, graph, m))
            if a.witness:
                report.witness = {"map": m, "labels": [format_label(labels[x]) for x in m]}
    elif a.which == "square":
        g = _undirected(parse_graph_spec(a.graph), "--graph")
        k, sigma = optimal_coloring(square(g), caps)
        sigma = cons.one_based(sigma)
        d, index = _orientation_of(g, a)
        c = cons.square_coloring(g, sigma, d)
        report.inputs["graph"] = describe(g)
        labels = cons.square_labels(k)
        report.ok = verify_oriented_coloring(d, c)
        report.values.update(
            orientation_index=index,
            chi_square=k,
            label_bound=2**k - 1,
            labels_used=len(set(c)),
            verifies=verify_oriented_coloring(d, c),
        )
        if a.witness:
            report.witness = {"coloring": c, "labels": [format_label(labels[x]) for x in c]}
        return None
    elif a.which == "t7":
        graph = circulant_tournament(7, {1, 2, 3})
        d = product_oriented(ProductKind.STRONG, directed_path(a.k), directed_path(a.l))
        m = cons.t7_strong_grid_hom(a.k, a.l)
        report.inputs.update(k=a.k, l=a.l)
        report.values["verifies"] = verify_homomorphism(d, graph, m)
        if a.witness:
            report.witness = {"map": m}
    elif a.which == "c3-grid":
        graph = directed_cycle(3)
        p = _oriented(parse_graph_spec(a.left or f"dpath:{a.k}"), "--left")
        q = _oriented(parse_graph_spec(a.right or f"dpath:{a.l}"), "--right")
        d = product_oriented(ProductKind.CARTESIAN, p, q)
        m = cons.c3_cartesian_path_hom(p, q)
        report.inputs.update(left=describe(p), right=describe(q))
        report.values["verifies"] = verify_homomorphism(d, graph, m)
        if a.witness:
            report.witness = {"map": m}
    else:
        kind, data, st, build = _w_target(a, report)
        graph, labels = st.graph, st.labels
        g = product_undirected(kind, data.left, data.right)
        d, index = _orientation_of(g, a)
        report.values["orientation_index"] = index
        try:
            _, m = build(d, data, st)
            report.values["verifies"] = verify_homomorphism(d, graph, m)
            if a.witness:
                report.witness = {"map": m, "labels": [format_label(labels[x]) for x in m]}
        except ConstructionError as exc:
            report.values["verifies"] = False
            report.values["construction_error"] = str(exc)
            report.values["target_receives_by_search"] = find_homomorphism(d, graph) is not None
    report.values["target"] = describe(graph)
    report.values["target_order"] = graph.n
    report.ok = report.values.get("verifies", True)
    return None if a.format == "json" else render(graph, a.format, labels)


def cmd_verify(a, caps, report):
    names = list(CHECKS) if a.all else [a.theorem]
    options = {"jobs": a.jobs, "seed": a.seed if a.seed is not None else 0}
    if a.k is not None:
        options["k"] = a.k
    if a.l is not None:
        options["l"] = a.l
    if a.samples is not None:
        options["samples"] = a.samples
    results = [CHECKS[name](**options) for name in names]
    report.values["checks"] = [r.as_dict() for r in results]
    report.ok = all(r.passed for r in results)
    for r in results:
        print(r.line(), file=sys.stderr)


COMMANDS = {
    "family": cmd_family,
    "product": cmd_product,
    "chi": cmd_chi,
    "chi-o": cmd_chi_o,
    "chi-o-plus": cmd_chi_o_plus,
    "epsilon": cmd_epsilon,
    "moon-bounds": cmd_moon_bounds,
    "hom": cmd_hom,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "line-digraph": cmd_line_digraph,
}


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["graph6", "digraph6", "dot", "json"], default="json")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--cap-edges", type=int, default=None, help="max edges for orientation sweeps")
    common.add_argument("--cap-order", type=int, default=None, help="max vertices for exact colouring")
    common.add_argument("--cap-target-order", type=int, default=None, help="max target order for chi-o-plus")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--witness", action="store_true", help="include witness maps in the report")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")

    parser = argparse.ArgumentParser(prog="orichrom", description="Oriented colourings of graphs and graph products.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="emit a named graph")
    p.add_argument("spec")

    p = sub.add_parser("product", parents=[common], help="product of two graphs")
    p.add_argument("--kind", choices=[k.value for k in ProductKind], required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    for name in ("chi", "chi-o", "line-digraph"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--graph", required=True)

    p = sub.add_parser("chi-o-plus", parents=[common])
    p.add_argument("--graph", required=True)
    p.add_argument("--max-order", type=int, required=True)

    for name in ("epsilon", "moon-bounds"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("n", type=int)

    p = sub.add_parser("hom", parents=[common], help="search for a homomorphism")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a target and map one orientation into it")
    p.add_argument(
        "--which",
        required=True,
        choices=["bipartite", "square", "t7", "c3-grid", "lexico-w", "strong-w", "cartesian-w", "direct-w"],
    )
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=None, help="map an orientation of K_{m,n} (bipartite)")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--graph", default="path:5")
    p.add_argument("--left", default=None, help="left factor (default path:3, or dpath:K for c3-grid)")
    p.add_argument("--right", default=None, help="right factor (default path:3, or dpath:L for c3-grid)")
    p.add_argument("--orientation", type=int, default=None, help="orientation index (default: seeded random)")

    p = sub.add_parser("verify", parents=[common], help="run published-value checks")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--theorem", choices=list(CHECKS))
    group.add_argument("--all", action="store_true")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    caps = Caps.default().with_(
        edges=a.cap_edges, order=a.cap_order, chromatic_order=a.cap_order, target_order=a.cap_target_order
    )
    report = Report(command=a.command, caps=caps.as_dict())
    if a.seed is not None:
        report.inputs["seed"] = a.seed
    start = time.perf_counter()
    try:
        text = COMMANDS[a.command](a, caps, report)
    except CapExceededError as exc:
        print(f"orichrom: cap exceeded: {exc}", file=sys.stderr)
        return 2
    except (OrichromError, ValueError, IndexError) as exc:
        print(f"orichrom: {exc}", file=sys.stderr)
        return 2
    if a.timing:
        report.timing = {"seconds": round(time.perf_counter() - start, 6)}
    sys.stdout.write(text if text is not None else report.to_json() + "\n")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
