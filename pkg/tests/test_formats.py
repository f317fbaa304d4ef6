from __future__ import annotations

import json

import networkx as nx
import pytest
from hypothesis import given

from orichrom.constructions import bipartite_target
from orichrom.errors import AntisymmetryError, FormatError, InvalidGraphError
from orichrom.formats import (
    Report,
    _decode_n,
    _encode_n,
    format_label,
    parse_any,
    parse_digraph6,
    parse_graph6,
    write_digraph6,
    write_dot,
    write_graph6,
)
from orichrom.graphs import OrientedGraph, UndirectedGraph, circulant_tournament, directed_cycle, empty_graph, path

from strategies import oriented_graphs, undirected_graphs


def test_graph6_examples():
    assert parse_graph6(write_graph6(path(3))) == path(3)
    assert write_graph6(path(3)) == "Bg"
    assert parse_graph6(">>graph6<<Bg") == path(3)
    assert write_graph6(path(3), header=True) == ">>graph6<<Bg"


def test_digraph6_examples():
    t = circulant_tournament(7, {1, 2, 3})
    assert parse_digraph6(write_digraph6(t)) == t
    assert parse_digraph6(">>digraph6<<" + write_digraph6(t)) == t
    assert write_digraph6(directed_cycle(3)) == "&BP_"


@given(undirected_graphs(max_n=12))
def test_graph6_roundtrip_and_networkx(g):
    s = write_graph6(g)
    assert parse_graph6(s) == g
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges)
    assert nx.to_graph6_bytes(ng, header=False).decode().strip() == s
    back = nx.from_graph6_bytes(s.encode())
    assert {tuple(sorted(e)) for e in back.edges()} == set(g.edges)


@given(oriented_graphs(max_n=10))
def test_digraph6_roundtrip(d):
    assert parse_digraph6(write_digraph6(d)) == d


@pytest.mark.parametrize("n", [62, 63, 100])
def test_order_byte_boundaries(n):
    assert parse_graph6(write_graph6(empty_graph(n))) == empty_graph(n)


@pytest.mark.parametrize("n", [0, 62, 63, 258047, 258048, 10**7])
def test_order_encoding(n):
    assert _decode_n(_encode_n(n)) == (n, "")


def test_graph6_matches_networkx_large():
    g = UndirectedGraph.from_edges(70, [(i, (i * 7 + 3) % 70) for i in range(70) if i != (i * 7 + 3) % 70])
    ng = nx.Graph()
    ng.add_nodes_from(range(70))
    ng.add_edges_from(g.edges)
    assert nx.to_graph6_bytes(ng, header=False).decode().strip() == write_graph6(g)


def test_digraph6_opposite_arcs():
    # n = 2, bits 0110 -> arcs (0,1) and (1,0), padded to 011000
    with pytest.raises(AntisymmetryError):
        parse_digraph6("&A" + chr(63 + 0b011000))


def test_digraph6_loop():
    with pytest.raises(InvalidGraphError):
        parse_digraph6("&A" + chr(63 + 0b100000))


@pytest.mark.parametrize("bad", ["", "B", "Bgg", "B" + chr(63 + 0b000001), "&", "~", "B\x20"])
def test_malformed(bad):
    with pytest.raises(FormatError):
        parse_any(bad)


def test_graph6_rejects_other_formats():
    with pytest.raises(FormatError):
        parse_graph6(":Fa@x^")
    with pytest.raises(FormatError):
        parse_digraph6("Bg")


def test_parse_any():
    assert isinstance(parse_any("Bg"), UndirectedGraph)
    assert isinstance(parse_any("&BP_"), OrientedGraph)


def test_dot():
    text = write_dot(directed_cycle(3))
    assert text.startswith("digraph G {") and text.count("->") == 3
    assert write_dot(empty_graph(0)) == "graph G {\n}\n"
    st2 = bipartite_target(2)
    dot = write_dot(st2.graph, st2.labels)
    assert 'label="a1"' in dot and 'label="b{}"' in dot and 'label="b{1,2}"' in dot
    assert write_dot(path(2)).count("--") == 1


def test_format_label():
    assert format_label(("a", 3)) == "a3"
    assert format_label(("b", (1, 3))) == "b{1,3}"
    assert format_label((2, 1, 0, 1)) == "[2,1,0,1]"


def test_report_json():
    r = Report(command="chi", inputs={"n": 3}, values={"chi": 2})
    doc = json.loads(r.to_json())
    assert doc["schema"] == "orichrom.report/v1"
    assert "witness" not in doc and "timing" not in doc
    assert r.to_json() == Report(command="chi", inputs={"n": 3}, values={"chi": 2}).to_json()
