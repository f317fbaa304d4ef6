"""graph6 / digraph6 encodings, DOT output and JSON reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Hashable, Sequence

from .errors import AntisymmetryError, FormatError, InvalidGraphError
from .graphs import OrientedGraph, UndirectedGraph

GRAPH6_HEADER = ">>graph6<<"
DIGRAPH6_HEADER = ">>digraph6<<"
SCHEMA = "orichrom.report/v1"

# -- shared byte-level helpers ------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError(f"negative order {n}")
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def _decode_n(data: str) -> tuple[int, str]:
    def sextets(chunk: str) -> int:
        value = 0
        for ch in chunk:
            if not 63 <= ord(ch) <= 126:
                raise FormatError(f"order byte {ch!r} outside 63..126")
            value = (value << 6) | (ord(ch) - 63)
        return value

    if not data:
        raise FormatError("missing order byte")
    if not 63 <= ord(data[0]) <= 126:
        raise FormatError(f"order byte {data[0]!r} outside 63..126")
    if data[0] != "~":
        return ord(data[0]) - 63, data[1:]
    if data[1:2] == "~":
        if len(data) < 8:
            raise FormatError("truncated 36-bit order")
        return sextets(data[2:8]), data[8:]
    if len(data) < 4:
        raise FormatError("truncated 18-bit order")
    return sextets(data[1:4]), data[4:]


def _pack(bits: Sequence[int]) -> str:
    out = []
    for start in range(0, len(bits), 6):
        chunk = list(bits[start : start + 6])
        chunk += [0] * (6 - len(chunk))
        value = 0
        for b in chunk:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def _unpack(data: str, count: int) -> list[int]:
    need = -(-count // 6)
    if len(data) != need:
        raise FormatError(f"expected {need} data bytes, got {len(data)}")
    bits = []
    for ch in data:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise FormatError(f"byte {ch!r} outside the printable range 63..126")
        bits.extend((value >> s) & 1 for s in range(5, -1, -1))
    if any(bits[count:]):
        raise FormatError("nonzero padding bits")
    return bits[:count]


def _strip(text: str, header: str) -> str:
    s = text.strip()
    if s.startswith(header):
        s = s[len(header) :]
    return s


# -- graph6 --------------------------------------------------------------------------


def write_graph6(g: UndirectedGraph, header: bool = False) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    return (GRAPH6_HEADER if header else "") + _encode_n(g.n) + _pack(bits)


def parse_graph6(text: str) -> UndirectedGraph:
    s = _strip(text, GRAPH6_HEADER)
    if s.startswith((":", ";", "&")):
        raise FormatError("not a graph6 string (sparse6 or digraph6 prefix)")
    n, rest = _decode_n(s)
    bits = _unpack(rest, n * (n - 1) // 2)
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    return UndirectedGraph.from_edges(n, (p for p, b in zip(pairs, bits) if b))


# -- digraph6 ------------------------------------------------------------------------


def write_digraph6(d: OrientedGraph, header: bool = False) -> str:
    bits = [1 if d.has_arc(i, j) else 0 for i in range(d.n) for j in range(d.n)]
    return (DIGRAPH6_HEADER if header else "") + "&" + _encode_n(d.n) + _pack(bits)


def parse_digraph6(text: str) -> OrientedGraph:
    """Parse digraph6; loops raise :class:`InvalidGraphError`, opposite arcs :class:`AntisymmetryError`."""
    s = _strip(text, DIGRAPH6_HEADER)
    if not s.startswith("&"):
        raise FormatError("digraph6 strings start with '&'")
    n, rest = _decode_n(s[1:])
    bits = _unpack(rest, n * n)
    arcs = {divmod(t, n) for t, b in enumerate(bits) if b}
    for u, v in arcs:
        if u == v:
            raise InvalidGraphError(f"digraph6 input has a loop at {u}")
        if (v, u) in arcs:
            raise AntisymmetryError(f"digraph6 input has both ({u},{v}) and ({v},{u})")
    return OrientedGraph(n, frozenset(arcs))


def parse_any(text: str) -> UndirectedGraph | OrientedGraph:
    s = text.strip()
    if s.startswith(("&", DIGRAPH6_HEADER)):
        return parse_digraph6(s)
    return parse_graph6(s)


# -- DOT ----------------------------------------------------------------------------


def format_label(label: Hashable) -> str:
    """``("a", 1) -> "a1"``, ``("b", (1, 2)) -> "b{1,2}"``, tuples -> ``"[1,0,2]"``."""
    if isinstance(label, tuple) and len(label) == 2 and label[0] == "a":
        return f"a{label[1]}"
    if isinstance(label, tuple) and len(label) == 2 and label[0] == "b":
        return "b{" + ",".join(map(str, label[1])) + "}"
    if isinstance(label, tuple):
        return "[" + ",".join(map(str, label)) + "]"
    return str(label)


def write_dot(g: UndirectedGraph | OrientedGraph, labels: Sequence[Hashable] | None = None, name: str = "G") -> str:
    directed = isinstance(g, OrientedGraph)
    keyword, joint = ("digraph", "->") if directed else ("graph", "--")
    lines = [f"{keyword} {name} {{"]
    for v in range(g.n):
        if labels is not None:
            text = format_label(labels[v]).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{text}"];')
        else:
            lines.append(f"  {v};")
    pairs = sorted(g.arcs) if directed else g.edge_order()
    lines.extend(f"  {u} {joint} {v};" for u, v in pairs)
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- reports ------------------------------------------------------------------------


@dataclass
class Report:
    """Machine-readable result of one CLI command."""

    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    values: dict[str, Any] = field(default_factory=dict)
    caps: dict[str, Any] = field(default_factory=dict)
    witness: dict[str, Any] | None = None
    timing: dict[str, float] | None = None
    ok: bool = True
    schema: str = SCHEMA

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        for key in ("witness", "timing"):
            if out[key] is None:
                del out[key]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=_jsonable)


def _jsonable(value: Any):
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return str(value)
    raise TypeError(f"cannot serialise {type(value).__name__}")
