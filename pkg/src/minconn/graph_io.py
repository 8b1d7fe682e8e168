"""graph6, DIMACS and JSON edge-list codecs."""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, GraphError

GRAPH6_MAX_N = 62
FORMATS = ("graph6", "dimacs", "json")


class GraphParseError(ValueError):
    pass


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a newline-terminated graph6 string (n <= 62)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 encoding supports n <= {GRAPH6_MAX_N}, got {n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for pos in range(0, len(bits), 6):
        value = 0
        for b in bits[pos:pos + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out) + "\n"


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphParseError("graph6 characters must lie in 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise GraphParseError(f"graph6 decoding supports n <= {GRAPH6_MAX_N}")
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    body = s[1:]
    if len(body) != expected:
        raise GraphParseError(f"graph6 body has {len(body)} bytes, expected {expected}")
    bits = []
    for c in body:
        value = ord(c) - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[npairs:]):
        raise GraphParseError("nonzero graph6 padding bits")
    g = Graph(n)
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                g.add_edge(i, j)
            pos += 1
    return g


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    g = None
    declared_m = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if g is not None or len(parts) != 4 or parts[1] != "edge":
                    raise GraphParseError(f"line {lineno}: bad problem line")
                g = Graph(int(parts[2]))
                declared_m = int(parts[3])
            elif parts[0] == "e":
                if g is None or len(parts) != 3:
                    raise GraphParseError(f"line {lineno}: bad edge line")
                g.add_edge(int(parts[1]) - 1, int(parts[2]) - 1)
            else:
                raise GraphParseError(f"line {lineno}: unknown record {parts[0]!r}")
        except (ValueError, GraphError) as exc:
            if isinstance(exc, GraphParseError):
                raise
            raise GraphParseError(f"line {lineno}: {exc}") from exc
    if g is None:
        raise GraphParseError("missing 'p edge' line")
    if g.m != declared_m:
        raise GraphParseError(f"declared {declared_m} edges, found {g.m}")
    return g


def to_json(g: Graph) -> str:
    """Canonical form: 0-indexed ``u < v`` pairs sorted lexicographically."""
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}) + "\n"


def from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        g = Graph(int(data["n"]))
        for u, v in data["edges"]:
            g.add_edge(int(u), int(v))
    except (ValueError, KeyError, TypeError, GraphError) as exc:
        raise GraphParseError(f"bad JSON edge list: {exc}") from exc
    return g


_ENCODERS = {"graph6": to_graph6, "dimacs": to_dimacs, "json": to_json}
_DECODERS = {"graph6": from_graph6, "dimacs": from_dimacs, "json": from_json}
_SUFFIXES = {".g6": "graph6", ".graph6": "graph6", ".dimacs": "dimacs", ".col": "dimacs",
             ".json": "json"}


def encode(g: Graph, fmt: str) -> str:
    return _ENCODERS[fmt](g)


def decode(text: str, fmt: str) -> Graph:
    return _DECODERS[fmt](text)


def sniff_format(text: str) -> str:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    first = stripped.split(None, 1)[0] if stripped else ""
    if first in ("p", "c", "e"):
        return "dimacs"
    return "graph6"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphParseError(str(exc)) from exc
    fmt = fmt or _SUFFIXES.get(path.suffix.lower()) or sniff_format(text)
    return decode(text, fmt)


def write_graph(g: Graph, path: str | Path, fmt: str = "graph6") -> None:
    Path(path).write_text(encode(g, fmt))
