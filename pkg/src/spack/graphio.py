"""Graph and coloring serialization.

Supports the standard graph6 text encoding (bit-exact, including the
long size forms and the optional ``>>graph6<<`` header), a line-based
edge-list format with an optional "n m" header, and a JSON document for
packing colorings shared by the CLI subcommands.
"""
from __future__ import annotations

import json

from .graph import Graph, build_graph
from .verify import ColorClass, PackingColoring


class FormatError(ValueError):
    pass


class MalformedHeaderError(FormatError):
    pass


class BadCharError(FormatError):
    pass


class TrailingBitsError(FormatError):
    pass


class EdgeListError(FormatError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ColoringDocumentError(FormatError):
    pass


GRAPH6_HEADER = ">>graph6<<"
_MAX_GRAPH6_N = (1 << 36) - 1


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        chunks = [(n >> 12) & 63, (n >> 6) & 63, n & 63]
        return "~" + "".join(chr(c + 63) for c in chunks)
    if n <= _MAX_GRAPH6_N:
        chunks = [(n >> shift) & 63 for shift in range(30, -6, -6)]
        return "~~" + "".join(chr(c + 63) for c in chunks)
    raise FormatError(f"graph6 cannot encode n={n}")


def _parse_size(text: str) -> tuple[int, str]:
    if not text:
        raise MalformedHeaderError("empty graph6 data")

    def chunk(s: str, count: int, what: str) -> int:
        if len(s) < count:
            raise MalformedHeaderError(f"truncated {what} size field")
        value = 0
        for ch in s[:count]:
            value = (value << 6) | _char_value(ch)
        return value

    if text[0] != "~":
        return _char_value(text[0]), text[1:]
    if len(text) >= 2 and text[1] == "~":
        return chunk(text[2:], 6, "8-byte"), text[8:]
    return chunk(text[1:], 3, "4-byte"), text[4:]


def _char_value(ch: str) -> int:
    value = ord(ch) - 63
    if value < 0 or value > 63:
        raise BadCharError(f"byte {ord(ch)} out of graph6 range")
    return value


def parse_graph6(data: str | bytes) -> Graph:
    """Decode one graph6 line (optionally prefixed with its header)."""
    if isinstance(data, (bytes, bytearray)):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise BadCharError(f"not ASCII: {exc}") from None
    else:
        text = data
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    n, body = _parse_size(text)
    total_bits = n * (n - 1) // 2
    need = (total_bits + 5) // 6
    if len(body) != need:
        raise TrailingBitsError(
            f"n={n} needs {need} body bytes, got {len(body)}"
        )
    values = [_char_value(ch) for ch in body]
    edges = []
    index = 0
    for v in range(1, n):
        for u in range(v):
            if values[index // 6] & (1 << (5 - index % 6)):
                edges.append((u, v))
            index += 1
    while index < 6 * need:
        if values[index // 6] & (1 << (5 - index % 6)):
            raise TrailingBitsError("nonzero padding bits")
        index += 1
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 line (shortest size form, no optional header)."""
    nbr = [set(g.adj[v]) for v in range(g.n)]
    out = [_size_prefix(g.n)]
    acc = 0
    filled = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | (1 if u in nbr[v] else 0)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines; '#' starts a comment.

    A first line "a b" counts as an "n m" header exactly when b equals
    the number of remaining data lines; otherwise it is an edge and n is
    inferred as max vertex + 1.
    """
    rows: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"expected two integers, got {line!r}", lineno) from None
        if a < 0 or b < 0:
            raise EdgeListError(f"negative vertex in {line!r}", lineno)
        rows.append((lineno, a, b))
    if not rows:
        return build_graph(0, [])
    _, first_a, first_b = rows[0]
    if first_b == len(rows) - 1:
        n = first_a
        body = rows[1:]
        for lineno, u, v in body:
            if u >= n or v >= n:
                raise EdgeListError(f"vertex out of range for n={n}", lineno)
        return build_graph(n, [(u, v) for _, u, v in body])
    n = 1 + max(max(u, v) for _, u, v in rows)
    return build_graph(n, [(u, v) for _, u, v in rows])


def encode_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def coloring_to_dict(coloring: PackingColoring) -> dict:
    return {
        "n": coloring.n,
        "classes": [
            {
                "label": c.label,
                "radius": c.radius,
                "vertices": sorted(c.vertices),
            }
            for c in coloring.classes
        ],
    }


def coloring_from_dict(doc) -> PackingColoring:
    if not isinstance(doc, dict):
        raise ColoringDocumentError("coloring document must be an object")
    n = doc.get("n")
    if not isinstance(n, int) or n < 0:
        raise ColoringDocumentError("'n' must be a non-negative integer")
    raw_classes = doc.get("classes")
    if not isinstance(raw_classes, list):
        raise ColoringDocumentError("'classes' must be a list")
    classes = []
    for i, entry in enumerate(raw_classes):
        if not isinstance(entry, dict):
            raise ColoringDocumentError(f"class {i} must be an object")
        label = entry.get("label")
        radius = entry.get("radius")
        vertices = entry.get("vertices")
        if not isinstance(label, str):
            raise ColoringDocumentError(f"class {i}: 'label' must be a string")
        if not isinstance(radius, int) or radius < 1:
            raise ColoringDocumentError(f"class {i}: 'radius' must be a positive integer")
        if not isinstance(vertices, list) or any(
            not isinstance(v, int) or isinstance(v, bool) for v in vertices
        ):
            raise ColoringDocumentError(f"class {i}: 'vertices' must be a list of ints")
        classes.append(ColorClass(label, radius, frozenset(vertices)))
    return PackingColoring(n, tuple(classes))


def coloring_to_json(coloring: PackingColoring) -> str:
    return json.dumps(coloring_to_dict(coloring), separators=(",", ":"))


def coloring_from_json(text: str) -> PackingColoring:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ColoringDocumentError(f"invalid JSON: {exc}") from None
    return coloring_from_dict(doc)
