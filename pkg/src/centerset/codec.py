"""graph6 interchange, DOT and edge-list exports, and JSON reports."""

from __future__ import annotations

import dataclasses
import enum
import json
from collections.abc import Iterable, Iterator
from fractions import Fraction
from typing import TextIO

from .errors import CodecError, OrderTooLarge
from .graph import Graph, build_graph

GRAPH6_MAX_ORDER = 258047
_HEADER = ">>graph6<<"


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def graph6_encode(g: Graph) -> str:
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise OrderTooLarge(f"graph6 supports up to {GRAPH6_MAX_ORDER} vertices, got {n}")
    rows = g.rows
    out = bytearray(_encode_order(n))
    acc = nbits = 0
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_length(n: int) -> int:
    """Encoded length in bytes for ``n <= 62``."""
    return 1 + -(-n * (n - 1) // 12)


def graph6_decode(record: str | bytes) -> Graph:
    if isinstance(record, str):
        try:
            data = record.encode("ascii")
        except UnicodeEncodeError as exc:
            raise CodecError("non-ASCII character", exc.start) from None
    else:
        data = bytes(record)
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(_HEADER.encode()):
        base = len(_HEADER)
        data = data[base:]
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise CodecError(f"byte value {c} outside 63..126", base + i)
    if not data:
        raise CodecError("empty record", base)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise CodecError("orders above 258047 are not supported", base + 1)
        if len(data) < 4:
            raise CodecError("truncated extended order header", base + len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n == 0:
        raise CodecError("graph has no vertices", base)
    need = -(-n * (n - 1) // 12)
    body = data[pos:]
    if len(body) < need:
        raise CodecError(f"truncated body: expected {need} bytes, got {len(body)}", base + len(data))
    if len(body) > need:
        raise CodecError("trailing bytes after body", base + pos + need)
    rows = [0] * n
    idx = 0
    total = n * (n - 1) // 2
    j, i = 1, 0
    for off, c in enumerate(body):
        v = c - 63
        for shift in range(5, -1, -1):
            bit = v >> shift & 1
            if idx >= total:
                if bit:
                    raise CodecError("nonzero padding bits", base + pos + off)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph(n, rows)


def read_graph6(stream: Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in stream:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def dot_export(g: Graph, highlight: Iterable[int] | None = None, name: str = "G") -> str:
    marked = set(highlight or ())
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        if v in marked:
            lines.append(f'  {v} [style=filled, fillcolor="gold"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def edge_list_export(g: Graph) -> str:
    lines = [f"{g.order} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def edge_list_parse(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-indexed)."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise CodecError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise CodecError(f"line {lineno}: expected two integers, got {line!r}") from None
    if not rows:
        raise CodecError("empty edge list")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise CodecError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def read_graph_text(text: str, fmt: str = "auto") -> Graph:
    """Read one graph from graph6 or edge-list text."""
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        fmt = "edges" if len(first.split()) == 2 else "graph6"
    if fmt == "edges":
        return edge_list_parse(text)
    if fmt == "graph6":
        graphs = list(read_graph6(text.splitlines()))
        if len(graphs) != 1:
            raise CodecError(f"expected exactly one graph6 record, found {len(graphs)}")
        return graphs[0]
    raise ValueError(f"unknown graph format {fmt!r}")


def to_jsonable(value: object) -> object:
    """Convert reports, profiles and graphs to plain JSON-compatible data."""
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Graph):
        return {"order": value.order, "graph6": graph6_encode(value), "edges": [list(e) for e in value.edges()]}
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        out = {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
        # expose computed summaries that live on properties
        for attr in ("ok",):
            if isinstance(getattr(type(value), attr, None), property):
                out[attr] = getattr(value, attr)
        return out
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "item") and callable(value.item):  # numpy scalars
        return value.item()
    return value


def report_json(value: object, indent: int | None = None) -> str:
    return json.dumps(to_jsonable(value), indent=indent)


def write_report(value: object, stream: TextIO) -> None:
    stream.write(report_json(value, indent=2))
    stream.write("\n")
