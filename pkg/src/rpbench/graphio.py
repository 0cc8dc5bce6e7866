"""Text format for instances.

    p rp <n> <m> <s> <t> <M>
    e <u> <v> <w>            (m of these)

Blank lines and `#` comments are ignored; a trailing `#` comment on a record
line is allowed too.
"""
from __future__ import annotations

from .errors import IdOutOfRangeError, MalformedHeaderError
from .graph import Graph


def parse_graph(text: str) -> tuple[Graph, int, int]:
    header = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if parts[:2] != ["p", "rp"] or len(parts) != 7:
                raise MalformedHeaderError(
                    f"line {lineno}: expected 'p rp n m s t M', got {raw!r}")
            try:
                header = tuple(int(x) for x in parts[2:])
            except ValueError:
                raise MalformedHeaderError(
                    f"line {lineno}: non-integer header field in {raw!r}")
        elif parts[0] == "e":
            if len(parts) != 4:
                raise MalformedHeaderError(
                    f"line {lineno}: expected 'e u v w', got {raw!r}")
            try:
                u, v, w = (int(x) for x in parts[1:])
            except ValueError:
                raise MalformedHeaderError(
                    f"line {lineno}: non-integer edge field in {raw!r}")
            edges.append((u, v, w))
        else:
            raise MalformedHeaderError(
                f"line {lineno}: unknown record type {parts[0]!r}")
    if header is None:
        raise MalformedHeaderError("missing 'p rp' header line")
    n, m, s, t, bound = header
    if len(edges) != m:
        raise MalformedHeaderError(
            f"header declares {m} edges, file has {len(edges)}")
    g = Graph(n, edges, bound)
    for name, node in (("s", s), ("t", t)):
        if not 0 <= node < n:
            raise IdOutOfRangeError(f"{name}={node} outside 0..{n - 1}")
    return g, s, t


def write_graph(g: Graph, s: int, t: int) -> str:
    lines = [f"p rp {g.n} {g.edge_count} {s} {t} {g.weight_bound}"]
    lines.extend(f"e {u} {v} {w}" for u, v, w in g.edges())
    return "\n".join(lines) + "\n"
