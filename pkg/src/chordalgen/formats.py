"""Text encodings for graphs: graph6 and 1-indexed edge lists."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import GraphError, LabeledGraph


def _size_header(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise GraphError("graph6 supports at most 258047 vertices here")


def to_graph6(g: LabeledGraph) -> str:
    """graph6 of g with vertices taken in sorted order."""
    n = g.order
    rows = g.rows
    bits = [rows[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return _size_header(n) + body


def from_graph6(text: str) -> LabeledGraph:
    """Decode one graph6 string onto the vertex set [n]."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(ch) - 63 for ch in s]
    if any(c < 0 or c > 63 for c in codes):
        raise GraphError("invalid graph6 character")
    if codes[0] == 63:
        if len(codes) < 4:
            raise GraphError("truncated graph6 header")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        data = codes[4:]
    else:
        n = codes[0]
        data = codes[1:]
    need = n * (n - 1) // 2
    if len(data) != (need + 5) // 6:
        raise GraphError(f"graph6 body has {len(data)} bytes, expected {(need + 5) // 6}")
    bits = [(c >> (5 - k)) & 1 for c in data for k in range(6)]
    edges = []
    b = 0
    for j in range(1, n):
        for i in range(j):
            if bits[b]:
                edges.append((i + 1, j + 1))
            b += 1
    if any(bits[need:]):
        raise GraphError("nonzero graph6 padding")
    return LabeledGraph(range(1, n + 1), edges)


def to_edge_list(g: LabeledGraph) -> str:
    """One "u v" line per edge, then a terminating blank line."""
    return "".join(f"{u} {v}\n" for u, v in sorted(g.edges)) + "\n"


def read_edge_lists(stream: Iterable[str], n: int) -> Iterator[LabeledGraph]:
    """Parse blank-line-terminated edge lists on the vertex set [n]."""
    edges: list[tuple[int, int]] = []
    started = False
    for line in stream:
        line = line.strip()
        if not line:
            # every blank line closes one graph, so an edgeless graph is a lone blank line
            yield LabeledGraph(range(1, n + 1), edges)
            edges, started = [], False
            continue
        u, v = map(int, line.split())
        edges.append((u, v))
        started = True
    if started:
        yield LabeledGraph(range(1, n + 1), edges)


def write_graph(g: LabeledGraph, fmt: str, out: TextIO) -> None:
    if fmt == "graph6":
        out.write(to_graph6(g) + "\n")
    elif fmt == "edges":
        out.write(to_edge_list(g))
    else:
        raise ValueError(f"unknown format {fmt!r}")
