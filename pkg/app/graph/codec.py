"""graph6 and plain edge-list codecs.

graph6 stores n in a size header (one byte for n <= 62, ``~`` plus three bytes
up to 258047) followed by the upper triangle of the adjacency matrix in column
order, six bits per printable byte (value + 63), zero padded.
"""

from typing import Iterable, Iterator, TextIO

from app.exceptions import (
    EdgeListParseError,
    Graph6BodyError,
    Graph6HeaderError,
    Graph6SizeError,
    Graph6TruncatedError,
)
from app.graph.core import MAX_VERTICES, Graph


_OFFSET = 63
_LONG_FORM = 126


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + _OFFSET])
    return bytes(
        [_LONG_FORM, (n >> 12 & 63) + _OFFSET, (n >> 6 & 63) + _OFFSET, (n & 63) + _OFFSET]
    )


def to_graph6(g: Graph) -> str:
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + _OFFSET)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + _OFFSET)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    line = text.strip()
    if not line:
        raise Graph6HeaderError("empty graph6 line")
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6HeaderError(f"non-ASCII characters in graph6 line {line!r}")

    if not _OFFSET <= data[0] <= _LONG_FORM:
        raise Graph6HeaderError(f"invalid size byte {chr(data[0])!r}")
    if data[0] == _LONG_FORM:
        if len(data) > 1 and data[1] == _LONG_FORM:
            raise Graph6SizeError("eight-byte size header exceeds the vertex limit")
        header = data[1:4]
        if len(header) < 3 or any(not _OFFSET <= c <= _LONG_FORM for c in header):
            raise Graph6HeaderError(f"malformed long size header in {line!r}")
        n = (header[0] - _OFFSET) << 12 | (header[1] - _OFFSET) << 6 | (header[2] - _OFFSET)
        body = data[4:]
    else:
        n = data[0] - _OFFSET
        body = data[1:]

    if n > MAX_VERTICES:
        raise Graph6SizeError(f"graph has {n} vertices, limit is {MAX_VERTICES}")

    needed = (n * (n - 1) // 2 + 5) // 6
    if len(body) < needed:
        raise Graph6TruncatedError(f"expected {needed} body bytes, got {len(body)}")
    if len(body) > needed:
        raise Graph6BodyError(f"{len(body) - needed} trailing bytes after the body")
    if any(not _OFFSET <= c <= _LONG_FORM for c in body):
        raise Graph6BodyError(f"invalid body character in {line!r}")

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - _OFFSET) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in lines:
        if line.strip():
            yield from_graph6(line)


def write_graph6_lines(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(to_graph6(g) + "\n")
        count += 1
    return count


def to_edge_list(g: Graph) -> str:
    """Render ``n m`` followed by one ``u v`` line per edge."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise EdgeListParseError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as e:
        raise EdgeListParseError(f"malformed edge list: {e}") from e
    if len(edges) != m:
        raise EdgeListParseError(f"header announces {m} edges, found {len(edges)}")
    if not 0 <= n <= MAX_VERTICES:
        raise EdgeListParseError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise EdgeListParseError(f"invalid edge ({u}, {v}) for {n} vertices")
    return Graph.from_edge_list(n, edges)
