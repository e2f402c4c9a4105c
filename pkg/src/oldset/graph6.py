"""Header-less graph6 records.

One record encodes one simple graph: a size prefix, then the upper
triangle of the adjacency matrix in column-major order ((0,1), (0,2),
(1,2), (0,3), ...), packed big-endian six bits per printable byte with
offset 63 and zero padding.  The size prefix is a single byte n+63 for
n <= 62, '~' plus three bytes for n <= 258047, and '~~' plus six bytes
beyond that; each size must use its shortest form.  Parsing is strict:
anything malformed raises :class:`GraphFormatError` instead of guessing.
"""

from __future__ import annotations

from .graphs import Graph, _g6_bytes

__all__ = ["GraphFormatError", "parse_graph6", "to_graph6"]


class GraphFormatError(ValueError):
    """A graph6 record that cannot be decoded."""


def _fail(record: str, reason: str) -> GraphFormatError:
    shown = record if len(record) <= 40 else record[:37] + "..."
    return GraphFormatError(f"bad graph6 record {shown!r}: {reason}")


def parse_graph6(record: str) -> Graph:
    """Decode one graph6 record, tolerating only a trailing newline.

    Rejects bytes outside the printable range 63..126, non-minimal size
    prefixes, truncated or overlong data sections, and nonzero padding
    bits.
    """
    text = record.rstrip("\r\n")
    if not text:
        raise _fail(record, "empty record")
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError:
        raise _fail(text, "non-ASCII byte") from None
    for byte in data:
        if not 63 <= byte <= 126:
            raise _fail(text, f"byte {byte} outside the graph6 range 63..126")

    if data[0] != 126:
        n = data[0] - 63
        body = data[1:]
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise _fail(text, "truncated 3-byte size prefix")
        n = 0
        for byte in data[1:4]:
            n = n << 6 | byte - 63
        if n <= 62:
            raise _fail(text, f"order {n} must use the 1-byte size prefix")
        body = data[4:]
    else:
        if len(data) < 8:
            raise _fail(text, "truncated 6-byte size prefix")
        n = 0
        for byte in data[2:8]:
            n = n << 6 | byte - 63
        if n <= 258047:
            raise _fail(text, f"order {n} must use a shorter size prefix")
        body = data[8:]

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise _fail(
            text, f"order {n} needs {expected} data bytes, found {len(body)}"
        )

    rows = [0] * n
    pos = 0
    for col in range(1, n):
        for row in range(col):
            bit = body[pos // 6] - 63 >> 5 - pos % 6 & 1
            pos += 1
            if bit:
                rows[col] |= 1 << row
                rows[row] |= 1 << col
    if nbits % 6:
        padding = body[-1] - 63 & (1 << 6 - nbits % 6) - 1
        if padding:
            raise _fail(text, "nonzero padding bits")
    return Graph(n, rows)


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 record (no trailing newline).

    Round-trips: parse_graph6(to_graph6(g)) == g, and re-encoding a
    parsed record reproduces it byte for byte.
    """
    return _g6_bytes(g.n, g.adj).decode("ascii")
