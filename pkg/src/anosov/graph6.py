"""graph6 encoder and decoder (bit-exact with the format used by nauty)."""

from __future__ import annotations

from .errors import ParseError
from .graph import SimpleGraph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ParseError(f"cannot encode negative vertex count {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ParseError(f"vertex count {n} too large for graph6")


def encode(g: SimpleGraph, header: bool = False) -> str:
    out = bytearray(HEADER.encode() if header else b"")
    out += _encode_n(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode(text: str | bytes) -> SimpleGraph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    start = len(HEADER) if data.startswith(HEADER.encode()) else 0
    pos = start
    if pos >= len(data):
        raise ParseError("empty graph6 string", pos)
    for i, byte in enumerate(data[start:], start):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside the graph6 range 63..126", i)
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        width = 6 if pos + 1 < len(data) and data[pos + 1] == 126 else 3
        skip = 2 if width == 6 else 1
        chunk = data[pos + skip : pos + skip + width]
        if len(chunk) < width:
            raise ParseError("truncated vertex count", len(data))
        n = 0
        for byte in chunk:
            n = n << 6 | (byte - 63)
        pos += skip + width
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise ParseError(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(body)}",
            pos + min(len(body), nbytes),
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] - 63 >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need % 6 and (body[-1] - 63) & ((1 << (6 - need % 6)) - 1):
        raise ParseError("nonzero padding bits", len(data) - 1)
    return SimpleGraph(n, tuple(rows))
