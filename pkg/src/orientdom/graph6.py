"""graph6 encoding and decoding.

The format packs the upper triangle of the adjacency matrix column by column
(``(0,1), (0,2), (1,2), (0,3), ...``) into big-endian 6-bit groups, each
offset by 63.  The vertex count is one byte for n <= 62, or ``~`` followed
by three bytes for n <= 258047.
"""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph

MAX_N = 258047
_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0 or n > MAX_N:
        raise ValueError(f"graph6 supports 0 <= n <= {MAX_N}, got {n}")
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    n = g.n
    adj = g.adj
    bitstream = []
    for v in range(1, n):
        row = adj[v]
        for u in range(v):
            bitstream.append(row >> u & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    out = [_encode_n(n)]
    for i in range(0, len(bitstream), 6):
        val = 0
        for b in bitstream[i : i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER) :]
    if not line:
        raise ParseError("empty graph6 string", 0)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range", i)
    if line[0] != "~":
        n, pos = ord(line[0]) - 63, 1
    else:
        if len(line) >= 2 and line[1] == "~":
            raise ParseError("6-byte size form (n > 258047) is not supported", 1)
        if len(line) < 4:
            raise ParseError("truncated extended size header", len(line))
        n = 0
        for ch in line[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
        if n <= 62:
            raise ParseError("extended size header used for n <= 62", 1)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = line[pos:]
    if len(payload) != need:
        raise ParseError(f"expected {need} payload bytes for n={n}, got {len(payload)}", pos + min(len(payload), need))
    edges = []
    k = 0
    u, v = 0, 1
    for idx, ch in enumerate(payload):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if val >> shift & 1:
                    raise ParseError("nonzero padding bits", pos + idx)
                continue
            if val >> shift & 1:
                edges.append((u, v))
            k += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    edges.sort()
    return Graph(n, tuple(edges))
