"""graph6 encoding (printable upper-triangle adjacency, six bits per byte)."""
from __future__ import annotations

from .graph import Graph, GraphError, MAX_ORDER

_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    # 18-bit form; the 36-bit form is never needed below 65 vertices
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_order(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(ch) - 63 for ch in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"character outside the graph6 range in {s!r}")
    if codes[0] < 63:
        n, pos = codes[0], 1
    else:
        if len(codes) < 4:
            raise Graph6Error(f"truncated order header in {s!r}")
        if codes[1] == 63:
            raise Graph6Error(f"order too large in {s!r}")
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        pos = 4
        if n < 63:
            raise Graph6Error(f"non-minimal order header in {s!r}")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = codes[pos:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(body)} in {s!r}")
    pad = nbytes * 6 - nbits
    if body and body[-1] & ((1 << pad) - 1):
        raise Graph6Error(f"nonzero padding bits in {s!r}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6]
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph.trusted(n, tuple(adj))
