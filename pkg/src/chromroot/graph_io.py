"""Reading and writing graphs: graph6 (McKay) and a plain edge-list format.

Edge-list text::

    # comment lines start with '#'
    n m
    u v
    ...
"""

from chromroot.errors import GraphError
from chromroot.graph import Graph


def _encode_n(n):
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> sh) & 63) + 63 for sh in (12, 6, 0)]
    if n <= 68719476735:
        return [126, 126] + [((n >> sh) & 63) + 63 for sh in (30, 24, 18, 12, 6, 0)]
    raise GraphError(f"graph6 cannot encode n={n}")


def _decode_n(data):
    if not data:
        raise GraphError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    width = 8 if len(data) >= 2 and data[1] == 126 else 4
    if len(data) < width:
        raise GraphError("truncated graph6 size field")
    chunk = data[width - 6:width] if width == 8 else data[1:4]
    n = 0
    for byte in chunk:
        n = n << 6 | (byte - 63)
    return n, width


def to_graph6(G):
    """Encode ``G`` as a graph6 string (no header, no newline)."""
    out = _encode_n(G.n)
    bits = []
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def parse_graph6(text):
    """Decode one graph6 string; an optional ``>>graph6<<`` header is allowed."""
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if text.startswith(":") or text.startswith("&"):
        raise GraphError("sparse6/digraph6 strings are not graph6")
    data = text.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise GraphError(f"invalid graph6 character in {text!r}")
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = data[pos:]
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_lines(lines):
    """Yield graphs from an iterable of graph6 lines, skipping blanks."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def parse_edge_list(text):
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise GraphError("edge list is empty")
    try:
        n, m = (int(tok) for tok in rows[0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"edge list header promises {m} edges, found {len(pairs)}")
    return Graph(n, pairs)


def to_edge_list(G):
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"
