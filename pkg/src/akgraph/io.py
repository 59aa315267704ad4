"""graph6 (short form) and plain edge-list codecs."""
from __future__ import annotations

from .exceptions import EdgeListError, Graph6Error, Graph6LongFormError, GraphError
from .graph import Graph

GRAPH6_MAX_ORDER = 62


def parse_graph6(line):
    """Decode one graph6 line (order <= 62).

    A leading ``>>graph6<<`` header and surrounding whitespace are ignored.
    Padding bits in the last byte are ignored, as nauty does.
    """
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        raise Graph6LongFormError("graph6 long form (order > 62) is not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated graph6: need {need} data bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data in graph6: expected {need} data bytes, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def encode_graph6(g):
    """Encode ``g`` as a graph6 line (no trailing newline)."""
    n = g.n
    if n > GRAPH6_MAX_ORDER:
        raise Graph6LongFormError(f"order {n} > {GRAPH6_MAX_ORDER} needs the long form")
    adj = g.masks
    bits = [adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text):
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Blank lines and ``#`` comments are skipped.  A literal ``" / "`` may be
    used in place of newlines, so ``"2 1 / 0 1"`` is K2.
    """
    lines = []
    for raw in text.replace("/", "\n").splitlines():
        raw = raw.split("#", 1)[0].strip()
        if raw:
            lines.append(raw)
    if not lines:
        raise EdgeListError("empty edge list")
    try:
        header = [int(x) for x in lines[0].split()]
    except ValueError as exc:
        raise EdgeListError(f"bad header {lines[0]!r}") from exc
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise EdgeListError(f"header must be 'n m', got {lines[0]!r}")
    n, m = header
    if len(lines) - 1 != m:
        raise EdgeListError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    seen = set()
    for raw in lines[1:]:
        parts = raw.split()
        try:
            u, v = (int(x) for x in parts)
        except ValueError as exc:
            raise EdgeListError(f"bad edge line {raw!r}") from exc
        if u == v:
            raise EdgeListError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge ({u}, {v}) out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    try:
        return Graph(n, edges)
    except GraphError as exc:  # pragma: no cover - validated above
        raise EdgeListError(str(exc)) from exc


def format_edge_list(g):
    return "\n".join([f"{g.n} {g.size}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"
