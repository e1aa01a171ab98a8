# graphs/io.py
# Text formats: graph6 (short form, n <= 62), edge lists, and coloring files.
#
# graph6 layout: one header byte 63+n, then the upper triangle read column by
# column (b(0,1), b(0,2), b(1,2), b(0,3), ...) packed 6 bits per byte, most
# significant bit first, zero-padded, each group offset by 63.

from graphs.edge_coloring import EdgeColoring
from graphs.graph import Graph
from services.errors import GraphParseError, UnsupportedSizeError

GRAPH6_MAX_N  = 62
GRAPH6_HEADER = ">>graph6<<"


def _triangle_pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


# ─── GRAPH6 ───────────────────────────────────────────────────────────────────

def parse_graph6(text: str) -> Graph:
    line = text.strip()
    base = 0
    if line.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        line = line[base:]
    if not line:
        raise GraphParseError("empty graph6 string", offset=base)

    for pos, ch in enumerate(line):
        byte = ord(ch)
        if byte < 63 or byte > 126:
            raise GraphParseError(f"byte {byte} outside printable range 63..126", offset=base + pos)

    head = ord(line[0])
    if head == 126:
        raise GraphParseError("long-form header (n > 62) is not supported", offset=base)
    n = head - 63

    bit_count = n * (n - 1) // 2
    expected = 1 + (bit_count + 5) // 6
    if len(line) != expected:
        raise GraphParseError(
            f"length {len(line)} does not match {expected} expected for n={n}",
            offset=base + min(len(line), expected),
        )

    bits = []
    for ch in line[1:]:
        group = ord(ch) - 63
        bits.extend((group >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[bit_count:]):
        raise GraphParseError("nonzero padding bits", offset=base + len(line) - 1)

    edges = [pair for pair, bit in zip(_triangle_pairs(n), bits) if bit]
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSizeError("graph6 short form", g.n, GRAPH6_MAX_N)
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _triangle_pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for start in range(0, len(bits), 6):
        group = 0
        for bit in bits[start:start + 6]:
            group = group << 1 | bit
        out.append(chr(63 + group))
    return "".join(out)


# ─── EDGE LIST ────────────────────────────────────────────────────────────────

def _content_lines(text: str):
    """Yield (line_number, tokens) for non-blank lines, 1-indexed"""
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if tokens:
            yield number, tokens


def _int_token(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {token!r}", line=number) from None


def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphParseError("missing 'n <count>' header", line=1)
    number, header = lines[0]
    if len(header) != 2 or header[0] != "n":
        raise GraphParseError("expected header 'n <count>'", line=number)
    n = _int_token(header[1], number)
    if n < 0:
        raise GraphParseError(f"negative vertex count {n}", line=number)

    seen = set()
    edges = []
    for number, tokens in lines[1:]:
        if len(tokens) != 2:
            raise GraphParseError("expected 'u v'", line=number)
        u, v = (_int_token(t, number) for t in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex out of range 0..{n - 1}", line=number)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=number)
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise GraphParseError(f"duplicate edge {pair[0]} {pair[1]}", line=number)
        seen.add(pair)
        edges.append(pair)
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Auto-detect: edge list when the first non-blank line is 'n <count>', else graph6"""
    for _, tokens in _content_lines(text):
        if tokens[0] == "n":
            return parse_edge_list(text)
        if len(tokens) != 1:
            raise GraphParseError("expected one graph6 string or an edge list", line=1)
        return parse_graph6(tokens[0])
    raise GraphParseError("no graph in input", line=1)


# ─── COLORINGS ────────────────────────────────────────────────────────────────

def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphParseError("missing 'k <K>' header", line=1)
    number, header = lines[0]
    if len(header) != 2 or header[0] != "k":
        raise GraphParseError("expected header 'k <K>'", line=number)
    k = _int_token(header[1], number)
    if k < 1:
        raise GraphParseError(f"color count must be at least 1, got {k}", line=number)

    colors = [0] * g.m
    for number, tokens in lines[1:]:
        if len(tokens) != 3:
            raise GraphParseError("expected 'u v c'", line=number)
        u, v, c = (_int_token(t, number) for t in tokens)
        index = g.edge_index(u, v) if 0 <= u < g.n and 0 <= v < g.n else None
        if index is None:
            raise GraphParseError(f"{u} {v} is not an edge of the graph", line=number)
        if colors[index]:
            raise GraphParseError(f"edge {u} {v} colored twice", line=number)
        if not 1 <= c <= k:
            raise GraphParseError(f"color {c} outside 1..{k}", line=number)
        colors[index] = c

    missing = [g.edges[i] for i, c in enumerate(colors) if not c]
    if missing:
        u, v = missing[0]
        raise GraphParseError(
            f"{len(missing)} edge(s) left uncolored, first {u} {v}",
            line=lines[-1][0],
        )
    return EdgeColoring(k, tuple(colors))


def emit_coloring(g: Graph, coloring: EdgeColoring) -> str:
    lines = [f"k {coloring.k}"] + [f"{u} {v} {c}" for u, v, c in coloring.as_triples(g)]
    return "\n".join(lines) + "\n"
