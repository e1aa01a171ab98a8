# graphs/families.py
# Every named construction used by the theorems, plus a small join/union
# expression language ("K1 v (2K1 + K2)") for ad-hoc graphs.
#
# Where a construction says "an arbitrary vertex" we always use the lowest
# label of the relevant block, so builds are deterministic.

import re

from graphs.graph import Graph, disjoint_union, join
from schemas.family import GraphFamily
from services.errors import ConstructionError


# ─── BASIC SHAPES ─────────────────────────────────────────────────────────────

def complete_graph(n: int) -> Graph:
    return Graph.complete(n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ConstructionError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}, center 0"""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def copies(g: Graph, count: int) -> Graph:
    result = Graph.empty(0)
    for _ in range(count):
        result = disjoint_union(result, g)
    return result


# ─── PAPER CONSTRUCTIONS ──────────────────────────────────────────────────────

def g_star_1() -> Graph:
    """K1 v (2K1 + K2), order 5"""
    return join(Graph.empty(1), disjoint_union(Graph.empty(2), Graph.complete(2)))


def g_star_2() -> Graph:
    """K1 v (K1 + 2K2), order 6"""
    return join(Graph.empty(1), disjoint_union(Graph.empty(1), copies(Graph.complete(2), 2)))


def g_one() -> Graph:
    """K1 v 3K2, order 7"""
    return join(Graph.empty(1), copies(Graph.complete(2), 3))


def g_n(n: int) -> Graph:
    """
    K_{n-5} and K1 v 2K2 joined by one edge between clique vertex 0 and
    the degree-4 center of K1 v 2K2. G_8 is the small-order exception.
    """
    if n < 8:
        raise ConstructionError(f"g-n needs n >= 8, got {n}")
    bowtie = join(Graph.empty(1), copies(Graph.complete(2), 2))
    base = disjoint_union(Graph.complete(n - 5), bowtie)
    return base.add_edge(0, n - 5)


def g_k(n: int, k: int, delta: int) -> Graph:
    """
    K_{n-(k+1)(delta+1)} with k+1 copies of K_{delta+1}; each copy's lowest
    vertex is joined by a bridge to vertex 0 of the big clique.
    """
    if k < 1 or delta < 1:
        raise ConstructionError(f"g-k needs k >= 1 and delta >= 1, got k={k}, delta={delta}")
    big = n - (k + 1) * (delta + 1)
    if big < 1:
        raise ConstructionError(
            f"g-k needs n >= (k+1)(delta+1)+1 = {(k + 1) * (delta + 1) + 1}, got {n}"
        )
    graph = disjoint_union(Graph.complete(big), copies(Graph.complete(delta + 1), k + 1))
    bridges = [(0, big + i * (delta + 1)) for i in range(k + 1)]
    return Graph.from_edges(n, list(graph.edges) + bridges)


# ─── EXPRESSIONS ──────────────────────────────────────────────────────────────

_TOKEN = re.compile(r"\s*(?:(?P<atom>[KPCSE])(?P<size>\d+)|(?P<count>\d+)|(?P<op>[()+v∨]))")


def _tokenize(text: str) -> list:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise ConstructionError(f"cannot parse expression at position {pos}: {text[pos:]!r}")
        if match.group("atom"):
            tokens.append(("atom", match.group("atom"), int(match.group("size"))))
        elif match.group("count"):
            tokens.append(("count", int(match.group("count"))))
        else:
            op = match.group("op")
            tokens.append(("op", "v" if op == "∨" else op))
        pos = match.end()
    return tokens


def _atom(letter: str, size: int) -> Graph:
    if letter == "K":
        return complete_graph(size)
    if letter == "P":
        return path_graph(size)
    if letter == "C":
        return cycle_graph(size)
    if letter == "S":
        return star_graph(size)
    return Graph.empty(size)


class _ExpressionParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take_op(self, op: str) -> bool:
        if self.peek() == ("op", op):
            self.pos += 1
            return True
        return False

    def parse(self) -> Graph:
        graph = self.expr()
        if self.peek() is not None:
            raise ConstructionError(f"unexpected token {self.peek()!r} in expression")
        return graph

    def expr(self) -> Graph:
        graph = self.union()
        while self.take_op("v"):
            graph = join(graph, self.union())
        return graph

    def union(self) -> Graph:
        graph = self.term()
        while self.take_op("+"):
            graph = disjoint_union(graph, self.term())
        return graph

    def term(self) -> Graph:
        count = 1
        token = self.peek()
        if token and token[0] == "count":
            count = token[1]
            if count < 1:
                raise ConstructionError("multiplicity must be at least 1")
            self.pos += 1
        return copies(self.primary(), count)

    def primary(self) -> Graph:
        token = self.peek()
        if token is None:
            raise ConstructionError("expression ended early")
        if token[0] == "atom":
            self.pos += 1
            return _atom(token[1], token[2])
        if self.take_op("("):
            graph = self.expr()
            if not self.take_op(")"):
                raise ConstructionError("missing ')' in expression")
            return graph
        raise ConstructionError(f"unexpected token {token!r} in expression")


def parse_expression(text: str) -> Graph:
    return _ExpressionParser(text).parse()


# ─── DISPATCH ─────────────────────────────────────────────────────────────────

def _require(family: GraphFamily, *names: str) -> None:
    missing = [name for name in names if getattr(family, name) is None]
    if missing:
        raise ConstructionError(f"family {family.tag} needs parameter(s): {', '.join(missing)}")


def build_family(family: GraphFamily) -> Graph:
    tag = family.tag
    if tag == "g-star-1":
        return g_star_1()
    if tag == "g-star-2":
        return g_star_2()
    if tag == "g-1":
        return g_one()
    if tag == "expr":
        _require(family, "expr")
        return parse_expression(family.expr)

    _require(family, "n")
    n = family.n
    if n < 1:
        raise ConstructionError(f"family {tag} needs n >= 1, got {n}")
    if tag == "complete":
        return complete_graph(n)
    if tag == "path":
        return path_graph(n)
    if tag == "cycle":
        return cycle_graph(n)
    if tag == "star":
        if n < 2:
            raise ConstructionError(f"a star needs n >= 2, got {n}")
        return star_graph(n - 1)
    if tag == "g-n":
        return g_n(n)
    _require(family, "k", "delta")
    return g_k(n, family.k, family.delta)
