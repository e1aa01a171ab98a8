# services/corpus.py
# Graph sources for the harness: the builtin isomorph-free enumerator and
# lazily parsed graph6 streams.

import logging
import sys
from functools import lru_cache
from typing import Iterator, TextIO

from config import settings
from graphs.canonical import canonical_form
from graphs.graph import Graph
from graphs.io import parse_graph6
from services.errors import GraphParseError, SourceError, UnsupportedSizeError

logger = logging.getLogger(__name__)

# Connected graphs up to isomorphism, n = 1..8
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


@lru_cache(maxsize=None)
def _level(n: int) -> tuple:
    """Canonical graph6 forms of every connected graph on n vertices, sorted by (m, form)"""
    if n == 1:
        return (canonical_form(Graph.empty(1)),)

    # Every connected graph has a vertex whose removal leaves it connected, so
    # it arises from some smaller representative plus one vertex joined to a
    # nonempty subset of it.
    forms = {}
    for smaller in _level(n - 1):
        base = parse_graph6(smaller.decode("ascii"))
        new = n - 1
        for subset in range(1, 1 << new):
            edges = list(base.edges) + [(v, new) for v in range(new) if subset >> v & 1]
            g = Graph.from_edges(n, edges)
            forms.setdefault(canonical_form(g), g.m)

    ordered = sorted(forms, key=lambda form: (forms[form], form))
    logger.info("[ENUM] n=%d classes=%d", n, len(ordered))
    return tuple(ordered)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, ordered by size then form"""
    if n < 1:
        raise SourceError(f"enumeration needs n >= 1, got {n}")
    if n > settings.enumerate_max_n:
        raise UnsupportedSizeError("enumerate_connected", n, settings.enumerate_max_n)
    for form in _level(n):
        yield parse_graph6(form.decode("ascii"))


def stream_graph6(path: str, stdin: TextIO = None) -> Iterator[tuple]:
    """
    Yield (line_number, Graph) for each non-blank line of a graph6 file.
    "-" reads stdin (the given handle, else sys.stdin). A malformed line aborts the stream.
    """
    if path == "-":
        handle, owned = stdin or sys.stdin, False
    else:
        try:
            handle, owned = open(path, encoding="ascii", errors="replace"), True
        except OSError as exc:
            raise SourceError(f"cannot open graph6 source {path}: {exc}") from exc

    try:
        for number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield number, parse_graph6(line)
            except GraphParseError as exc:
                raise GraphParseError(str(exc), line=number) from exc
    finally:
        if owned:
            handle.close()
