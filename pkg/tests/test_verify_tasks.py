import time

import pytest

from graphs.families import g_n
from graphs.graph import Graph
from services.coloring import deletion_certificate, dirac_traceable
from workers.verify_tasks import _pc_at_most, _pc_is_two


def cocktail_party(n):
    """K_n minus a perfect matching"""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, [(u, v) for u, v in edges if not (u % 2 == 0 and v == u + 1)])


# ─── SEARCH-CAP OVERFLOW ──────────────────────────────────────────────────────

@pytest.mark.parametrize("n", [13, 21])
def test_overflowing_gn_is_undecided_quickly(n):
    started = time.monotonic()
    claim = _pc_at_most(g_n(n), 2)
    assert time.monotonic() - started < 30
    assert claim.holds is None
    assert claim.note.startswith("undecided")


def test_dirac_settles_dense_graphs_past_every_cap():
    g = cocktail_party(24)
    assert g.m > 28 and g.n > 20
    assert dirac_traceable(g)
    claim = _pc_at_most(g, 2)
    assert claim.holds is True and claim.note == "dirac-traceable"
    assert _pc_is_two(g).statement == "pc=2"


def test_deletion_certificate_stays_one_level_deep():
    started = time.monotonic()
    assert deletion_certificate(g_n(14)) is None
    assert time.monotonic() - started < 30


def test_searchable_graphs_never_fall_back():
    claim = _pc_at_most(g_n(8), 2)
    assert claim.holds is False
    assert not claim.note.startswith("undecided")
