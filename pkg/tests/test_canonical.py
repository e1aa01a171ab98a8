import itertools

import networkx as nx
import pytest

from graphs.canonical import canonical_form, canonical_graph, refine_cells
from graphs.families import complete_graph, g_one, path_graph
from graphs.graph import Graph
from services.errors import UnsupportedSizeError
from tests.oracles import random_connected, to_nx


def test_relabelling_invariance_on_p3():
    assert canonical_form(path_graph(3)) == canonical_form(Graph.from_edges(3, [(1, 0), (0, 2)]))


def test_k3_and_p3_differ():
    assert canonical_form(complete_graph(3)) != canonical_form(path_graph(3))


def test_many_relabellings_give_one_form(rng):
    g = random_connected(rng, 7)
    forms = set()
    for _ in range(1000):
        order = list(range(7))
        rng.shuffle(order)
        forms.add(canonical_form(g.relabel(order)))
    assert len(forms) == 1


def test_forms_separate_exactly_the_isomorphism_classes_on_five_vertices():
    pairs = list(itertools.combinations(range(5), 2))
    by_form = {}
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(5, (p for i, p in enumerate(pairs) if mask >> i & 1))
        by_form.setdefault(canonical_form(g), []).append(g)
    assert len(by_form) == 34
    for graphs in by_form.values():
        first = to_nx(graphs[0])
        assert all(nx.is_isomorphic(first, to_nx(h)) for h in graphs[1:])


def test_canonical_graph_encodes_to_the_form():
    g = g_one()
    assert canonical_graph(g).m == g.m
    assert canonical_form(canonical_graph(g)) == canonical_form(g)


def test_refinement_separates_the_center_of_g1():
    cells = refine_cells(g_one())
    assert cells.count(cells[0]) == 1


def test_size_cap():
    with pytest.raises(UnsupportedSizeError):
        canonical_form(Graph.empty(11))
