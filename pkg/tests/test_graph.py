import pytest

from graphs.families import complete_graph, g_one, g_star_1
from graphs.graph import Graph, basic_stats, disjoint_union, join
from services.errors import ContractError


def test_edges_are_normalized_and_sorted():
    g = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.edge_index(2, 1) == 1
    assert g.edge_index(0, 2) is None


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)]])
def test_from_edges_rejects_bad_input(edges):
    with pytest.raises(ContractError):
        Graph.from_edges(3, edges)


def test_disjoint_union():
    k2 = complete_graph(2)
    two = disjoint_union(k2, k2)
    assert (two.n, two.m) == (4, 2)
    assert not two.is_connected()
    assert disjoint_union(k2, Graph.empty(0)) == k2
    three = disjoint_union(two, k2)
    assert (three.n, three.m) == (6, 3)


def test_join():
    assert join(complete_graph(2), complete_graph(3)) == complete_graph(5)
    assert (g_one().n, g_one().m) == (7, 9)
    assert (g_star_1().n, g_star_1().m) == (5, 5)


def test_basic_stats():
    assert basic_stats(g_one()) == (7, 9, 2, 6, True, False)
    assert basic_stats(complete_graph(5)) == (5, 10, 4, 4, True, True)
    assert not basic_stats(disjoint_union(complete_graph(2), complete_graph(2))).connected


def test_remove_vertex_shifts_labels():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.remove_vertex(1).edges == ((1, 2),)
    assert g.remove_vertex(3).edges == ((0, 1), (1, 2))


def test_remove_and_add_edge():
    g = complete_graph(4)
    h = g.remove_edge(g.edge_index(0, 3))
    assert h.m == 5 and not h.has_edge(0, 3)
    assert h.add_edge(3, 0) == g


def test_relabel_and_degrees():
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    h = g.relabel([1, 0, 2])
    assert h.edges == ((0, 1), (1, 2))
    assert h.degrees() == [1, 2, 1]


def test_tree_and_connectivity_edges_cases():
    assert Graph.empty(0).is_connected()
    assert Graph.empty(1).is_tree()
    assert not Graph.empty(2).is_connected()
    assert complete_graph(4).complement_size() == 0
