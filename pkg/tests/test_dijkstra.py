"""Scalar shortest path search: masks, bounds, and A* potentials."""
from __future__ import annotations

from math import inf

from kssp.dijkstra import reverse_distances, shortest_path
from kssp.graph import Graph, Mask
from kssp.gridgen import gen_grid


def test_shortest_path_on_example(five_node_graph):
    path, pops = shortest_path(five_node_graph, 0, 4)
    assert path is not None
    assert path.arcs == (1, 5)
    assert path.cost == 2.0
    assert 0 < pops <= five_node_graph.node_count


def test_no_path_returns_none():
    g = Graph(3, [(0, 1, 1.0)])
    path, _ = shortest_path(g, 0, 2)
    assert path is None


def test_source_equals_target_is_the_empty_path(five_node_graph):
    path, pops = shortest_path(five_node_graph, 2, 2)
    assert path is not None
    assert path.arcs == ()
    assert path.cost == 0.0
    assert pops == 1


def test_mask_reroutes_and_reset_restores(five_node_graph):
    m = Mask(five_node_graph)
    m.delete_node(2)
    path, _ = shortest_path(five_node_graph, 0, 4, mask=m)
    assert path.arcs == (0, 4)
    m.delete_arc(4)
    path, _ = shortest_path(five_node_graph, 0, 4, mask=m)
    assert path.arcs == (2, 6)
    m.reset()
    path, _ = shortest_path(five_node_graph, 0, 4, mask=m)
    assert path.arcs == (1, 5)


def test_masked_endpoints_fail_fast(five_node_graph):
    m = Mask(five_node_graph)
    m.delete_node(0)
    assert shortest_path(five_node_graph, 0, 4, mask=m) == (None, 0)
    m.reset()
    m.delete_node(4)
    assert shortest_path(five_node_graph, 0, 4, mask=m) == (None, 0)


def test_bound_is_exclusive(five_node_graph):
    path, _ = shortest_path(five_node_graph, 0, 4, bound=2.0)
    assert path is None
    path, _ = shortest_path(five_node_graph, 0, 4, bound=2.0000001)
    assert path is not None
    assert path.cost == 2.0


def test_reverse_distances_match_forward_searches(digraph_factory):
    for seed in range(40):
        g = digraph_factory(seed)
        t = g.node_count - 1
        rev = reverse_distances(g, t)
        assert rev[t] == 0.0
        for u in range(g.node_count):
            path, _ = shortest_path(g, u, t)
            if path is None:
                assert rev[u] == inf
            else:
                assert rev[u] == path.cost


def test_potential_preserves_answers_and_saves_pops():
    g = gen_grid(20, 20, seed=4)
    t = g.node_count - 1
    rev = reverse_distances(g, t)
    plain, plain_pops = shortest_path(g, 0, t)
    guided, guided_pops = shortest_path(g, 0, t, potential=rev)
    assert guided.arcs == plain.arcs
    assert guided.cost == plain.cost
    assert guided_pops <= plain_pops


def test_potential_stays_admissible_under_masking():
    g = gen_grid(10, 10, seed=8)
    t = g.node_count - 1
    rev = reverse_distances(g, t)
    m = Mask(g)
    for a in range(0, g.arc_count, 7):
        m.delete_arc(a)
    plain, _ = shortest_path(g, 0, t, mask=m)
    guided, _ = shortest_path(g, 0, t, mask=m, potential=rev)
    assert (plain is None) == (guided is None)
    if plain is not None:
        assert guided.cost == plain.cost
        assert guided.arcs == plain.arcs


def test_unreachable_source_potential_short_circuits():
    g = Graph(3, [(0, 1, 1.0), (2, 1, 1.0)])
    rev = reverse_distances(g, 1)
    assert rev == [1.0, 0.0, 1.0]
    g2 = Graph(3, [(1, 0, 1.0), (1, 2, 1.0)])
    rev2 = reverse_distances(g2, 2)
    assert rev2[0] == inf
    assert shortest_path(g2, 0, 2, potential=rev2) == (None, 0)


def test_bound_combines_with_potential(five_node_graph):
    rev = reverse_distances(five_node_graph, 4)
    path, _ = shortest_path(five_node_graph, 0, 4, potential=rev, bound=2.0)
    assert path is None
    path, _ = shortest_path(five_node_graph, 0, 4, potential=rev, bound=2.5)
    assert path.cost == 2.0
