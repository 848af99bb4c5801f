"""Shared fixtures: two small worked examples and a seeded digraph factory."""
from __future__ import annotations

import pytest

from kssp.graph import Graph
from kssp.rng import SplitMix64


@pytest.fixture
def five_node_graph() -> Graph:
    """Diamond with a detour; the four cheapest 0-to-4 paths cost 2, 3, 4, 5."""
    return Graph(
        5,
        [
            (0, 1, 2.0),
            (0, 2, 1.0),
            (0, 3, 3.0),
            (1, 2, 2.0),
            (1, 4, 1.0),
            (2, 4, 1.0),
            (3, 4, 1.0),
        ],
    )


@pytest.fixture
def six_node_graph() -> Graph:
    """Zero-cost spine 0-1-2-3-5 with two paid detours through node 4.

    The spine is the unique shortest 0-to-5 path; the cheapest path that
    differs from it leaves the spine at node 2 and costs 2.
    """
    return Graph(
        6,
        [
            (0, 1, 0.0),
            (1, 2, 0.0),
            (2, 3, 0.0),
            (3, 5, 0.0),
            (1, 4, 2.0),
            (3, 4, 1.0),
            (4, 2, 2.0),
            (2, 5, 2.0),
        ],
    )


def make_digraph(seed: int, min_nodes: int = 4, max_nodes: int = 10, density: float = 0.3) -> Graph:
    """Seeded random digraph with integer costs 0..9.

    Node count is uniform in [min_nodes, max_nodes]; every ordered pair
    gets an arc with the given probability. Fully determined by the
    arguments, so tests can reference instances by seed alone.
    """
    rng = SplitMix64(seed)
    n = min_nodes + rng.below(max_nodes - min_nodes + 1)
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.uniform(0.0, 1.0) < density:
                arcs.append((u, v, float(rng.below(10))))
    return Graph(n, arcs)


@pytest.fixture
def digraph_factory():
    return make_digraph
