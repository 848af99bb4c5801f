"""Seeded generators for grid benchmark instances.

A rows x cols grid has one node per cell, id ``row * cols + col``, and a
pair of antiparallel arcs per neighboring cell pair (4-neighborhood).
Each arc draws its own independent uniform cost, so the two directions
of an edge differ.

Draw order is part of the format and must not change: cells are visited
in row-major order, each cell first emits its east edge then its south
edge, and each edge emits the forward arc before the backward arc, one
cost draw per arc. This makes instances reproducible from (rows, cols,
cost bounds, seed) alone.
"""
from __future__ import annotations

from .graph import Graph, GraphError
from .rng import SplitMix64


def gen_grid(
    rows: int,
    cols: int,
    cost_low: float = 0.0,
    cost_high: float = 10.0,
    seed: int = 0,
) -> Graph:
    """Build a seeded grid instance.

    Arc count is ``2 * (rows * (cols - 1) + cols * (rows - 1))``.
    """
    if rows < 1 or cols < 1:
        raise GraphError("grid needs at least one row and one column")
    if not cost_low <= cost_high:
        raise GraphError("cost_low must not exceed cost_high")
    rng = SplitMix64(seed)
    arcs: list[tuple[int, int, float]] = []
    for r in range(rows):
        base = r * cols
        for c in range(cols):
            u = base + c
            if c + 1 < cols:
                v = u + 1
                arcs.append((u, v, rng.uniform(cost_low, cost_high)))
                arcs.append((v, u, rng.uniform(cost_low, cost_high)))
            if r + 1 < rows:
                v = u + cols
                arcs.append((u, v, rng.uniform(cost_low, cost_high)))
                arcs.append((v, u, rng.uniform(cost_low, cost_high)))
    return Graph(rows * cols, arcs)


def sample_pairs(rng: SplitMix64, node_count: int, count: int) -> list[tuple[int, int]]:
    """Draw ``count`` source/target pairs, each two distinct uniform nodes."""
    return [rng.distinct_pair(node_count) for _ in range(count)]
