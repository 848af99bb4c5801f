"""Immutable directed graph with nonnegative arc costs, plus path primitives.

Nodes are dense integer ids ``0 .. node_count-1``. Arcs are integer ids
into parallel tail/head/cost arrays, so parallel arcs are first-class and
every path is a sequence of arc ids rather than node ids. Forward and
reverse adjacency lists are both kept because the solvers walk arcs in
either direction.

The graph itself is never mutated. Temporary deletions are expressed
through a :class:`Mask` overlay whose epoch counter makes clearing all
deletions an O(1) operation.

Costs are IEEE float64 and compared exactly. Whenever a cost of a path is
computed it is folded left to right over the arc sequence, so any two
components that compute the cost of the same arc sequence obtain the
identical float and "equal cost" is well defined across the code base.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


class PathError(ValueError):
    """Raised when an arc sequence is not a path in the given graph."""


class Graph:
    """Directed graph, frozen after construction.

    Args:
        node_count: number of nodes; ids are ``0 .. node_count-1``.
        arcs: iterable of ``(tail, head, cost)`` triples. Arc ids are
            assigned in iteration order.
    """

    __slots__ = ("node_count", "arc_tail", "arc_head", "arc_cost", "out_arcs", "in_arcs")

    def __init__(self, node_count: int, arcs: Iterable[tuple[int, int, float]]) -> None:
        if node_count < 0:
            raise GraphError("node_count must be nonnegative")
        self.node_count = node_count
        tail: list[int] = []
        head: list[int] = []
        cost: list[float] = []
        out_arcs: list[list[int]] = [[] for _ in range(node_count)]
        in_arcs: list[list[int]] = [[] for _ in range(node_count)]
        for a, (u, v, w) in enumerate(arcs):
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(f"arc {a}: endpoint out of range: ({u}, {v})")
            w = float(w)
            if not math.isfinite(w) or w < 0.0:
                raise GraphError(f"arc {a}: cost must be finite and nonnegative, got {w!r}")
            tail.append(u)
            head.append(v)
            cost.append(w)
            out_arcs[u].append(a)
            in_arcs[v].append(a)
        self.arc_tail = tail
        self.arc_head = head
        self.arc_cost = cost
        self.out_arcs = out_arcs
        self.in_arcs = in_arcs

    @property
    def arc_count(self) -> int:
        return len(self.arc_tail)

    def arc(self, a: int) -> tuple[int, int, float]:
        """The ``(tail, head, cost)`` triple of arc ``a``."""
        return self.arc_tail[a], self.arc_head[a], self.arc_cost[a]

    def arcs(self) -> Iterator[tuple[int, int, float]]:
        """Iterate all arcs as ``(tail, head, cost)`` in arc id order."""
        for a in range(len(self.arc_tail)):
            yield self.arc_tail[a], self.arc_head[a], self.arc_cost[a]

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, arcs={self.arc_count})"


class Mask:
    """Epoch-stamped node and arc deletions over a fixed graph.

    A node or arc counts as deleted iff its stamp equals the current
    epoch, so :meth:`reset` clears every deletion by bumping the epoch.
    The stamp arrays and the epoch are public on purpose: the search hot
    loops read them directly instead of paying a method call per arc.
    """

    __slots__ = ("node_stamp", "arc_stamp", "epoch")

    def __init__(self, g: Graph) -> None:
        self.node_stamp = [0] * g.node_count
        self.arc_stamp = [0] * g.arc_count
        self.epoch = 1

    def reset(self) -> None:
        self.epoch += 1

    def delete_node(self, v: int) -> None:
        self.node_stamp[v] = self.epoch

    def delete_arc(self, a: int) -> None:
        self.arc_stamp[a] = self.epoch

    def node_deleted(self, v: int) -> bool:
        return self.node_stamp[v] == self.epoch

    def arc_deleted(self, a: int) -> bool:
        return self.arc_stamp[a] == self.epoch


@dataclass(frozen=True)
class Path:
    """A walk stored as a tuple of arc ids with its cached cost.

    The cached cost is always the left-to-right fold over the arc costs;
    use :meth:`build` to construct a validated instance.
    """

    arcs: tuple[int, ...]
    cost: float

    @staticmethod
    def build(g: Graph, arcs: Sequence[int]) -> "Path":
        return Path(tuple(arcs), path_cost(g, arcs))

    def nodes(self, g: Graph) -> tuple[int, ...]:
        """Node sequence of the walk; empty paths have no nodes."""
        if not self.arcs:
            return ()
        out = [g.arc_tail[self.arcs[0]]]
        out.extend(g.arc_head[a] for a in self.arcs)
        return tuple(out)

    def __len__(self) -> int:
        return len(self.arcs)


def path_cost(g: Graph, path: Path | Sequence[int]) -> float:
    """Validate an arc sequence and fold its cost left to right.

    Raises:
        PathError: if an arc id is out of range or two consecutive arcs
            are not incident (head of one != tail of the next).
    """
    arcs = path.arcs if isinstance(path, Path) else path
    cost = 0.0
    prev_head = -1
    arc_count = g.arc_count
    for i, a in enumerate(arcs):
        if not (0 <= a < arc_count):
            raise PathError(f"arc id {a} out of range at position {i}")
        if i > 0 and g.arc_tail[a] != prev_head:
            raise PathError(
                f"arcs at positions {i - 1} and {i} are not incident: "
                f"head {prev_head} vs tail {g.arc_tail[a]}"
            )
        prev_head = g.arc_head[a]
        cost += g.arc_cost[a]
    return cost


def is_simple(g: Graph, path: Path | Sequence[int]) -> bool:
    """True iff the walk repeats no node. Empty walks are simple."""
    arcs = path.arcs if isinstance(path, Path) else path
    if not arcs:
        return True
    seen = {g.arc_tail[arcs[0]]}
    for a in arcs:
        h = g.arc_head[a]
        if h in seen:
            return False
        seen.add(h)
    return True
