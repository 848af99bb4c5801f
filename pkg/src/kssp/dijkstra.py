"""Scalar shortest-path searches on arc-weighted digraphs.

Costs of returned paths are left-to-right folds of their arc costs, the
same convention used everywhere else in the package, so equal paths
always carry bit-identical costs.
"""
from __future__ import annotations

from heapq import heappop, heappush
from math import inf

from .graph import Graph, Mask, Path


def shortest_path(
    g: Graph,
    source: int,
    target: int,
    *,
    mask: Mask | None = None,
    potential: list[float] | None = None,
    bound: float | None = None,
) -> tuple[Path | None, int]:
    """Cheapest simple path from source to target, with the pop count.

    Ties break deterministically on node id. ``mask`` hides deleted
    nodes and arcs. ``potential`` turns the search into A*; entries must
    never overestimate the remaining cost to the target (exact reverse
    distances from an unmasked graph qualify, infinity marks nodes that
    cannot reach it). ``bound`` abandons any label whose lower bound
    meets it, so a return of None then means no path cheaper than the
    bound, not necessarily no path at all.
    """
    node_stamp = arc_stamp = None
    epoch = 0
    if mask is not None:
        node_stamp = mask.node_stamp
        arc_stamp = mask.arc_stamp
        epoch = mask.epoch
        if node_stamp[source] == epoch or node_stamp[target] == epoch:
            return None, 0
    h0 = 0.0
    if potential is not None:
        h0 = potential[source]
        if h0 == inf:
            return None, 0
    if bound is not None and h0 >= bound:
        return None, 0

    dist: dict[int, float] = {source: 0.0}
    via: dict[int, int] = {}
    done: set[int] = set()
    heap: list[tuple[float, int]] = [(h0, source)]
    pops = 0
    arc_cost = g.arc_cost
    arc_head = g.arc_head
    out_arcs = g.out_arcs
    while heap:
        f, u = heappop(heap)
        if u in done:
            continue
        if bound is not None and f >= bound:
            break
        pops += 1
        if u == target:
            arcs: list[int] = []
            v = u
            while v != source:
                a = via[v]
                arcs.append(a)
                v = g.arc_tail[a]
            arcs.reverse()
            return Path(tuple(arcs), dist[target]), pops
        done.add(u)
        du = dist[u]
        hu = potential[u] if potential is not None else 0.0
        for a in out_arcs[u]:
            if arc_stamp is not None and arc_stamp[a] == epoch:
                continue
            v = arc_head[a]
            if v in done:
                continue
            if node_stamp is not None and node_stamp[v] == epoch:
                continue
            dv = du + arc_cost[a]
            old = dist.get(v)
            if old is not None and old <= dv:
                continue
            hv = potential[v] if potential is not None else 0.0
            if hv == inf:
                continue
            fv = dv + hv
            if bound is not None and fv >= bound:
                continue
            dist[v] = dv
            via[v] = a
            heappush(heap, (fv, v))
    return None, pops


def reverse_distances(g: Graph, target: int) -> list[float]:
    """Exact cost from every node to the target, infinity if unreachable.

    Suitable as an A* potential for forward searches toward the same
    target, including searches that additionally mask nodes or arcs,
    since removals only make true distances larger.
    """
    dist = [inf] * g.node_count
    dist[target] = 0.0
    done = [False] * g.node_count
    heap: list[tuple[float, int]] = [(0.0, target)]
    arc_cost = g.arc_cost
    arc_tail = g.arc_tail
    in_arcs = g.in_arcs
    while heap:
        d, v = heappop(heap)
        if done[v]:
            continue
        done[v] = True
        for a in in_arcs[v]:
            u = arc_tail[a]
            if done[u]:
                continue
            du = d + arc_cost[a]
            if du < dist[u]:
                dist[u] = du
                heappush(heap, (du, u))
    return dist
