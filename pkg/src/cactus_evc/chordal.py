"""Chordality testing and forced-set vertex cover numbers on chordal graphs."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Collection, Iterable

from .graph import Graph, biconnected_components


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]
    position: tuple[int, ...]


def _mcs_order(adjacency, vertices: Iterable[int]) -> list[int]:
    """Maximum cardinality search restricted to ``vertices``.

    Returns the reverse of the visiting order, which is a perfect
    elimination order whenever the graph is chordal.  Ties go to the
    lowest vertex id.
    """
    alive = set(vertices)
    weight = dict.fromkeys(alive, 0)
    heap = [(0, v) for v in sorted(alive)]
    visited = []
    while heap:
        w, v = heapq.heappop(heap)
        if v not in alive or -w != weight[v]:
            continue
        alive.discard(v)
        visited.append(v)
        for x in adjacency[v]:
            if x in alive:
                weight[x] += 1
                heapq.heappush(heap, (-weight[x], x))
    visited.reverse()
    return visited


def _is_peo(adjacency, order: list[int]) -> bool:
    # For each v, its earliest later neighbour must see all other later neighbours.
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        pv = pos[v]
        later = [x for x in adjacency[v] if x in pos and pos[x] > pv]
        if len(later) < 2:
            continue
        first = min(later, key=pos.__getitem__)
        first_nbrs = set(adjacency[first])
        for x in later:
            if x != first and x not in first_nbrs:
                return False
    return True


def mcs_peo(g: Graph) -> tuple[EliminationOrder, bool]:
    order = _mcs_order(g.adjacency, range(g.vertex_count))
    position = [0] * g.vertex_count
    for i, v in enumerate(order):
        position[v] = i
    eo = EliminationOrder(tuple(order), tuple(position))
    return eo, _is_peo(g.adjacency, order)


def _mvc_restricted(g: Graph, removed: Collection[int]) -> int:
    """mvc of ``g`` minus ``removed``; ValueError if that subgraph is not chordal."""
    members = [v for v in range(g.vertex_count) if v not in removed]
    member_set = set(members)
    order = _mcs_order(g.adjacency, members)
    if not _is_peo(g.adjacency, order):
        raise ValueError("graph is not chordal")
    blocked = set()
    independent = 0
    for v in order:
        if v in blocked:
            continue
        independent += 1
        blocked.update(x for x in g.adjacency[v] if x in member_set)
    return len(members) - independent


def mvc_chordal(g: Graph) -> int:
    """Minimum vertex cover size of a chordal graph (greedy along a PEO)."""
    return _mvc_restricted(g, ())


def mvc_forced(g: Graph, forced: Iterable[int]) -> int:
    """Smallest vertex cover of chordal ``g`` that contains every vertex of ``forced``."""
    s = set(forced)
    if any(not 0 <= v < g.vertex_count for v in s):
        raise ValueError("forced vertex out of range")
    return len(s) + _mvc_restricted(g, s)


def evc_forced(b: Graph, forced: Iterable[int]) -> int:
    """Eternal vertex cover number of a biconnected chordal graph with ``forced`` always occupied.

    Equals the forced mvc unless pinning one more vertex raises it, in which
    case one extra guard is needed.  Uses |V| forced-mvc evaluations.
    """
    s = set(forced)
    _, chordal = mcs_peo(b)
    if not chordal:
        raise ValueError("graph is not chordal")
    if b.vertex_count < 2 or len(biconnected_components(b).blocks) != 1:
        raise ValueError("graph is not biconnected")
    base = mvc_forced(b, s)
    for v in range(b.vertex_count):
        if v not in s and mvc_forced(b, s | {v}) != base:
            return base + 1
    return base
