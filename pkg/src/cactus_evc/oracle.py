"""Exact solver for the eternal vertex cover game on small graphs.

A configuration is the set of occupied vertices (at most one guard per
vertex).  For a budget ``k`` the solver starts from every size-``k`` vertex
cover and repeatedly deletes configurations that have some edge attack with
no surviving answer.  What remains is the greatest safe set; it is
non-empty exactly when ``k`` guards suffice.

Internally configurations are bitmasks and *sets* of configurations are
Python ints used as bitsets over all ``2**n`` masks.  For a set ``S`` of
guards, ``reach(S)`` is the bitset of every vertex set the guards of ``S``
can land on in one move without two guards sharing a vertex.  Adding a
vertex ``t`` to every mask lacking it is a left shift by ``2**t``, so a
whole successor family costs a handful of big-int operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import OracleCapError
from .graph import Graph

DEFAULT_CAP = 10
DEFAULT_MAX_GUARDS = 8


@dataclass(frozen=True)
class GuardConfig:
    occupied: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.occupied)


@dataclass(frozen=True)
class SafeSet:
    configs: frozenset[GuardConfig]
    k: int

    def __bool__(self) -> bool:
        return bool(self.configs)

    def __len__(self) -> int:
        return len(self.configs)


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# --------------------------------------------------------------------------
# single transition check (augmenting paths)


def _perfect_matching(left: list[int], right: list[int], allowed) -> bool:
    if len(left) != len(right):
        return False
    match_of_right: dict[int, int] = {}

    def augment(u, seen):
        for w in right:
            if w in seen or not allowed(u, w):
                continue
            seen.add(w)
            if w not in match_of_right or augment(match_of_right[w], seen):
                match_of_right[w] = u
                return True
        return False

    return all(augment(u, set()) for u in left)


def can_transition(g: Graph, src, dst, attacked) -> bool:
    """Whether guards on ``src`` can move to exactly ``dst`` answering an attack on ``attacked``.

    Every guard stays or crosses one edge, the move is a bijection, and at
    least one guard crosses the attacked edge.
    """
    src = frozenset(getattr(src, "occupied", src))
    dst = frozenset(getattr(dst, "occupied", dst))
    a, b = attacked
    if not g.has_edge(a, b):
        raise ValueError(f"({a}, {b}) is not an edge")
    if len(src) != len(dst):
        return False

    def allowed(u, w):
        return u == w or g.has_edge(u, w)

    for x, y in ((a, b), (b, a)):
        if x in src and y in dst:
            left = sorted(src - {x})
            right = sorted(dst - {y})
            if _perfect_matching(left, right, allowed):
                return True
    return False


# --------------------------------------------------------------------------
# fixpoint machinery


class GameSolver:
    """Caches one-move reachability for a fixed graph; reused across budgets and pinned sets."""

    def __init__(self, g: Graph, cap: int = DEFAULT_CAP):
        if g.vertex_count > cap:
            raise OracleCapError(f"{g.vertex_count} vertices exceeds the oracle cap of {cap}")
        self.g = g
        n = self.n = g.vertex_count
        self.closed = [[v, *g.adjacency[v]] for v in range(n)]
        self.edges = [(min(u, v), max(u, v)) for u, v in g.edges]
        size = 1 << n
        self._lack = []
        for t in range(n):
            bit = 1 << t
            bs = 0
            for m in range(size):
                if not m & bit:
                    bs |= 1 << m
            self._lack.append(bs)
        self._covers_by_size: dict[int, list[int]] = {}
        edge_masks = [(1 << u) | (1 << v) for u, v in self.edges]
        for m in range(size):
            if all(m & em for em in edge_masks):
                self._covers_by_size.setdefault(bin(m).count("1"), []).append(m)
        self._reach: dict[int, int] = {0: 1}
        self._succ: dict[int, dict[int, list[int]]] = {}

    def reach(self, s: int) -> int:
        memo = self._reach
        r = memo.get(s)
        if r is not None:
            return r
        low = s & -s
        v = low.bit_length() - 1
        rest = self.reach(s ^ low)
        r = 0
        for t in self.closed[v]:
            r |= (rest & self._lack[t]) << (1 << t)
        memo[s] = r
        return r

    def successors(self, config: int, edge: tuple[int, int]) -> int:
        """Bitset of every configuration reachable from ``config`` answering ``edge``."""
        a, b = edge
        out = 0
        if config >> a & 1:
            out |= (self.reach(config ^ (1 << a)) & self._lack[b]) << (1 << b)
        if config >> b & 1:
            out |= (self.reach(config ^ (1 << b)) & self._lack[a]) << (1 << a)
        return out

    def covers(self, k: int) -> list[int]:
        return self._covers_by_size.get(k, [])

    def _successor_table(self, k: int) -> dict[int, list[int]]:
        table = self._succ.get(k)
        if table is None:
            table = {c: [self.successors(c, e) for e in self.edges] for c in self.covers(k)}
            self._succ[k] = table
        return table

    def fixpoint(self, k: int, required: int = 0) -> int:
        """Bitset of the greatest safe set of size-``k`` configurations containing ``required``."""
        table = self._successor_table(k)
        members = [c for c in table if c & required == required]
        live = 0
        for c in members:
            live |= 1 << c
        # every (config, edge) pair is re-checked only after one of its successors dies
        work = list(members)
        queued = set(members)
        while work:
            c = work.pop()
            queued.discard(c)
            if not live >> c & 1:
                continue
            if all(s & live for s in table[c]):
                continue
            live ^= 1 << c
            # the move relation is symmetric, so successors are also predecessors
            for s in table[c]:
                for d in _bits(s & live):
                    if d not in queued:
                        queued.add(d)
                        work.append(d)
        return live

    def min_safe_budget(self, required: int = 0, max_guards: int = DEFAULT_MAX_GUARDS) -> int:
        if not self.edges:
            return bin(required).count("1")
        start = min_vertex_cover(self.g, _bits(required))
        for k in range(start, self.n + 1):
            if k > max_guards:
                raise OracleCapError(f"more than {max_guards} guards needed")
            if self.fixpoint(k, required):
                return k
        raise AssertionError("all-vertices configuration must be safe")


def safe_fixpoint(g: Graph, k: int, required: Iterable[int] = (), cap: int = DEFAULT_CAP) -> SafeSet:
    if not 0 <= k <= g.vertex_count:
        raise ValueError("k must lie in 0..|V|")
    solver = GameSolver(g, cap)
    live = solver.fixpoint(k, _mask(required))
    configs = frozenset(GuardConfig(frozenset(_bits(m))) for m in _bits(live))
    return SafeSet(configs, k)


def oracle_evc(g: Graph, cap: int = DEFAULT_CAP, max_guards: int = DEFAULT_MAX_GUARDS) -> int:
    return GameSolver(g, cap).min_safe_budget(0, max_guards)


def oracle_evc_required(
    g: Graph, required: Iterable[int], cap: int = DEFAULT_CAP, max_guards: int = DEFAULT_MAX_GUARDS
) -> int:
    req = set(required)
    if any(not 0 <= v < g.vertex_count for v in req):
        raise ValueError("required vertex out of range")
    return GameSolver(g, cap).min_safe_budget(_mask(req), max_guards)


def oracle_type(g: Graph, v: int, cap: int = DEFAULT_CAP, max_guards: int = DEFAULT_MAX_GUARDS):
    from .engine import VertexType

    pinned = oracle_evc_required(g, [v], cap, max_guards)
    extended = oracle_evc(g.with_pendant(v), cap, max_guards)
    return VertexType.TYPE1 if extended == pinned else VertexType.TYPE2


@dataclass(frozen=True)
class OracleProfile:
    """Everything the cross-checks need about one small graph."""

    evc: int
    evc_at: tuple[int, ...]  # evc_v for each vertex
    evc_extended: tuple[int, ...]  # evc(G_v^+) for each vertex

    def vtype(self, v: int):
        from .engine import VertexType

        return VertexType.TYPE1 if self.evc_extended[v] == self.evc_at[v] else VertexType.TYPE2


def oracle_profile(g: Graph, cap: int = DEFAULT_CAP, max_guards: int = DEFAULT_MAX_GUARDS) -> OracleProfile:
    """evc, every evc_v and every evc(G_v^+), sharing one solver for the pinned runs."""
    solver = GameSolver(g, cap)
    evc = solver.min_safe_budget(0, max_guards)
    at = tuple(solver.min_safe_budget(1 << v, max_guards) for v in range(g.vertex_count))
    ext = tuple(
        GameSolver(g.with_pendant(v), cap + 1).min_safe_budget(0, max_guards)
        for v in range(g.vertex_count)
    )
    return OracleProfile(evc, at, ext)


# --------------------------------------------------------------------------
# exact (forced) minimum vertex cover by branching


def min_vertex_cover(g: Graph, required: Iterable[int] = ()) -> int:
    """Exact minimum size of a vertex cover containing ``required``.

    Branches on an uncovered edge (one endpoint or the other) with a
    maximal-matching lower bound; intended for small or sparse graphs.
    """
    req = set(required)
    edges = [(u, v) for u, v in g.edges if u not in req and v not in req]
    best = [len(req) + len({u for e in edges for u in e})]

    def matching_bound(chosen):
        used = set()
        count = 0
        for u, v in edges:
            if u in chosen or v in chosen or u in used or v in used:
                continue
            used.add(u)
            used.add(v)
            count += 1
        return count

    def search(chosen: frozenset):
        size = len(req) + len(chosen)
        if size + matching_bound(chosen) >= best[0]:
            return
        for u, v in edges:
            if u not in chosen and v not in chosen:
                search(chosen | {u})
                search(chosen | {v})
                return
        best[0] = size

    search(frozenset())
    return best[0]


def brute_force_mvc(g: Graph, required: Iterable[int] = ()) -> int:
    """Minimum forced vertex cover by enumerating subsets in order of size (tiny graphs)."""
    req = set(required)
    rest = [v for v in range(g.vertex_count) if v not in req]
    for extra in range(len(rest) + 1):
        for combo in combinations(rest, extra):
            chosen = req.union(combo)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return len(chosen)
    raise AssertionError("unreachable")
