"""Seeded instance generators.

Randomness comes from SplitMix64 (64-bit state; increment
0x9E3779B97F4A7C15, two xor-shift-multiply rounds) so a seed produces the
same graph on any platform.  Integers in ``[0, n)`` use rejection sampling
on the raw 64-bit output; floats take the top 53 bits.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterator, Sequence

from .chordal import mcs_peo
from .graph import Graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def derive_seed(seed: int, index: int) -> int:
    """Independent per-instance seed for batch runs."""
    rng = SplitMix64(seed ^ ((index * 0xD1B54A32D192ED03) & MASK64))
    return rng.next_u64()


# --------------------------------------------------------------------------
# deterministic families


def fig1_family(k: int) -> Graph:
    """Even cycle ``0..2k-1`` with a pendant ``2k+i`` on every even vertex ``2i``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    m = 2 * k
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(2 * i, m + i) for i in range(k)]
    return Graph(3 * k, tuple(edges))


def bare_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


# --------------------------------------------------------------------------
# random growth by attachment


def _attach_cycle(edges, u, first_new, length):
    ring = [u, *range(first_new, first_new + length - 1)]
    for i in range(length):
        edges.append((ring[i], ring[(i + 1) % length]))


def random_cactus(n: int, cycle_fraction: float = 0.5, seed: int = 0) -> Graph:
    """Grow a cactus on exactly ``n`` vertices.

    Each step picks an existing vertex uniformly and hangs either a pendant
    edge or, with probability ``cycle_fraction``, a cycle of length 3-8
    (shortened to fit) from it.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = SplitMix64(seed)
    edges: list[tuple[int, int]] = []
    count = 1
    while count < n:
        u = rng.below(count)
        remaining = n - count
        if remaining >= 2 and rng.random() < cycle_fraction:
            length = min(3 + rng.below(6), remaining + 1)
            _attach_cycle(edges, u, count, length)
            count += length - 1
        else:
            edges.append((u, count))
            count += 1
    return Graph(n, tuple(edges))


def random_tree(n: int, seed: int = 0) -> Graph:
    return random_cactus(n, 0.0, seed)


CHORDAL_SHAPES = ("K3", "K4", "diamond", "2tree")


def _chordal_shape(name: str, rng: SplitMix64, max_size: int) -> list[tuple[int, int]]:
    if name == "K3":
        return [(0, 1), (0, 2), (1, 2)]
    if name == "K4":
        return [(i, j) for i in range(4) for j in range(i + 1, 4)]
    if name == "diamond":
        return [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    if name == "2tree":
        size = min(4 + rng.below(3), max_size)
        edges = [(0, 1), (0, 2), (1, 2)]
        for v in range(3, size):
            x, y = edges[rng.below(len(edges))]
            edges += [(x, v), (y, v)]
        return edges
    raise ValueError(f"unknown chordal shape {name!r}")


def random_chordal_block_graph(
    n: int,
    seed: int = 0,
    menu: Sequence[str] = CHORDAL_SHAPES,
    attachments: Sequence[str] = ("edge", "cycle", "chordal"),
) -> Graph:
    """Like ``random_cactus`` but blocks may also be small biconnected chordal graphs.

    ``attachments`` restricts what each growth step may hang (chosen
    uniformly); ``menu`` restricts the chordal shapes.  A piece too large
    for the remaining vertex budget falls back to a triangle, then to a
    pendant edge.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = SplitMix64(seed)
    edges: list[tuple[int, int]] = []
    count = 1
    while count < n:
        u = rng.below(count)
        remaining = n - count
        what = attachments[rng.below(len(attachments))]
        if what == "cycle" and remaining >= 2:
            length = min(3 + rng.below(6), remaining + 1)
            _attach_cycle(edges, u, count, length)
            count += length - 1
        elif what == "chordal" and remaining >= 2:
            shape = _chordal_shape(menu[rng.below(len(menu))], rng, remaining + 1)
            size = 1 + max(max(e) for e in shape)
            if size - 1 > remaining:
                shape, size = [(0, 1), (0, 2), (1, 2)], 3
            local = Graph(size, tuple(shape))
            if not mcs_peo(local)[1]:
                raise AssertionError("generated block is not chordal")
            relabel = [u, *range(count, count + size - 1)]
            edges += [(relabel[a], relabel[b]) for a, b in shape]
            count += size - 1
        else:
            edges.append((u, count))
            count += 1
    return Graph(n, tuple(edges))


# --------------------------------------------------------------------------
# specs


KINDS = ("tree", "cactus", "fig1", "chordal", "cycle")


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int = 1
    seed: int = 0
    cycle_fraction: float = 0.5
    menu: tuple[str, ...] = field(default=CHORDAL_SHAPES)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        object.__setattr__(self, "menu", tuple(self.menu))

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "GenSpec":
        return cls(**json.loads(text))


def generate(spec: GenSpec) -> Graph:
    if spec.kind == "tree":
        return random_tree(spec.n, spec.seed)
    if spec.kind == "cactus":
        return random_cactus(spec.n, spec.cycle_fraction, spec.seed)
    if spec.kind == "fig1":
        return fig1_family(spec.n)
    if spec.kind == "chordal":
        return random_chordal_block_graph(spec.n, spec.seed, spec.menu)
    return bare_cycle(spec.n)


# --------------------------------------------------------------------------
# exhaustive enumeration

MAX_ENUMERATION = 9


def enumerate_small_cacti(n_max: int, trees_only: bool = False) -> Iterator[Graph]:
    """Every connected cactus on 1..n_max vertices, one per isomorphism class.

    Built level by level: each cactus is a smaller one with an edge or a
    cycle hung from a single vertex.  Candidates are deduplicated with a
    Weisfeiler-Lehman hash followed by an exact isomorphism test.
    """
    if n_max > MAX_ENUMERATION:
        raise ValueError(f"n_max above {MAX_ENUMERATION} is too large to enumerate")
    if n_max < 1:
        return
    import networkx as nx

    levels: dict[int, list[Graph]] = {1: [Graph(1, ())]}
    buckets: dict[int, dict[str, list]] = {}

    def offer(g: Graph):
        h = nx.Graph()
        h.add_nodes_from(range(g.vertex_count))
        h.add_edges_from(g.edges)
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
        bucket = buckets.setdefault(g.vertex_count, {}).setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            return
        bucket.append(h)
        levels.setdefault(g.vertex_count, []).append(g)

    for n in range(1, n_max + 1):
        for g in levels.get(n, []):
            yield g
            for u in range(n):
                if n + 1 <= n_max:
                    offer(Graph(n + 1, g.edges + ((u, n),)))
                if trees_only:
                    continue
                for length in range(3, n_max - n + 2):
                    extra: list[tuple[int, int]] = []
                    _attach_cycle(extra, u, n, length)
                    offer(Graph(n + length - 1, g.edges + tuple(extra)))
