"""Simple undirected graphs, the edge-list format and block decomposition.

Vertices are dense integers ``0..n-1``.  Everything here is immutable once
built, so graphs and decompositions can be shared freely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence, TextIO

from .errors import DisconnectedGraphError, GraphParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    ``edges`` keeps the orientation and order it was built with, so that
    serializing and re-parsing reproduces the input byte for byte.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            key = u * n + v if u < v else v * n + u
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(map(tuple, adj)))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(vertex_count, tuple((u, v) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        # adjacency lists are sorted
        lo, hi = 0, len(nbrs)
        while lo < hi:
            mid = (lo + hi) // 2
            if nbrs[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nbrs) and nbrs[lo] == v

    def with_pendant(self, x: int) -> "Graph":
        """Return ``G_x^+``: a copy with a new vertex ``n`` adjacent only to ``x``."""
        if not 0 <= x < self.vertex_count:
            raise ValueError(f"vertex {x} out of range")
        n = self.vertex_count
        return Graph(n + 1, self.edges + ((x, n),))

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` in the order given.

        Returns the subgraph and the list mapping new ids back to old ids.
        """
        index = {v: i for i, v in enumerate(vertices)}
        sub_edges = []
        for v in vertices:
            iv = index[v]
            for w in self.adjacency[v]:
                iw = index.get(w)
                if iw is not None and iv < iw:
                    sub_edges.append((iv, iw))
        return Graph(len(vertices), tuple(sub_edges)), list(vertices)

    def component_count(self) -> int:
        n = self.vertex_count
        seen = [False] * n
        count = 0
        for s in range(n):
            if seen[s]:
                continue
            count += 1
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
        return count

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and self.component_count() == 1


# --------------------------------------------------------------------------
# edge-list text format


def parse_edge_list(text: str | TextIO) -> Graph:
    """Parse the ``n m`` header + ``m`` lines of ``u v`` format.

    Lines whose first non-blank character is ``#`` and blank lines are
    ignored.  Every diagnostic carries the 1-based physical line number.
    """
    if not isinstance(text, str):
        text = text.read()
    header = None
    edges: list[Edge] = []
    seen: dict[tuple[int, int], int] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = lineno
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("vertex and edge counts must be non-negative", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphParseError(f"more than the declared {m} edges", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"vertex id out of range 0..{n - 1} in edge ({a}, {b})", lineno)
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", lineno)
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphParseError(
                f"duplicate edge ({a}, {b}) (first seen at line {seen[key]})", lineno
            )
        seen[key] = lineno
        edges.append((a, b))
    if header is None:
        raise GraphParseError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise GraphParseError(
            f"declared {header[1]} edges but found {len(edges)}", last_line
        )
    return Graph(header[0], tuple(edges))


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path, header_comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for c in header_comments:
            fh.write(f"# {c}\n")
        fh.write(serialize_edge_list(g))


# --------------------------------------------------------------------------
# blocks


class BlockKind(enum.Enum):
    EDGE = "edge"
    CYCLE = "cycle"
    CHORDAL = "chordal"  # biconnected chordal, not an edge, not a cycle
    OTHER = "other"


class Block(NamedTuple):
    vertices: tuple[int, ...]
    kind: BlockKind
    edges: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks of a connected graph together with the cut vertices joining them.

    ``vertex_blocks[v]`` lists the ids of the blocks containing ``v``; a vertex
    is a cut vertex exactly when it lies in two or more blocks.  That list is
    the cut-vertex side of the bipartite block-cut tree.
    """

    vertex_count: int
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    vertex_blocks: tuple[tuple[int, ...], ...]

    def block_cut_vertices(self, b: int) -> list[int]:
        return [v for v in self.blocks[b].vertices if len(self.vertex_blocks[v]) > 1]

    @property
    def tree_adjacency(self) -> dict[tuple[str, int], list[tuple[str, int]]]:
        """Adjacency of the block-cut tree with nodes ``("block", i)`` and ``("cut", v)``."""
        adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
        for i in range(len(self.blocks)):
            adj[("block", i)] = [("cut", v) for v in self.block_cut_vertices(i)]
        for v in sorted(self.cut_vertices):
            adj[("cut", v)] = [("block", i) for i in self.vertex_blocks[v]]
        return adj


def _classify(vertices: Sequence[int], edges: Sequence[Edge]) -> BlockKind:
    nb, mb = len(vertices), len(edges)
    if nb == 2:
        return BlockKind.EDGE
    if mb == nb:
        # a biconnected graph with as many edges as vertices is a cycle
        return BlockKind.CYCLE
    from .chordal import mcs_peo

    index = {v: i for i, v in enumerate(vertices)}
    local = Graph(nb, tuple((index[u], index[v]) for u, v in edges))
    _, chordal = mcs_peo(local)
    return BlockKind.CHORDAL if chordal else BlockKind.OTHER


def classify_block(b: Block, g: Graph) -> BlockKind:
    """Recompute the kind of block ``b`` from its induced subgraph in ``g``."""
    sub, _ = g.induced_subgraph(b.vertices)
    if sub.vertex_count == 2:
        return BlockKind.EDGE
    if sub.vertex_count >= 3 and all(len(a) == 2 for a in sub.adjacency):
        return BlockKind.CYCLE
    return _classify(range(sub.vertex_count), sub.edges)


def biconnected_components(g: Graph, root: int = 0) -> BlockCutTree:
    """Hopcroft-Tarjan lowpoint decomposition with an explicit stack.

    Raises DisconnectedGraphError if ``g`` is not connected.  A single
    isolated vertex has no blocks.
    """
    n = g.vertex_count
    if n == 0:
        raise DisconnectedGraphError(0)
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    # tree_block[w]: block holding the tree edge (parent[w], w)
    tree_block = [-1] * n
    block_vertices: list[list[int]] = []

    disc[root] = 0
    clock = 1
    stack = [root]
    iters = [None] * n
    iters[root] = iter(adj[root])
    vstack: list[int] = []
    while stack:
        u = stack[-1]
        pu = parent[u]
        for w in iters[u]:
            if disc[w] < 0:
                parent[w] = u
                disc[w] = low[w] = clock
                clock += 1
                stack.append(w)
                vstack.append(w)
                iters[w] = iter(adj[w])
                break
            if w != pu and disc[w] < low[u]:
                low[u] = disc[w]
        else:
            stack.pop()
            iters[u] = None
            if stack:
                if low[u] < low[pu]:
                    low[pu] = low[u]
                if low[u] >= disc[pu]:
                    bid = len(block_vertices)
                    members = [pu]
                    while True:
                        x = vstack.pop()
                        tree_block[x] = bid
                        members.append(x)
                        if x == u:
                            break
                    block_vertices.append(members)

    if clock != n:
        raise DisconnectedGraphError(g.component_count())

    block_edges: list[list[Edge]] = [[] for _ in block_vertices]
    for a, b in g.edges:
        if parent[b] == a:
            bid = tree_block[b]
        elif parent[a] == b:
            bid = tree_block[a]
        else:
            bid = tree_block[a] if disc[a] > disc[b] else tree_block[b]
        block_edges[bid].append((a, b))

    vertex_blocks: list[list[int]] = [[] for _ in range(n)]
    blocks = []
    for bid, members in enumerate(block_vertices):
        members.sort()
        for v in members:
            vertex_blocks[v].append(bid)
        edges = block_edges[bid]
        blocks.append(Block(tuple(members), _classify(members, edges), tuple(edges)))
    cut = frozenset(v for v in range(n) if len(vertex_blocks[v]) > 1)
    return BlockCutTree(n, tuple(blocks), cut, tuple(map(tuple, vertex_blocks)))


def is_cactus(g: Graph) -> bool:
    """True iff every block is an edge or a cycle (``g`` must be connected)."""
    tree = biconnected_components(g)
    return all(b.kind in (BlockKind.EDGE, BlockKind.CYCLE) for b in tree.blocks)
