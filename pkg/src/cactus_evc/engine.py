"""Eternal vertex cover numbers of graphs whose blocks are edges, cycles or
biconnected chordal graphs.

The block-cut tree is rooted at a vertex and evaluated leaf to root.  Every
non-root block ``B`` hangs from an *anchor* vertex ``a``; the subgraph made
of ``B`` and everything below it is summarised by ``evc``, ``evc_a`` (``a``
always occupied) and whether it is Type 1 or Type 2 at ``a``.  A block's
summary only needs its children's summaries folded into a ``ChiAccumulator``,
so each tree edge is touched a constant number of times.
"""

from __future__ import annotations

import enum
import gc
import time
from contextlib import contextmanager
from dataclasses import dataclass, field, fields
from typing import Collection, Iterable, NamedTuple, Optional

from . import __version__
from .chordal import evc_forced, mvc_forced
from .errors import DisconnectedGraphError, UnsupportedGraphError
from .graph import Block, BlockKind, Graph, biconnected_components


class VertexType(enum.Enum):
    """TYPE1: adding a pendant at the anchor costs nothing beyond pinning it."""

    TYPE1 = 1
    TYPE2 = 2


T1 = VertexType.TYPE1
T2 = VertexType.TYPE2


class EvcSummary(NamedTuple):
    evc: int
    evc_anchor: int
    vtype: VertexType
    anchor: int


@dataclass(slots=True)
class ChiAccumulator:
    """Guard lower bound contributed by the components hanging off one block."""

    cut_count: int = 0
    type1_sum: int = 0
    type2_sum: int = 0
    has_type1: bool = False

    def add(self, part: EvcSummary) -> None:
        if part.vtype is T1:
            self.type1_sum += part.evc_anchor - 2
            self.has_type1 = True
        else:
            self.type2_sum += part.evc_anchor - 1

    @property
    def value(self) -> int:
        return self.cut_count + self.type1_sum + self.type2_sum


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def combine_at_cut_vertex(parts: Iterable[EvcSummary]) -> EvcSummary:
    """Glue the components meeting at a cut vertex.

    The result always has ``evc == evc_anchor`` and is Type 1 iff some part is.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("combine_at_cut_vertex needs at least one component")
    t1 = t2 = 0
    any_type1 = False
    for p in parts:
        if p.vtype is T1:
            any_type1 = True
            t1 += p.evc_anchor - 2
        else:
            t2 += p.evc_anchor - 1
    if any_type1:
        value, vtype = 2 + t1 + t2, T1
    else:
        value, vtype = 1 + t2, T2
    return EvcSummary(value, value, vtype, parts[0].anchor)


def cycle_block_evc(n_b: int, k_b: int, chi: ChiAccumulator) -> int:
    if not 0 <= k_b <= n_b:
        raise ValueError(f"cut-vertex count {k_b} outside 0..{n_b}")
    free = n_b - k_b
    if chi.has_type1:
        free += 1
    return _ceil_half(free) + chi.value


def cycle_vertex_type(n_b: int, k_b: int, chi: ChiAccumulator, base_evc: int) -> tuple[int, VertexType]:
    """``(evc_v, type)`` for a vertex of a cycle block that is not a cut vertex."""
    even = (n_b - k_b) % 2 == 0
    if chi.has_type1:
        return (base_evc, T1) if even else (base_evc + 1, T1)
    return (base_evc + 1, T1) if even else (base_evc, T2)


def pendant_lift(inner: EvcSummary, v: int) -> EvcSummary:
    """Summary at a new leaf ``v`` hung from ``inner.anchor``."""
    if inner.vtype is T1:
        evc = inner.evc_anchor
    else:
        evc = inner.evc_anchor + 1
    return EvcSummary(evc, inner.evc_anchor + 1, inner.vtype, v)


def chordal_block_evc(block: Graph, cut_set: Collection[int], chi: ChiAccumulator) -> int:
    """evc of the graph formed by a biconnected chordal block and its hanging components.

    ``block`` is the block as a standalone graph and ``cut_set`` its vertices
    that carry components (in the block's own numbering).
    """
    cut_set = set(cut_set)
    if chi.has_type1:
        return mvc_forced(block, cut_set) + 1 + chi.value - len(cut_set)
    return evc_forced(block, cut_set) + chi.value - len(cut_set)


def chordal_vertex_type(
    block: Graph, cut_set: Collection[int], chi: ChiAccumulator, v: int
) -> tuple[int, VertexType]:
    cut_set = set(cut_set)
    if v in cut_set:
        raise ValueError("query vertex must not be a cut vertex of the block")
    pinned = cut_set | {v}
    offset = chi.value - len(cut_set)
    forced_mvc = mvc_forced(block, pinned)
    if chi.has_type1:
        evc_v = forced_mvc + 1 + offset
    else:
        evc_v = evc_forced(block, pinned) + offset
    # G_v^+: v becomes a cut vertex carrying one Type 1 pendant edge (adds 0 to the sums)
    extended = forced_mvc + 1 + (chi.value + 1) - len(pinned)
    return evc_v, (T1 if extended == evc_v else T2)


# --------------------------------------------------------------------------
# reports


class BlockReport(NamedTuple):
    kind: str
    size: int
    anchor: int
    cut_count: int
    chi: int
    has_type1: bool
    branch: str
    evc: int
    evc_anchor: int
    vtype: int


@dataclass
class EvcReport:
    evc: int
    query_vertex: Optional[int] = None
    evc_v: Optional[int] = None
    vtype: Optional[int] = None
    vertex_count: int = 0
    edge_count: int = 0
    blocks: list[BlockReport] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    engine_version: str = __version__

    def to_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["blocks"] = [b._asdict() for b in self.blocks]
        d["timings"] = dict(self.timings)
        return d


# --------------------------------------------------------------------------
# driver

SINGLE_VERTEX = (0, 1, T1)
_TYPE_CODE = {T1: 1, T2: 2}
_KIND_NAME = {k: k.value for k in BlockKind}
# above this many vertices the collector is paused while the driver allocates
_GC_PAUSE_THRESHOLD = 50_000


@contextmanager
def _gc_paused(active: bool):
    if not active or not gc.isenabled():
        yield
        return
    gc.disable()
    try:
        yield
    finally:
        gc.enable()


def _solve(g: Graph, root: int, with_blocks: bool = True):
    n = g.vertex_count
    if n == 0:
        raise DisconnectedGraphError(0)
    if not 0 <= root < n:
        raise ValueError(f"vertex {root} out of range")
    timings = {}
    if n == 1:
        return EvcSummary(0, 1, T1, root), [], timings

    with _gc_paused(n > _GC_PAUSE_THRESHOLD):
        return _solve_blocks(g, root, with_blocks, timings)


def _solve_blocks(g: Graph, root: int, with_blocks: bool, timings: dict):
    t0 = time.perf_counter()
    tree = biconnected_components(g, root)
    t1 = time.perf_counter()
    timings["decompose"] = t1 - t0

    blocks = tree.blocks
    for i, b in enumerate(blocks):
        if b.kind is BlockKind.OTHER:
            raise UnsupportedGraphError(
                f"block {i} on vertices {list(b.vertices)} is neither an edge, "
                "a cycle nor a biconnected chordal graph",
                block=b,
            )
    vertex_blocks = tree.vertex_blocks

    anchor = [-1] * len(blocks)
    order = []
    for b in vertex_blocks[root]:
        anchor[b] = root
        order.append(b)
    i = 0
    while i < len(order):
        b = order[i]
        i += 1
        a = anchor[b]
        for u in blocks[b].vertices:
            if u != a:
                vb = vertex_blocks[u]
                if len(vb) > 1:
                    for d in vb:
                        if d != b:
                            anchor[d] = u
                            order.append(d)

    summary: list[Optional[EvcSummary]] = [None] * len(blocks)
    reports: list[Optional[BlockReport]] = [None] * len(blocks) if with_blocks else []
    for b in reversed(order):
        blk = blocks[b]
        a = anchor[b]
        chi = ChiAccumulator()
        children_at: dict[int, list[EvcSummary]] = {}
        for u in blk.vertices:
            if u == a:
                continue
            vb = vertex_blocks[u]
            if len(vb) > 1:
                chi.cut_count += 1
                parts = [summary[d] for d in vb if d != b]
                for p in parts:
                    chi.add(p)
                children_at[u] = parts

        kind = blk.kind
        if kind is BlockKind.EDGE:
            c = blk.vertices[0] if blk.vertices[1] == a else blk.vertices[1]
            parts = children_at.get(c)
            if parts is None:
                inner = EvcSummary(*SINGLE_VERTEX, c)
                branch = "edge:leaf"
            elif len(parts) == 1:
                inner = parts[0]
                branch = "edge:pendant"
            else:
                inner = combine_at_cut_vertex(parts)
                branch = "edge:pendant"
            s = pendant_lift(inner, a)
        elif kind is BlockKind.CYCLE:
            nb = len(blk.vertices)
            evc = cycle_block_evc(nb, chi.cut_count, chi)
            evc_a, vt = cycle_vertex_type(nb, chi.cut_count, chi, evc)
            s = EvcSummary(evc, evc_a, vt, a)
            branch = "cycle:type1" if chi.has_type1 else "cycle:no_type1"
        else:
            local, index = _local_block(blk)
            cut_local = [index[u] for u in children_at]
            evc = chordal_block_evc(local, cut_local, chi)
            evc_a, vt = chordal_vertex_type(local, cut_local, chi, index[a])
            s = EvcSummary(evc, evc_a, vt, a)
            branch = "chordal:type1" if chi.has_type1 else "chordal:no_type1"
        summary[b] = s
        if with_blocks:
            reports[b] = BlockReport(
                _KIND_NAME[kind], len(blk.vertices), a, chi.cut_count, chi.value,
                chi.has_type1, branch, s.evc, s.evc_anchor, _TYPE_CODE[s.vtype],
            )

    root_blocks = vertex_blocks[root]
    if len(root_blocks) > 1:
        final = combine_at_cut_vertex(summary[b] for b in root_blocks)
    else:
        final = summary[root_blocks[0]]
    timings["recurse"] = time.perf_counter() - t1
    return final, reports, timings


def _local_block(blk: Block) -> tuple[Graph, dict[int, int]]:
    index = {v: i for i, v in enumerate(blk.vertices)}
    return Graph(len(index), tuple((index[u], index[v]) for u, v in blk.edges)), index


def compute_evc(
    g: Graph, at: Optional[int] = None, root: int = 0, with_blocks: bool = True
) -> EvcReport:
    """evc of ``g`` plus a per-block breakdown; with ``at``, also evc_at and the type there.

    ``root`` picks where the block-cut tree is rooted; the answer does not
    depend on it.
    """
    if at is not None:
        root = at
    final, reports, timings = _solve(g, root, with_blocks)
    report = EvcReport(
        evc=final.evc,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        blocks=reports,
        timings=timings,
    )
    if at is not None:
        report.query_vertex = at
        report.evc_v = final.evc_anchor
        report.vtype = final.vtype.value
    return report


def compute_evc_at(g: Graph, v: int) -> EvcSummary:
    """Full ``(evc, evc_v, type)`` triple with respect to vertex ``v``."""
    final, _, _ = _solve(g, v, with_blocks=False)
    return final
