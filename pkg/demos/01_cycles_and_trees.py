"""Cycles need half their vertices (rounded up); trees need their internal
vertices plus one.  The engine reproduces both from block formulas alone."""

from cactus_evc import compute_evc, compute_evc_at
from cactus_evc.generators import bare_cycle, path_graph, random_tree, star_graph

print("cycles")
for n in range(3, 11):
    s = compute_evc_at(bare_cycle(n), 0)
    print(f"  C{n:<2} evc={s.evc}  evc_v={s.evc_anchor}  type={s.vtype.value}")

print("\ntrees")
for name, g in [("P2", path_graph(2)), ("P5", path_graph(5)), ("star K1,4", star_graph(4)),
                ("random, 40 vertices", random_tree(40, seed=1))]:
    leaves = sum(1 for v in range(g.vertex_count) if g.degree(v) == 1)
    print(f"  {name:<20} evc={compute_evc(g).evc}  |V|-|L|+1={g.vertex_count - leaves + 1}")
