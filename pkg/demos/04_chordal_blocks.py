"""Blocks may also be biconnected chordal graphs (K4, diamonds, 2-trees).

A chordal block is handled with forced minimum vertex covers, computed
greedily along a perfect elimination order.
"""

from cactus_evc import Graph, compute_evc
from cactus_evc.chordal import evc_forced, mvc_forced
from cactus_evc.generators import complete_graph, random_chordal_block_graph
from cactus_evc.oracle import oracle_evc

diamond = Graph(4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)))
print("diamond: mvc =", mvc_forced(diamond, ()),
      " mvc with vertex 0 pinned =", mvc_forced(diamond, {0}),
      " evc =", evc_forced(diamond, ()))
print("K4: evc =", evc_forced(complete_graph(4), ()))

print("\nrandom chordal-block graphs (engine vs oracle):")
for seed in range(8):
    g = random_chordal_block_graph(9, seed)
    r = compute_evc(g)
    kinds = "+".join(sorted({b.kind for b in r.blocks}))
    print(f"  seed {seed}: {g.edge_count:>2} edges  blocks {kinds:<20} engine {r.evc}  oracle {oracle_evc(g)}")
