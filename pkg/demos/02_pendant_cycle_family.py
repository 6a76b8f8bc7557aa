"""An even cycle with a pendant on every other vertex.

The smallest vertex cover containing the k cut vertices has size k, while
the eternal version needs k + ceil((k+1)/2) guards, more than 1.5 times as
many for every k >= 2.
"""

from cactus_evc import compute_evc
from cactus_evc.generators import fig1_family
from cactus_evc.graph import biconnected_components
from cactus_evc.oracle import brute_force_mvc, oracle_evc

print(f"{'k':>3} {'evc':>5} {'mvc_X':>6} {'ratio':>6}  oracle")
for k in range(2, 9):
    g = fig1_family(k)
    evc = compute_evc(g).evc
    mvc_x = brute_force_mvc(g, biconnected_components(g).cut_vertices)
    check = oracle_evc(g) if g.vertex_count <= 9 else "-"
    print(f"{k:>3} {evc:>5} {mvc_x:>6} {evc / mvc_x:>6.2f}  {check}")

report = compute_evc(fig1_family(3))
print("\nper-block breakdown for k = 3:")
for b in report.blocks:
    print(f"  {b.kind:<6} size={b.size} anchor={b.anchor} chi={b.chi} branch={b.branch} -> evc={b.evc}")
