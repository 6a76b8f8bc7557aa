"""Compare the linear-time engine against exhaustive game solving.

The oracle builds every vertex cover of a given size and repeatedly removes
configurations that cannot answer some edge attack.  Whatever survives is a
winning strategy for the defender.
"""

from cactus_evc.engine import compute_evc_at
from cactus_evc.generators import enumerate_small_cacti
from cactus_evc.oracle import oracle_profile
from cactus_evc.verify import compare_engine_oracle

graphs = list(enumerate_small_cacti(7))
failures = 0
for g in graphs:
    problems, _ = compare_engine_oracle(g)
    failures += bool(problems)
print(f"{len(graphs)} cacti on up to 7 vertices, {failures} disagreements")

# one graph in detail: two triangles sharing a vertex
bowtie = next(g for g in graphs if g.vertex_count == 5 and g.edge_count == 6
              and max(g.degree(v) for v in range(5)) == 4)
prof = oracle_profile(bowtie)
print(f"\nbowtie: oracle evc = {prof.evc}")
for v in range(bowtie.vertex_count):
    s = compute_evc_at(bowtie, v)
    print(f"  v={v} deg={bowtie.degree(v)}  oracle evc_v={prof.evc_at[v]} evc(G_v+)={prof.evc_extended[v]}"
          f"  engine evc_v={s.evc_anchor} type={s.vtype.value}")
