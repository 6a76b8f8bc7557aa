"""Engine-versus-oracle comparison on one graph."""

from __future__ import annotations

from .engine import compute_evc, compute_evc_at
from .graph import Graph
from .oracle import DEFAULT_CAP, OracleProfile, oracle_profile


def compare_engine_oracle(g: Graph, cap: int = DEFAULT_CAP) -> tuple[list[str], OracleProfile]:
    """Mismatches between engine and oracle on evc and on (evc_v, type) at every vertex."""
    profile = oracle_profile(g, cap)
    problems = []
    evc = compute_evc(g, with_blocks=False).evc
    if evc != profile.evc:
        problems.append(f"evc: engine {evc}, oracle {profile.evc}")
    for v in range(g.vertex_count):
        s = compute_evc_at(g, v)
        want = (profile.evc, profile.evc_at[v], profile.vtype(v).value)
        got = (s.evc, s.evc_anchor, s.vtype.value)
        if got != want:
            problems.append(f"vertex {v}: engine (evc, evc_v, type)={got}, oracle {want}")
    return problems, profile
