"""Eternal vertex cover numbers of cactus graphs and their chordal-block extension."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DisconnectedGraphError,
    EvcError,
    GraphParseError,
    OracleCapError,
    UnsupportedGraphError,
)
from .graph import (  # noqa: E402
    Block,
    BlockCutTree,
    BlockKind,
    Graph,
    biconnected_components,
    classify_block,
    is_cactus,
    parse_edge_list,
    serialize_edge_list,
)
from .engine import (  # noqa: E402
    EvcReport,
    EvcSummary,
    VertexType,
    compute_evc,
    compute_evc_at,
)
from .oracle import oracle_evc, oracle_evc_required, oracle_type  # noqa: E402

__all__ = [
    "Block",
    "BlockCutTree",
    "BlockKind",
    "DisconnectedGraphError",
    "EvcError",
    "EvcReport",
    "EvcSummary",
    "Graph",
    "GraphParseError",
    "OracleCapError",
    "UnsupportedGraphError",
    "VertexType",
    "biconnected_components",
    "classify_block",
    "compute_evc",
    "compute_evc_at",
    "is_cactus",
    "oracle_evc",
    "oracle_evc_required",
    "oracle_type",
    "parse_edge_list",
    "serialize_edge_list",
]
