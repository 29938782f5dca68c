"""Similar triangles, forbidden 3-graphs and Turan-type counts."""

from ._core import (
    ArgumentError,
    InfeasibleError,
    NoEdgeError,
    ParseError,
    SimtriError,
    SizeError,
    analyze,
    best_split,
    build_S,
    catalog_graph,
    catalog_names,
    clone_vertex,
    construct,
    contains,
    count_similar,
    forbid_check,
    h,
    reproduce,
    s_edge_count,
    similarity_edges,
    turan,
)

__all__ = [name for name in dir() if not name.startswith("_")]
