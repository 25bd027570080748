"""Planar subgraph isomorphism via sphere-cut decompositions."""

from .driver import (
    EmptyPattern,
    NonPlanarHost,
    PatternDisconnected,
    WidthBoundViolated,
    planar_subgraph_iso,
    plsi_plane,
)
from .embedded_dp import DPResult, PatternContext, run_dp
from .noose import CombinatorialNoose, EmptyNoose, enumerate_nooses
from .pattern_embed import EmbeddingCatalog, NonPlanarPattern, PatternTooLarge, enumerate_embeddings
from .plane_graph import (
    AbstractGraph,
    NonPlanar,
    NonPlanarEmbedding,
    PlaneGraph,
    PlaneGraphError,
    build_plane_graph,
    planar_embed,
)
from .sphere_cut import ScDecomposition, sc_decomposition, validate

__all__ = [
    "AbstractGraph",
    "CombinatorialNoose",
    "DPResult",
    "EmbeddingCatalog",
    "EmptyNoose",
    "EmptyPattern",
    "NonPlanar",
    "NonPlanarEmbedding",
    "NonPlanarHost",
    "NonPlanarPattern",
    "PatternContext",
    "PatternDisconnected",
    "PatternTooLarge",
    "PlaneGraph",
    "PlaneGraphError",
    "ScDecomposition",
    "WidthBoundViolated",
    "build_plane_graph",
    "enumerate_embeddings",
    "enumerate_nooses",
    "planar_embed",
    "planar_subgraph_iso",
    "plsi_plane",
    "run_dp",
    "sc_decomposition",
    "validate",
]
