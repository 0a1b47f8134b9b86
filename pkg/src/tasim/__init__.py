"""Two-handed tile self-assembly simulator with staged dissolution."""

from .model import (
    Assembly,
    Glue,
    Material,
    NULL_GLUE,
    TileSystem,
    TileType,
    binding_edges,
    binding_graph,
    canonicalize,
    combine,
    dissolve,
    glues_interact,
    is_stable,
    min_cut_strength,
)

__all__ = [
    "Assembly",
    "Glue",
    "Material",
    "NULL_GLUE",
    "TileSystem",
    "TileType",
    "binding_edges",
    "binding_graph",
    "canonicalize",
    "combine",
    "dissolve",
    "glues_interact",
    "is_stable",
    "min_cut_strength",
]

__version__ = "0.1.0"
