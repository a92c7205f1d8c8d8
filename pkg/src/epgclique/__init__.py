"""Four-clique colouring of graphs given by single-bend paths on a grid."""
from .generate import GenParams, cycle_instance, random_instance, sun3_instance
from .grid import (Direction, EpgPath, EpgRepresentation, GridEdge, GridPoint, IntersectionGraph,
                   RepresentationError, Segment, Shape, bend_index, derive_graph, grid_edges_of,
                   parse_representation, serialize_representation)
from .interval import PathColor, base_coloring, color_line, peo_order
from .recolor import RecolorStats, RuleViolation, clique_color, clique_coloring, plan_recolorings
from .verify import CliqueReport, enumerate_cliques_graph, enumerate_cliques_repr, verify_coloring

__all__ = [
    "GenParams", "cycle_instance", "random_instance", "sun3_instance",
    "Direction", "EpgPath", "EpgRepresentation", "GridEdge", "GridPoint", "IntersectionGraph",
    "RepresentationError", "Segment", "Shape", "bend_index", "derive_graph", "grid_edges_of",
    "parse_representation", "serialize_representation",
    "PathColor", "base_coloring", "color_line", "peo_order",
    "RecolorStats", "RuleViolation", "clique_color", "clique_coloring", "plan_recolorings",
    "CliqueReport", "enumerate_cliques_graph", "enumerate_cliques_repr", "verify_coloring",
]
