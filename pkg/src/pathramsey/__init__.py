"""Small multicolor path Ramsey numbers: exact oracles, explicit lower-bound
colorings, extremal path numbers and an exhaustive coloring search."""

from .errors import InputError, ResourceError
from .graph import (
    EdgeColoring,
    Graph,
    Matching,
    Path,
    TargetSpec,
    apply_vertex_permutation,
    color_class,
    complete_graph,
    degree,
    edge_index,
    max_degree,
    min_degree,
    neighbors,
)
from .oracles import (
    coloring_is_good,
    has_path_of_order,
    longest_path_bruteforce,
    longest_path_order,
    max_matching_size,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeColoring",
    "Graph",
    "InputError",
    "Matching",
    "Path",
    "ResourceError",
    "TargetSpec",
    "apply_vertex_permutation",
    "color_class",
    "coloring_is_good",
    "complete_graph",
    "degree",
    "edge_index",
    "has_path_of_order",
    "longest_path_bruteforce",
    "longest_path_order",
    "max_degree",
    "max_matching_size",
    "min_degree",
    "neighbors",
]
