"""k-proper colorings and the k-proper index of small graphs."""

from .graph import (
    Graph,
    GraphError,
    SizeCapError,
    are_isomorphic,
    bridge_stats,
    degree_stats,
    encode_graph6,
    hamilton_path,
    hamilton_path_exists,
    is_connected,
    parse_graph6,
    spanning_trees,
)
from .coloring import (
    EdgeColoring,
    TreeWitness,
    chi_prime,
    is_proper_tree,
    is_rainbow_tree,
    proper_edge_color_tree,
    proper_s_tree_exists,
    rainbow_s_tree_exists,
    verify_k_proper,
    verify_k_rainbow,
)
from .solver import bounds, min_spanning_tree_delta, solve_px, solve_rx
from .constructions import (
    FamilySpec,
    build,
    color_snpp,
    color_traceable,
    color_unicyclic,
    derive_figure1_variants,
)
from .characterize import classify, survey
from .certificate import certificate_to_dict, check_certificate

__version__ = "0.1.0"
