"""k-trees and their reduction to minimally k-edge-connected graphs."""

from .connectivity import (
    ConnectivityVerdict,
    CutCertificate,
    brute_force_edge_connectivity,
    edge_connectivity,
    is_insensitive,
    is_k_edge_connected,
    is_minimally_k_edge_connected,
    local_edge_connectivity,
)
from .generators import GenSpec, book_two_tree, path_two_tree, random_ktree
from .graph import Edge, Graph, GraphError, degree, from_edge_list, remove_edge, to_edge_list
from .ktree import (
    EdgeCliqueIndex,
    KTreeTrace,
    RecognitionFailure,
    build_ktree,
    edge_clique_index,
    enumerate_cliques,
    recognize_ktree,
    simplicial_vertices,
)
from .reduction import Mode, ReductionReport, check_f_bounds, reduce_k_tree, reduce_two_tree

__version__ = "0.1.0"
