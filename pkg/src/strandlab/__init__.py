"""Exceptional sequences of type-A quivers and their combinatorial models.

Hom/Ext data, strand diagrams, c-matrices, mixed cobinary trees and
noncrossing-partition chains, with maps between them and exhaustive checks.
"""

from .errors import (
    InvalidInput,
    InvalidVertex,
    InvariantError,
    NotACollection,
    ResourceLimit,
    StrandlabError,
    UnsupportedOrientation,
)
from .signs import SignVector, all_sign_vectors
from .quiver import (
    CMatrix,
    ExchangeMatrix,
    IceQuiver,
    build_coframed_type_a,
    build_framed_type_a,
    c_matrix,
    check_reddening_terminal,
    enumerate_c_matrices,
    explore_exchange_graph,
    mutate,
    mutate_sequence,
    vertex_color,
)
from .reps import (
    HomExtProfile,
    IntervalRep,
    enumerate_exceptional_sequences,
    euler_form,
    hom_ext,
    is_exceptional_pair,
    order_collection,
    verify_speyer_thomas,
)
from .strands import (
    Diagram,
    LabeledDiagram,
    OrientedDiagram,
    OrientedStrand,
    Strand,
    clockwise_from,
    cmatrix_of_oriented,
    crosses,
    enumerate_diagrams,
    enumerate_labeled,
    is_good_labeling,
    arrow_violation,
    is_in_D_arrow,
    oriented_of_cmatrix,
    phi,
    phi_inverse,
    phi_tilde,
    phi_tilde_inverse,
    validate_diagram,
)
from .mct import MixedCobinaryTree, cmatrix_of_mct, is_valid_mct, mct_to_oriented, realize, region_contains
from .posets import (
    Poset,
    count_linear_extensions,
    count_trees_with_leaves,
    poset_of_diagram,
    realize_poset,
    rotate,
)
from .chains import (
    NoncrossingPartition,
    PartitionChain,
    chain_of_labeled_diagram,
    labeled_diagram_of_chain,
)

__version__ = "0.1.0"
