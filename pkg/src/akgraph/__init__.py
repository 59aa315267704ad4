"""Graphs whose every spanning tree has a perfect matching, and anti-Kekule numbers."""
from .antikekule import AkKind, AkResult, anti_kekule_number, is_anti_kekule_set
from .exceptions import (
    BoundExhausted,
    DisconnectedGraphError,
    EdgeListError,
    Graph6Error,
    Graph6LongFormError,
    GraphError,
    NotATreeError,
    OrderTooLargeError,
    PreconditionError,
    StructureError,
    TreeCapExceeded,
)
from .extremal import extremal_graphs, f, max_size_search
from .generators import (
    complete_graph,
    compose,
    corona,
    cycle_graph,
    join,
    path_graph,
    pendant_replace,
    star_graph,
)
from .graph import (
    BlockCutDecomposition,
    Graph,
    block_cut_decomposition,
    components,
    cut_vertices,
    is_connected,
    is_isomorphic,
    is_nonseparable,
    labeled_graphs,
    odd_component_count,
)
from .io import encode_graph6, parse_edge_list, parse_graph6
from .kekule import (
    BaseCycle,
    BaseEdge,
    Corona,
    Glue,
    Recognition,
    Witness,
    lift_witness,
    recognize,
    recognize_oracle,
    sample_member,
    sample_pm_tree,
    verify_certificate,
)
from .matching import (
    EdgeClass,
    Matching,
    TutteWitness,
    classify_edge,
    has_perfect_matching,
    maximum_matching,
    tutte_witness,
)
from .spanning import (
    any_spanning_tree,
    bollobas_structure,
    enumerate_spanning_trees,
    lemma23_witness_tree,
    minimally_2connected_spanning,
    tree_perfect_matching,
    tree_pm_criterion,
)

__version__ = "0.1.0"
