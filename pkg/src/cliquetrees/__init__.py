"""Clique trees of chordal graphs and Shearer's law on chordal dependency graphs."""
from .clique_lattice import (
    CliqueFamily,
    CliqueGraph,
    FamilyGraphs,
    FamilyLattice,
    build_clique_graph,
    build_lattice,
    edge_partition,
    enumerate_cliques,
    enumerate_families,
    family_graphs,
    family_of,
)
from .clique_trees import (
    CliqueTreeEnumerator,
    assemble,
    count_clique_trees,
    count_spanning_trees,
    decompose,
    enumerate_clique_trees,
    has_rip,
    rip_ordering,
    spanning_trees_stream,
    validate_cip,
    validate_definition,
    validate_local_max_weight,
    validate_rip,
)
from .errors import (
    CliqueTreeError,
    DisconnectedGraphError,
    GraphFormatError,
    NotACliqueTreeError,
    NotChordalError,
    NotInRegion,
    Verdict,
)
from .graph_core import Graph, Multigraph, contract, find_two_chord, is_chordal, parse_graph
from .separators import (
    clique_tree_union,
    minimal_separators_lattice,
    minimal_separators_oracle,
    reduced_clique_graph,
)
from .shearer import (
    ExactLaw,
    Region,
    TreeOrder,
    build_tree_order,
    c_from_p,
    exact_block_factor_law,
    isp,
    lll_lower_bound,
    p_from_c,
    sample_block_factor,
    shearer_region_membership,
    verify_shearer_law,
    verify_tree_order,
)

__version__ = "0.1.0"
