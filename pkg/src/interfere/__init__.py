"""Exact analysis of set-valued "interference" labelings on small graphs.

A labeling assigns each vertex a distinct nonempty subset of a ground set;
it interferes for a target vertex set D when every outside vertex shares a
label element with some neighbor inside D.  The package decides these
predicates, computes smallest-ground-set interference indices by complete
search, evaluates the structural criteria for neighborhood-derived, edge
(line-graph) and distance-pattern labelings, and cross-checks everything
against brute-force definitional oracles over exhaustive small-graph
catalogs.
"""

from .bitset import bit_list, iter_bits, mask_of
from .catalog import (
    MAX_CATALOG_N,
    all_graphs,
    certificate,
    connected_graphs,
    connected_graphs_upto,
    graphs_upto,
)
from .core import (
    Pattern,
    SetLabeling,
    Violation,
    build_complete_interference,
    expand_pattern,
    interference_violation,
    is_complete_interference,
    is_interference,
    is_pattern_interference,
    is_valid_labeling,
    random_labeling,
)
from .domination import (
    DominatingSetFamily,
    all_dominating_sets,
    is_dominating,
    is_minimal_dominating,
    minimal_dominating_sets,
)
from .dpd import (
    DistancePattern,
    distance_pattern,
    dpd_interference_check,
    is_dpd_set,
    path_dpd_set,
)
from .errors import (
    CapExceededError,
    GraphFormatError,
    HypothesisViolation,
    InterfereError,
    NoDominatingSetError,
    SearchBudgetExceeded,
)
from .families import (
    complete,
    complete_bipartite,
    crown,
    cycle,
    generate_family,
    helm,
    husimi,
    matching,
    parse_family_spec,
    path,
    star,
    star_polygon,
    wheel,
    windmill,
)
from .graphs import (
    INFINITY,
    Graph,
    bfs_distances,
    closed_neighborhood,
    complemented_neighborhood,
    components,
    diameter,
    distance,
    distance_to_set,
    edge_adjacency_masks,
    edge_in_triangle,
    fingerprint,
    from_edge_list,
    from_graph6,
    independence_number,
    induced_subgraph,
    is_connected,
    is_point_determining,
    is_regular,
    line_graph,
    min_max_degree,
    open_neighborhood,
    second_neighborhood,
    to_edge_list_text,
    to_graph6,
)
from .index_search import (
    DEFAULT_BUDGET,
    CrossIntersectingResult,
    IndexResult,
    PhaseOutcome,
    bipartite_index,
    bipartite_index_upper_bound,
    bipartite_side_index,
    ceil_log2,
    exists_interference,
    index_lower_bound,
    interference_index,
    max_cross_intersecting,
    universal_upper_bound,
)
from .linegraph import (
    InjectivityReport,
    LineCompleteReport,
    edge_mask,
    line_complemented_independence_rule,
    line_complemented_interference_of,
    line_complemented_regular_rule,
    line_complemented_size_rule,
    line_complete,
    line_complete_report,
    line_injective,
    line_injectivity_report,
    line_interference_of,
    line_singleton,
)
from .neighborhood import (
    DEGREE_SUM_RULE,
    DISTANCE2_RULE,
    REGULAR_RULE,
    LabelingReport,
    SelfCheck,
    closed_neighborhood_selfcheck,
    complemented_complete,
    complemented_interference_of,
    complemented_labeling,
    complemented_sufficient_rule,
    neighborhood_all_but_one,
    neighborhood_complete,
    neighborhood_interference_of,
    neighborhood_labeling,
    neighborhood_singleton,
    two_path_complete,
)

__version__ = "0.1.0"
