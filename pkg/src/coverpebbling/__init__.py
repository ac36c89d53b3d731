"""Cover pebbling numbers of connected graphs.

A pebbling move removes two pebbles from a node and places one on an
adjacent node. A distribution covers a goal w when every node v holds at
least w(v) pebbles. The w-cover pebbling number of a graph is the least n
such that every distribution of n pebbles can be moved into a cover; it
equals the worst single-node cost max_v sum_u w(u) * 2**d(v, u), so the
solver here is closed-form while an exhaustive search oracle and a
constructive concentration procedure keep it honest on small instances.
"""

from .collapse import (
    ChainMove,
    CollapseIteration,
    CollapseReport,
    chain_move,
    collapse_witness,
    efficiency_audit,
    select_fat_thin_pair,
)
from .distributions import (
    Distribution,
    GoalDistribution,
    NodeStatus,
    ValuedDistribution,
    apply_move,
    apply_move_valued,
    classify,
    is_cover,
    parse_distribution,
    parse_goal,
    product_goal,
)
from .errors import (
    BadParamsError,
    BudgetExceededError,
    CheckedOverflowError,
    DimensionMismatchError,
    InsufficientPebblesError,
    InvalidEdgeError,
    MixedDirectednessError,
    NotAnEdgeError,
    NotConnectedError,
    PebblingError,
    ProofViolationError,
    ValueNotPresentError,
)
from .graphs import (
    FAMILY_KINDS,
    Graph,
    build_graph,
    cartesian_product,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    distance_matrix,
    family,
    graph_from_dict,
    graph_to_dict,
    hypercube_graph,
    path_graph,
    read_graph_file,
    shortest_path,
    wheel_graph,
)
from .oracle import (
    BruteForceResult,
    CoverDecision,
    SearchBudget,
    brute_force_cover_number,
    brute_force_search,
    can_cover,
    compositions,
    worst_simple_check,
)
from .solver import (
    CostProfile,
    ProductLawResult,
    closed_form_cover_number,
    cost_from,
    cost_profile,
    cover_pebbling_number,
    product_law_check,
)

__version__ = "0.1.0"

__all__ = [
    "BadParamsError",
    "BruteForceResult",
    "BudgetExceededError",
    "ChainMove",
    "CheckedOverflowError",
    "CollapseIteration",
    "CollapseReport",
    "CostProfile",
    "CoverDecision",
    "DimensionMismatchError",
    "Distribution",
    "FAMILY_KINDS",
    "GoalDistribution",
    "Graph",
    "InsufficientPebblesError",
    "InvalidEdgeError",
    "MixedDirectednessError",
    "NodeStatus",
    "NotAnEdgeError",
    "NotConnectedError",
    "PebblingError",
    "ProductLawResult",
    "ProofViolationError",
    "SearchBudget",
    "ValueNotPresentError",
    "ValuedDistribution",
    "apply_move",
    "apply_move_valued",
    "brute_force_cover_number",
    "brute_force_search",
    "build_graph",
    "can_cover",
    "cartesian_product",
    "chain_move",
    "classify",
    "closed_form_cover_number",
    "collapse_witness",
    "complete_graph",
    "complete_multipartite_graph",
    "compositions",
    "cost_from",
    "cost_profile",
    "cover_pebbling_number",
    "cycle_graph",
    "distance_matrix",
    "efficiency_audit",
    "family",
    "graph_from_dict",
    "graph_to_dict",
    "hypercube_graph",
    "is_cover",
    "parse_distribution",
    "parse_goal",
    "path_graph",
    "product_goal",
    "product_law_check",
    "read_graph_file",
    "select_fat_thin_pair",
    "shortest_path",
    "wheel_graph",
    "worst_simple_check",
]
