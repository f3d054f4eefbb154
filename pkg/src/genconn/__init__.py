"""Exact generalized local connectivity for small graphs."""

__version__ = "0.1.0"

from .canon import canonical_form, is_isomorphic
from .ears import find_cycle_with_ears, kappa3_equals_one, kappa4_equals_one
from .extremal import ExtremalReport, compute_f
from .families import (
    block,
    generate_class,
    is_member,
    k5_counterexample,
    lower_bound_construction,
)
from .generate import enumerate_connected
from .graph import (
    BudgetExceeded,
    Graph,
    add_operation,
    block_decomposition,
    bridges,
    is_connected,
)
from .graph6 import graph_from_graph6, graph_to_graph6
from .packing import (
    cross_edges,
    find_edge_disjoint_spanning_trees,
    kappa_n_equals_one,
    nash_williams_check,
    verify_lemma1,
)
from .steiner import (
    generalized_k_connectivity,
    has_t_disjoint_steiner_trees,
    is_steiner_tree,
    max_generalized_local_connectivity,
    steiner_local_connectivity,
)
from .verify import verify_theorem
