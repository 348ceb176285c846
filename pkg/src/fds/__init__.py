"""Classification toolkit for finite dynamical systems on binary strings."""

from .anf import (
    Anf,
    TruthTable,
    all_truth_tables,
    anf_to_tt,
    basis_monomials,
    parse_anf,
    tt_to_anf,
)
from .dynamics import (
    LimitCycles,
    StateSpace,
    compose_maps,
    conjugate_by_coord_perm,
    cycle_multiset,
    dep_dot_export,
    dot_export,
    limit_cycles,
    monoid_closure,
    stably_isomorphic,
    state_label,
    state_space,
)
from .errors import (
    BudgetExceededError,
    DimensionCapError,
    DimensionMismatchError,
    FdsError,
    ParseError,
)
from .graphs import (
    DepGraph,
    find_graph_iso,
    graph_equivalent,
    is_d_local,
    linear_system,
    linearize,
    parse_graph,
    parse_perm,
    perm_act,
    psi_cardinality,
    psi_membership,
    sample_psi,
    system_from_matrix,
)
from .schedules import (
    BoundReport,
    OrientedHGraph,
    bound_report,
    brute_force_acyclic_count,
    count_acyclic_orientations,
    enumerate_classes,
    h_graph,
    normal_form,
    word_class,
    words_equivalent,
)
from .system import (
    LocalFunction,
    System,
    apply_local,
    compose_word,
    format_system,
    identity_map,
    local_map,
    parse_system,
    parse_word,
    phi,
    phi_oracle,
    random_system,
)

__all__ = [
    "Anf",
    "TruthTable",
    "all_truth_tables",
    "anf_to_tt",
    "basis_monomials",
    "parse_anf",
    "tt_to_anf",
    "LimitCycles",
    "StateSpace",
    "compose_maps",
    "conjugate_by_coord_perm",
    "cycle_multiset",
    "dep_dot_export",
    "dot_export",
    "limit_cycles",
    "monoid_closure",
    "stably_isomorphic",
    "state_label",
    "state_space",
    "BudgetExceededError",
    "DimensionCapError",
    "DimensionMismatchError",
    "FdsError",
    "ParseError",
    "DepGraph",
    "find_graph_iso",
    "graph_equivalent",
    "is_d_local",
    "linear_system",
    "linearize",
    "parse_graph",
    "parse_perm",
    "perm_act",
    "psi_cardinality",
    "psi_membership",
    "sample_psi",
    "system_from_matrix",
    "BoundReport",
    "OrientedHGraph",
    "bound_report",
    "brute_force_acyclic_count",
    "count_acyclic_orientations",
    "enumerate_classes",
    "h_graph",
    "normal_form",
    "word_class",
    "words_equivalent",
    "LocalFunction",
    "System",
    "apply_local",
    "compose_word",
    "format_system",
    "identity_map",
    "local_map",
    "parse_system",
    "parse_word",
    "phi",
    "phi_oracle",
    "random_system",
]
