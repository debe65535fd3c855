"""Round-optimal k-set agreement on known dynamic graph sequences.

The package computes the exact number of communication rounds needed to
solve k-set agreement when the whole graph sequence is known in advance
(only the inputs are not), runs the matching flooding algorithm, and
refutes any candidate algorithm that claims to need fewer rounds by
constructing and re-simulating an explicit counterexample.
"""
from .dyngraph import (
    DEFAULT_MAX_ROUNDS,
    EXACT_SEARCH_CAP,
    Arc,
    Digraph,
    DominatingSetResult,
    DynamicGraphSpec,
    Extension,
    closure,
    graph_at,
    greedy_dominating_set,
    load_graph_file,
    min_dominating_set,
    min_rounds,
    save_graph_file,
    spec_from_dict,
    spec_to_dict,
)
from .errors import (
    AlgorithmRangeError,
    AssignmentImpossible,
    BudgetNotBelowBound,
    CapExceeded,
    GraphFormatError,
    KnowAllError,
    LemmaFalsified,
    NoPanchromaticCell,
    NotDominatedWithinCap,
)
from .families import (
    complete_graph,
    directed_cycle,
    directed_path,
    staggered_relay,
    standard_family,
)
from .kuhn import (
    Carrier,
    PrimitiveSimplex,
    SpernerReport,
    Vertex,
    algorithm_coloring,
    assign_node,
    carrier,
    check_sperner,
    color,
    find_panchromatic,
    inp,
    is_vertex,
    primitive_simplices,
    vertices,
)
from .oracle import (
    BRUTE_DOMINATION_CAP,
    EXHAUSTIVE_CONFIG_CAP,
    ExhaustiveReport,
    brute_domination,
    brute_panchromatic,
    exhaustive_check,
    sample_check,
)
from .protocol import (
    MAJORITY_HEARD,
    MAX_HEARD,
    MIN_HEARD,
    AlgorithmSpec,
    InputConfig,
    OutcomeReport,
    View,
    algorithm_by_name,
    builtin_algorithms,
    flood_dominator,
    flood_solve,
    format_inputs,
    parse_inputs,
    run,
    validate_inputs,
    view_of,
)
from .refuter import OutcomeSummary, Witness, WitnessKind, certify, refute

__version__ = "0.1.0"
