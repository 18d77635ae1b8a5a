"""Exact list colouring of graphs and of Cartesian products with a bipartite factor."""
from .choosability import (
    AssignmentEnumerator,
    ChoosabilityCertificate,
    ListColorResult,
    find_noncolorable_assignment,
    is_k_choosable,
    list_chromatic_number,
    list_color_function,
)
from .chromatic import IntegerPolynomial, chromatic_polynomial, count_k_colorings, plq_equals_p_threshold
from .dsl import evaluate as parse_graph, parse_graph_expression
from .errors import (
    BudgetExceeded,
    InvalidBipartition,
    InvalidParameter,
    ListColorError,
    PreconditionError,
    SizeLimitError,
)
from .gadgets import (
    BadAssignmentConstruction,
    BadColoringVerdict,
    FaReport,
    borowiecki_product_bound,
    construct_bad_assignment,
    construct_bipartite_bad_assignment,
    count_bad_colorings_for_copy,
    fa_bounds,
    is_bad_coloring,
    verify_noncolorable_by_bad_colorings,
)
from .graph import (
    CompleteBipartite,
    ExplicitBipartite,
    Graph,
    ProductGraph,
    cartesian_product,
    chromatic_number,
    coloring_number,
    complete,
    complete_bipartite,
    cycle,
    join,
    path,
)
from .lists import Coloring, ListAssignment, count_l_colorings, enumerate_l_colorings, is_l_colorable
from .strong import (
    StrongCcCertificate,
    check_extension_property,
    is_strongly_chromatic_choosable,
    join_preserves_strong_cc,
)
