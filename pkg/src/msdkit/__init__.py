"""msdkit: analysis toolkit for minimal strong digraphs.

A strongly connected digraph is minimal (an MSD) when deleting any arc
breaks strong connectivity.  The toolkit checks minimality, evaluates
the linear-vertex bounds that cap cycle lengths, performs
minimality-preserving contractions and subdivisions, computes exact
characteristic polynomials two independent ways, and solves the longest
simple cycle problem exactly with bound-based pruning.
"""

from .analysis import (
    EarDecomposition,
    MsdReport,
    check_c2_lemma,
    check_msd,
    ear_decomposition,
    external_chains,
    is_transitive_arc,
    maximal_chains,
)
from .bounds import (
    BoundReport,
    CycleRecord,
    Witness,
    check_combined_bound,
    check_degree_bound,
    check_every_cycle_vertex_bound,
    check_halfq_bound,
    check_outside_linear_bound,
    full_bound_report,
    longest_cycle_upper_bound,
)
from .digraph import (
    ConsistencyError,
    Digraph,
    GraphError,
    SeqKind,
    VertexSeq,
    build,
    enumerate_simple_cycles,
    is_cut_point,
    is_strongly_connected,
    linear_vertices,
    list_simple_cycles,
)
from .formats import FormatError, format_graph, graph_record, parse_graph, parse_record, to_dot
from .generators import (
    GeneratorConfig,
    directed_cycle,
    enumerate_msds,
    random_msd,
    random_strong_digraph,
)
from .longest_cycle import (
    SearchResult,
    has_cycle_of_length,
    longest_cycle_bruteforce,
    longest_cycle_pruned,
    longest_cycle_search,
)
from .spectral import (
    CharPoly,
    charpoly_cycle_covers,
    charpoly_determinant,
    check_coefficient_bounds,
    count_disjoint_cycle_covers,
)
from .transforms import (
    REDUCE_POLICIES,
    ContractionResult,
    ReductionResult,
    SubdivisionResult,
    contract_chain,
    contract_cycle,
    cycle_degree,
    lift_cycle,
    project_cycle,
    reduce_to_cycle,
    remove_external_chain,
    subdivide,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
