"""A_alpha spectral radii, exact toughness, and numerical checks of
spectral conditions for a graph to be t-tough."""

from .graph import (
    Graph,
    clique_join,
    complete,
    complete_bipartite,
    components_after_removal,
    cycle,
    disjoint_union,
    edgeless,
    family_g2,
    family_g3,
    family_gs2,
    join,
    path,
    star,
)
from .formats import FormatError, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .spectral import (
    EPS,
    Cubic,
    Spectrum,
    a_alpha_matrix,
    alpha_edge_bound,
    full_spectrum,
    largest_root,
    phi_b1_cubic,
    spectral_radius,
    theorem11_cubic,
)
from .partition import (
    Partition,
    gs2_partition,
    interlacing_bound_check,
    is_equitable,
    quotient_matrix,
    quotient_spectrum_check,
)
from .toughness import Toughness, is_t_tough, toughness, worst_cut
from .theorems import (
    PreconditionError,
    TheoremVerdict,
    check_theorem_1_1,
    check_theorem_1_2,
    f_alpha,
    is_extremal_1tough,
    is_extremal_ttough,
    lemma23_ordering_check,
    theorem11_threshold,
    theorem12_min_order,
    theorem12_n_min,
)
from .audit import AuditReport, audit_claim1_section3, audit_theorem12_chain
from .scan import ScanReport, exhaustive_scan_theorem_1_1, scan_graph_stream

__version__ = "0.1.0"
