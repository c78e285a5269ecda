"""Terminal Wiener index of trees: exact computation, closed-form bounds,
extremal-family constructors, exhaustive enumeration, and verification
campaigns with deterministic reports."""

from ._version import __version__
from .bounds import (
    Delta3Max,
    DiameterUpperBound,
    GMax,
    LeafBounds,
    delta3_max,
    g1_value,
    g2_value,
    g_max,
    g_value,
    leaf_bounds,
    lower_bound_by_diameter,
    lower_bound_by_leaves,
    spine3_closed_form,
    upper_bound_by_diameter,
)
from .checks import (
    CHECK_IDS,
    FaultInjection,
    StructureReport,
    check_optimal_structure,
    verify_all,
    verify_fig1,
    verify_theorem,
)
from .enumerate_trees import (
    EnumFilter,
    ExtremalResult,
    all_trees,
    caterpillars,
    diameter4_trees,
    diameter5_trees,
    extremal_search,
    trees_matching,
)
from .families import (
    CaterpillarSpec,
    backbone_vector,
    construct_caterpillar,
    construct_delta3_optimal,
    construct_double_broom,
    construct_fig1,
    construct_starlike,
)
from .fopt import (
    FMaxResult,
    ValleyCertificate,
    certify_valley,
    f_max_bruteforce,
    f_max_valley,
    f_value,
)
from .report import VerificationReport, emit_report, render_report_figures
from .tree import (
    CanonicalCode,
    Tree,
    TreeMetrics,
    canonical_code,
    distance,
    format_tree,
    from_edge_list,
    metrics,
    parse_tree,
)
from .tw import tw_backbone, tw_edgecut, tw_pairwise

__all__ = [name for name in dir() if not name.startswith("_")]
