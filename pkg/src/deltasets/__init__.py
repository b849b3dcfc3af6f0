"""Exact small-set decomposition invariants for finite graphs.

The package computes degree power means, decides the small / delta-k-small /
alpha-small predicates in exact arithmetic, finds the largest feasible set
sizes and the minimum decompositions for each kind, solves clique,
independence, and chromatic numbers exactly at desk scale, and machine-checks
every degree bound that relates them, including a scanner for graphs whose
reciprocal-sum partition number misses the whole power-mean staircase.
"""

from .bounds import (
    BoundReport,
    BoundRow,
    ScanRecord,
    SimplexCheck,
    SimplexFuzzResult,
    SimplexPoint,
    avg_degree_lower_bound,
    bound_applicability,
    build_report,
    caro_wei_bound,
    delta_small_size_bound,
    max_degree_upper_bound,
    partition_power_mean_check,
    power_mean_lower_bound,
    report_csv_rows,
    report_to_dict,
    scan_record_to_dict,
    scan_records,
    simplex_check,
    simplex_fuzz,
    simplex_hill_climb,
    simplex_scan,
    size_upper_bounds,
    verify_corpus,
)
from .errors import (
    DeltaSetsError,
    GenerationError,
    ParseError,
    SizeLimitError,
    StabilizationError,
)
from .extremal import (
    SizeCurve,
    degree_order,
    max_delta_small_size,
    max_small_size,
    size_curve,
    stabilization_index,
)
from .graphs import (
    Graph,
    GraphInputWarning,
    VertexSet,
    emit_dimacs,
    emit_edge_list,
    enumerate_graphs,
    from_edge_list,
    gen_gnp,
    gen_regular,
    parse_dimacs,
    parse_edge_list,
)
from .partition import (
    Partition,
    PartitionCurve,
    PartitionResult,
    brute_min_parts,
    chromatic_number,
    clique_number,
    greedy_partition,
    independence_number,
    make_partition,
    min_partition,
    partition_curve,
)
from .smallness import (
    PowerSum,
    SmallnessVerdict,
    degree_power_mean,
    is_alpha_small,
    is_delta_small,
    is_small,
    power_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BoundRow",
    "DeltaSetsError",
    "GenerationError",
    "Graph",
    "GraphInputWarning",
    "ParseError",
    "Partition",
    "PartitionCurve",
    "PartitionResult",
    "PowerSum",
    "ScanRecord",
    "SimplexCheck",
    "SimplexFuzzResult",
    "SimplexPoint",
    "SizeCurve",
    "SizeLimitError",
    "SmallnessVerdict",
    "StabilizationError",
    "VertexSet",
    "avg_degree_lower_bound",
    "bound_applicability",
    "brute_min_parts",
    "build_report",
    "caro_wei_bound",
    "chromatic_number",
    "clique_number",
    "degree_order",
    "degree_power_mean",
    "delta_small_size_bound",
    "emit_dimacs",
    "emit_edge_list",
    "enumerate_graphs",
    "from_edge_list",
    "gen_gnp",
    "gen_regular",
    "greedy_partition",
    "independence_number",
    "is_alpha_small",
    "is_delta_small",
    "is_small",
    "make_partition",
    "max_degree_upper_bound",
    "max_delta_small_size",
    "max_small_size",
    "min_partition",
    "parse_dimacs",
    "parse_edge_list",
    "partition_curve",
    "partition_power_mean_check",
    "power_mean_lower_bound",
    "power_sum",
    "report_csv_rows",
    "report_to_dict",
    "scan_record_to_dict",
    "scan_records",
    "simplex_check",
    "simplex_fuzz",
    "simplex_hill_climb",
    "simplex_scan",
    "size_curve",
    "size_upper_bounds",
    "stabilization_index",
    "verify_corpus",
]
