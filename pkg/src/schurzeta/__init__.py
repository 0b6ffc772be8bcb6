"""Exact computation and verification of truncated interpolated Schur
multiple zeta values over pluggable coefficient rings."""

from .errors import DomainError, NonInvertibleError
from .rings import (
    MonomialPolynomial,
    PolyRing,
    QQ,
    QSeries,
    QSeriesRing,
    QsymRing,
    RationalRing,
    Ring,
    TPoly,
    format_rational,
    parse_rational,
    q_integer,
    qseries_invert,
    ring_determinant,
    tpoly_substitute_one_minus_t,
)
from .shapes import (
    BitStats,
    BitTableau,
    OrderedFilling,
    Partition,
    Tableau,
    admissible_baselines,
    bit_tableau_stats,
    build_bit_tableau,
    corners,
    count_oyt,
    enumerate_oyt,
    partitions_of,
    partitions_up_to,
)
from .values import (
    CoefficientMap,
    DiagonalWeights,
    coefficient_map_for,
    corner_condition,
    diagonal_tableau,
    linear_value,
    linear_value_by_recursion,
    merge_expansion,
    q_analogue_map,
    quasisymmetric_map,
    rational_map,
    required_offsets,
    schur_value,
)
from .lattice import (
    LatticePath,
    LayerReport,
    PathSystem,
    Vertex,
    black,
    edge_kind,
    edge_weight,
    enumerate_path_systems,
    layer_check,
    lgv_determinant,
    lgv_signed_sum,
    path_from_edge_kinds,
    path_matrix,
    path_weight_sum,
    schur_path_endpoints,
    schur_scenario_sum,
    white,
)
from .jacobi_trudi import (
    JTMatrixSpec,
    JTReport,
    PalindromeReport,
    build_jt_matrix,
    verify_jacobi_trudi,
    verify_palindromic_matrix,
)

__version__ = "0.1.0"
