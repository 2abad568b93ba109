"""Exact Lefschetz-property computations for I_t = (x^{t+1}, y^{t+1}, z^{t+1}, xyz),
its lifting to points and the hyperplane sections J_{t,a}."""

from .combinatorics import (
    STIRLING,
    StirlingTable,
    d_stirling_formula,
    d_subset_sum,
    elementary_symmetric,
    expand_linear_product,
    stirling_unsigned,
)
from .errors import (
    ContextMismatch,
    DivisionByZero,
    IndexOutOfRange,
    InvalidParameter,
    LefschetzError,
    NonArtinianSection,
    NotArtinianInRange,
    NotSquare,
    NotTrueLifting,
)
from .exactfield import (
    QQ,
    FieldCtx,
    Scalar,
    scalar,
    scalar_from_integer,
    scalar_from_string,
    scalar_inv,
    scalar_to_string,
)
from .families import (
    PointSet,
    hilbert_closed_form,
    hyperplane_section,
    ideal_I,
    ideal_J,
    ideal_L,
    in_N,
    lift_monomial,
    lifted_I,
    point_count,
    point_set,
)
from .graded import contains, graded_span_dim, hilbert_function, max_rank_check, mult_map_rank
from .lefschetz import (
    DegreeData,
    LefschetzReport,
    default_samples,
    det_M_closed,
    linear_form,
    matrix_M,
    slp_conjecture_check,
    slp_full,
    witness_check,
    witness_form,
    wlp_full,
    wlp_via_det,
)
from .linalg import DenseMatrix, det_gauss, rank
from .polynomial import HomogPoly, IdealPresentation, monomial_basis

__version__ = "0.1.0"

__all__ = [
    "ContextMismatch",
    "DegreeData",
    "DenseMatrix",
    "DivisionByZero",
    "FieldCtx",
    "HomogPoly",
    "IdealPresentation",
    "IndexOutOfRange",
    "InvalidParameter",
    "LefschetzError",
    "LefschetzReport",
    "NonArtinianSection",
    "NotArtinianInRange",
    "NotSquare",
    "NotTrueLifting",
    "PointSet",
    "QQ",
    "STIRLING",
    "Scalar",
    "StirlingTable",
    "contains",
    "d_stirling_formula",
    "d_subset_sum",
    "default_samples",
    "det_M_closed",
    "det_gauss",
    "elementary_symmetric",
    "expand_linear_product",
    "graded_span_dim",
    "hilbert_closed_form",
    "hilbert_function",
    "hyperplane_section",
    "ideal_I",
    "ideal_J",
    "ideal_L",
    "in_N",
    "lift_monomial",
    "lifted_I",
    "linear_form",
    "matrix_M",
    "max_rank_check",
    "monomial_basis",
    "mult_map_rank",
    "point_count",
    "point_set",
    "rank",
    "scalar",
    "scalar_from_integer",
    "scalar_from_string",
    "scalar_inv",
    "scalar_to_string",
    "slp_conjecture_check",
    "slp_full",
    "stirling_unsigned",
    "witness_check",
    "witness_form",
    "wlp_full",
    "wlp_via_det",
]
