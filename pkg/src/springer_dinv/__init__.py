"""Exact combinatorics of dinv statistics on one-box-per-row skew tableaux,
their symmetric generating functions, and root-counting dimensions of the
cells they index."""
from .dinv import (
    StatCtx,
    admissible_shapes,
    d_descents,
    dinv,
    dinv_dbl,
    dinv_reduced,
    dinv_triple,
    e_of_lambda,
    m_of_lambda,
    max_shape,
    standardize,
)
from .poly import LaurentPoly
from .springer import (
    CellRecord,
    Check,
    cell_dim_root_count,
    cell_records,
    frobenius_cell,
    graded_frobenius,
    nonempty_cells,
    parahoric_cells,
    parahoric_dim_root_count,
    partition_to_p,
    p_to_partition,
)
from .symfunc import (
    QuasiSym,
    SymFunc,
    bigraded_dinv_series,
    dinv_series,
    hall_pair,
    negative_dinv_series,
    omega,
)
from .tableaux import Sign, SkewShape, Tableau, TableauError, enumerate_tableaux, skew_shape
from .affine_weyl import AffineWeylElt, PElement

__version__ = "0.1.0"

__all__ = [
    "StatCtx",
    "admissible_shapes",
    "d_descents",
    "dinv",
    "dinv_dbl",
    "dinv_reduced",
    "dinv_triple",
    "e_of_lambda",
    "m_of_lambda",
    "max_shape",
    "standardize",
    "CellRecord",
    "Check",
    "cell_dim_root_count",
    "cell_records",
    "frobenius_cell",
    "graded_frobenius",
    "nonempty_cells",
    "parahoric_cells",
    "parahoric_dim_root_count",
    "partition_to_p",
    "p_to_partition",
    "QuasiSym",
    "SymFunc",
    "bigraded_dinv_series",
    "dinv_series",
    "hall_pair",
    "negative_dinv_series",
    "omega",
    "LaurentPoly",
    "Sign",
    "SkewShape",
    "Tableau",
    "TableauError",
    "enumerate_tableaux",
    "skew_shape",
    "AffineWeylElt",
    "PElement",
]
