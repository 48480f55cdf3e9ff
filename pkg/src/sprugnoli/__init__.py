"""Exact power series, Riordan-type arrays and the Sprugnoli group.

Everything is computed over the rationals with truncated power series that
track how many coefficients are known.  Arrays are lower-triangular matrices
whose columns are prescribed by generating functions.
"""
from .double import DoubleTriple, build_double, double_inv, double_mul
from .errors import (
    CompositionError,
    DivisionUndefinedError,
    GroupMembershipError,
    NoRationalSqrtError,
    NotInvertibleError,
    NotStripedError,
    PrecisionError,
    ReversionError,
    SeriesError,
    SingularMatrixError,
)
from .expr import ExprSyntaxError, UnknownIdentifierError, evaluate, parse, series, to_text
from .higher import GeneralTuple, build_general, general_apply, general_inv, general_mul, stripe_zero_pattern
from .matrix import Matrix, TriMatrix
from .production import (
    ProductionStripes,
    ab_series_closed_form,
    check_closed_form,
    extract_stripes,
    production_matrix,
    reconstruct,
    recurrence_check,
)
from .riordan import (
    RiordanPair,
    StretchedPair,
    build_riordan,
    build_stretched,
    riordan_apply,
    riordan_inv,
    riordan_mul,
    stretched_apply,
)
from .series import Series, jacobi_cf
from .triple import (
    SprugnoliTriple,
    aeration_split,
    bivariate_gf,
    build_sprugnoli,
    compute_r1,
    compute_r2,
    inverse_parts,
    sprugnoli_apply,
    sprugnoli_inv,
    sprugnoli_mul,
    sums_gf,
)

__version__ = "0.1.0"
