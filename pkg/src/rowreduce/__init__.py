"""Exact linear algebra over the rationals and prime fields.

Row reduction with replayable operation traces, inversion by reduction or by
the adjugate, determinants, and linear-system solving.
"""

from .determinant import adjoint_mat, cofactor, cofactor_mat, cofactor_row, det
from .errors import (
    DivisionByZero,
    DomainError,
    FieldMismatch,
    LinAlgError,
    NotInvertible,
    ParseError,
    SolveError,
    UsageError,
)
from .field import GF, QQ, FieldElement, FieldSpec, f_add, f_inv, f_mul, f_neg
from .inverse import inverse, inverse_adjugate, inverse_rref, is_invertible
from .linsolve import (
    LinearSystem,
    Parametric,
    SolveOutcome,
    Unique,
    Unsolvable,
    fdot_select,
    find_nonzero,
    first_rows,
    is_solution,
    is_solvable,
    solution_from_free,
    solution_test,
    solve_cramer,
    solve_general,
    solve_unique,
)
from .matrix import (
    FList,
    Matrix,
    col,
    col_mat,
    entry,
    fdot,
    flist,
    flist_add,
    flist_is_zero,
    flist_scalar_mul,
    id_mat,
    mat_add,
    mat_mul,
    matrix,
    replace_col,
    replace_row,
    row,
    scalar_mul,
    transpose,
    zero_mat,
)
from .rowops import (
    AddMul,
    ReductionReport,
    RowOp,
    RowOpTrace,
    Scale,
    Swap,
    apply_row_op,
    apply_row_ops,
    elem_mat,
    from_encoding,
    invert_row_op,
    invert_row_ops,
    is_row_op,
    reduction_report,
    row_ops_mat,
    row_reduce_mat,
    row_reduce_ops,
    row_reduce_step_ops,
)
from .rref import (
    clear_column,
    ero_addmul,
    ero_scale,
    ero_swap,
    first_nonzero,
    free_inds,
    is_row_echelon,
    lead_inds,
    num_nonzero_rows,
    row_rank,
    row_reduce,
    row_reduce_step,
    row_with_nonzero_at_least_index,
)

__version__ = "0.1.0"
