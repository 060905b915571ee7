"""Invertibility test and the two inversion methods."""

from __future__ import annotations

from .determinant import _require_square, adjoint_mat, det
from .errors import NotInvertible, UsageError
from .matrix import Matrix, scalar_mul
from .rowops import ReductionReport, reduction_report
from .rref import row_rank

METHODS = ("rref", "adjugate")


def is_invertible(a: Matrix) -> bool:
    _require_square(a)
    return row_rank(a) == a.nrows


def inverse_rref(a: Matrix, report: ReductionReport | None = None) -> Matrix:
    """Inverse as the reduction matrix of ``a``.

    Pass ``report`` to reuse an existing reduction of ``a``.
    Raises :class:`NotInvertible` carrying the row rank when ``a`` is singular.
    """
    _require_square(a)
    if report is None:
        report = reduction_report(a)
    if report.rank != a.nrows:
        raise NotInvertible(report.rank, a.nrows)
    return report.p_mat


def inverse_adjugate(a: Matrix) -> Matrix:
    """``det(a)^-1 * adjoint_mat(a)``; only for ``n >= 2``."""
    _require_square(a)
    if a.nrows < 2:
        raise UsageError("adjugate inversion needs n >= 2; use inverse_rref for 1x1")
    d = det(a)
    if d.is_zero():
        raise NotInvertible(row_rank(a), a.nrows)
    return scalar_mul(d.inverse(), adjoint_mat(a))


def inverse(a: Matrix, method: str = "rref") -> Matrix:
    if method == "rref":
        return inverse_rref(a)
    if method == "adjugate":
        return inverse_adjugate(a)
    raise UsageError(f"unknown inversion method {method!r}; expected one of {METHODS}")
