"""Determinants, cofactors and the classical adjoint.

``det`` uses fraction-free (Bareiss) elimination: every division is exact,
so over the rationals intermediate entries of an integer matrix stay integral.
Cofactors come from determinants of minors.
"""

from __future__ import annotations

from .errors import UsageError
from .field import FieldElement
from .matrix import FList, Matrix, _check_index, transpose


def _require_square(a: Matrix, min_n: int = 1):
    if a.nrows != a.ncols:
        raise UsageError(f"expected a square matrix, got {a.nrows}x{a.ncols}")
    if a.nrows < min_n:
        raise UsageError(f"expected n >= {min_n}, got n = {a.nrows}")


def _bareiss(rows, field) -> FieldElement:
    n = len(rows)
    m = [list(r) for r in rows]
    one = field.one()
    sign = one
    prev = one
    for k in range(n - 1):
        if not m[k][k]._v:
            p = next((i for i in range(k + 1, n) if m[i][k]._v), None)
            if p is None:
                return field.zero()
            m[k], m[p] = m[p], m[k]
            sign = -sign
        piv = m[k][k]
        inv_prev = prev.inverse()
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            lead = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * piv - lead * mk[j]) * inv_prev
        prev = piv
    return sign * m[n - 1][n - 1]


def det(a: Matrix) -> FieldElement:
    _require_square(a)
    return _bareiss(a.rows, a.field)


def _minor_rows(rows, i, j):
    return [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]


def cofactor(i: int, j: int, a: Matrix) -> FieldElement:
    """Signed minor ``(-1)^(i+j) det(a without row i, column j)``."""
    _require_square(a, 2)
    _check_index(i, a.nrows, "row")
    _check_index(j, a.ncols, "column")
    d = _bareiss(_minor_rows(a.rows, i, j), a.field)
    return -d if (i + j) % 2 else d


def cofactor_row(i: int, a: Matrix) -> FList:
    """Row ``i`` of the cofactor matrix of ``a``.

    ``cofactor_row(i, transpose(a))`` is row ``i`` of ``adjoint_mat(a)``.
    """
    _require_square(a, 2)
    _check_index(i, a.nrows, "row")
    return tuple(cofactor(i, j, a) for j in range(a.ncols))


def cofactor_mat(a: Matrix) -> Matrix:
    _require_square(a, 2)
    return Matrix._from_rows(a.field, tuple(cofactor_row(i, a) for i in range(a.nrows)))


def adjoint_mat(a: Matrix) -> Matrix:
    """Classical adjoint (transpose of the cofactor matrix), ``n >= 2``.

    Satisfies ``a @ adjoint_mat(a) == det(a) * I``.
    """
    return transpose(cofactor_mat(a))
