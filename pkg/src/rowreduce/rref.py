"""Reduced row-echelon form: the predicate, the reduction, rank and lead indices.

The reduction is deterministic and its pivot choice is fixed: among the rows
not yet reduced, take the one whose first nonzero entry has the smallest
column, breaking ties toward the smallest row index. Each step scales the
pivot row to a leading 1, swaps it into place (a swap of a row with itself is
a legal no-op), and clears the pivot column from the bottom row upward.
Operation traces in :mod:`rowreduce.rowops` replay exactly these steps, so the
order here is part of the contract.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import UsageError
from .field import FieldElement
from .matrix import FList, Matrix, _check_index, flist_is_zero


def first_nonzero(r: Sequence[FieldElement]) -> int:
    """Index of the first nonzero entry of ``r``, or ``len(r)`` if there is none."""
    for j, x in enumerate(r):
        if x._v:
            return j
    return len(r)


def row_with_nonzero_at_least_index(a: Matrix, m: int, k: int) -> Optional[int]:
    """Pivot row among rows ``k..m-1``, or ``None`` if they are all zero."""
    if not 0 <= k <= m <= a.nrows:
        raise UsageError(f"need 0 <= k <= m <= {a.nrows}, got k={k}, m={m}")
    best, best_j = None, None
    for i in range(k, m):
        r = a.rows[i]
        if flist_is_zero(r):
            continue
        j = first_nonzero(r)
        if best is None or j < best_j:
            best, best_j = i, j
    return best


def _column_clear(a: Matrix, k: int, j: int, m: int) -> bool:
    for i in range(m):
        x = a.rows[i][j]
        if i == k:
            if x._v != 1:
                return False
        elif x._v:
            return False
    return True


def is_row_echelon(a: Matrix) -> bool:
    """True iff ``a`` is in reduced row-echelon form.

    For each prefix length k, the pivot row chosen among rows k-1.. must be
    row k-1 itself, with a leading 1 that is alone in its column.
    """
    m = a.nrows
    for k in range(1, m + 1):
        i = row_with_nonzero_at_least_index(a, m, k - 1)
        if i is None:
            continue
        if i != k - 1 or not _column_clear(a, i, first_nonzero(a.rows[i]), m):
            return False
    return True


def _replace(a: Matrix, k: int, r: FList) -> Matrix:
    rows = a.rows
    return Matrix._from_rows(a.field, rows[:k] + (r,) + rows[k + 1:])


def ero_scale(a: Matrix, c: FieldElement, k: int) -> Matrix:
    """Multiply row ``k`` by ``c``. Any ``c`` is accepted here, zero included."""
    _check_index(k, a.nrows, "row")
    c = a.field(c)
    return _replace(a, k, tuple(c * x for x in a.rows[k]))


def ero_addmul(a: Matrix, c: FieldElement, j: int, k: int) -> Matrix:
    """Add ``c`` times row ``j`` to row ``k`` (``j != k``)."""
    _check_index(j, a.nrows, "row")
    _check_index(k, a.nrows, "row")
    if j == k:
        raise UsageError("ero_addmul needs two distinct rows")
    c = a.field(c)
    if not c._v:
        return a
    return _replace(a, k, tuple(c * x + y for x, y in zip(a.rows[j], a.rows[k])))


def ero_swap(a: Matrix, j: int, k: int) -> Matrix:
    """Exchange rows ``j`` and ``k``; ``j == k`` leaves ``a`` unchanged."""
    _check_index(j, a.nrows, "row")
    _check_index(k, a.nrows, "row")
    if j == k:
        return a
    rows = list(a.rows)
    rows[j], rows[k] = rows[k], rows[j]
    return Matrix._from_rows(a.field, tuple(rows))


def clear_column(a: Matrix, k: int, j: int, m: int) -> Matrix:
    """Zero column ``j`` outside row ``k`` in rows ``0..m-1``; needs ``a[k, j] == 1``."""
    if not 0 <= m <= a.nrows:
        raise UsageError(f"row count {m} out of range [0, {a.nrows}]")
    _check_index(j, a.ncols, "column")
    if m and not (0 <= k < a.nrows and a.rows[k][j]._v == 1):
        raise UsageError(f"clear_column needs a 1 at ({k}, {j})")
    for r in range(m - 1, -1, -1):
        if r != k:
            a = ero_addmul(a, -a.rows[r][j], k, r)
    return a


def _step(a: Matrix, m: int, k: int, i: int, j: int) -> Matrix:
    a = ero_scale(a, a.rows[i][j].inverse(), i)
    a = ero_swap(a, i, k)
    return clear_column(a, k, j, m)


def row_reduce_step(a: Matrix, m: int, k: int, i: int, j: int) -> Matrix:
    """One reduction step: pivot at row ``i``, column ``j``, moved to row ``k``.

    ``i`` and ``j`` must be the pivot row and its leading column as chosen by
    :func:`row_with_nonzero_at_least_index` and :func:`first_nonzero`.
    """
    if not 0 <= k < m <= a.nrows:
        raise UsageError(f"need 0 <= k < m <= {a.nrows}, got k={k}, m={m}")
    expected = row_with_nonzero_at_least_index(a, m, k)
    if i != expected:
        raise UsageError(f"pivot row for k={k} is {expected}, not {i}")
    if j != first_nonzero(a.rows[i]):
        raise UsageError(f"leading column of row {i} is {first_nonzero(a.rows[i])}, not {j}")
    return _step(a, m, k, i, j)


def row_reduce(a: Matrix) -> Matrix:
    m = a.nrows
    for k in range(m):
        i = row_with_nonzero_at_least_index(a, m, k)
        if i is None:
            break
        a = _step(a, m, k, i, first_nonzero(a.rows[i]))
    return a


def num_nonzero_rows(a: Matrix) -> int:
    """Length of the leading run of nonzero rows."""
    count = 0
    for r in a.rows:
        if flist_is_zero(r):
            break
        count += 1
    return count


def row_rank(a: Matrix) -> int:
    return num_nonzero_rows(row_reduce(a))


def lead_inds(a: Matrix) -> tuple[int, ...]:
    """Leading columns of the nonzero rows, scanning until the first zero row.

    Meaningful for matrices already in reduced row-echelon form.
    """
    out = []
    for r in a.rows:
        if flist_is_zero(r):
            break
        out.append(first_nonzero(r))
    return tuple(out)


def free_inds(a: Matrix, n: int | None = None) -> tuple[int, ...]:
    """Columns in ``0..n-1`` that are not lead indices of ``a``."""
    if n is None:
        n = a.ncols
    lead = set(lead_inds(a))
    return tuple(j for j in range(n) if j not in lead)
