"""Elementary row operations as values, and the trace of a reduction.

Three kinds of operation, with their tuple encodings::

    Scale(c, k)      (1, c, k)      row k *= c          (c != 0)
    AddMul(c, j, k)  (2, c, j, k)   row k += c * row j  (j != k)
    Swap(j, k)       (3, j, k)      exchange rows j, k  (j == k allowed)

:func:`row_reduce_ops` records the operations :func:`rowreduce.rref.row_reduce`
performs, zero-coefficient ``AddMul`` steps included, so a trace can be
replayed on the original matrix or multiplied out into the reduction
matrix ``P`` with ``P @ a == row_reduce(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import UsageError
from .field import FieldElement, FieldSpec
from .matrix import Matrix, id_mat
from .rref import (
    ero_addmul,
    ero_scale,
    ero_swap,
    first_nonzero,
    lead_inds,
    num_nonzero_rows,
    row_reduce,
    row_with_nonzero_at_least_index,
    _step,
)


def _index(i, what):
    if isinstance(i, bool) or not isinstance(i, int) or i < 0:
        raise UsageError(f"{what} must be a non-negative integer, got {i!r}")


@dataclass(frozen=True)
class Scale:
    c: FieldElement
    k: int

    def __post_init__(self):
        if not isinstance(self.c, FieldElement):
            raise UsageError("Scale coefficient must be a FieldElement")
        if self.c.is_zero():
            raise UsageError("Scale coefficient must be nonzero")
        _index(self.k, "row index")

    @property
    def encoding(self):
        return (1, self.c, self.k)

    def rows(self):
        return (self.k,)


@dataclass(frozen=True)
class AddMul:
    c: FieldElement
    j: int
    k: int

    def __post_init__(self):
        if not isinstance(self.c, FieldElement):
            raise UsageError("AddMul coefficient must be a FieldElement")
        _index(self.j, "row index")
        _index(self.k, "row index")
        if self.j == self.k:
            raise UsageError("AddMul needs two distinct rows")

    @property
    def encoding(self):
        return (2, self.c, self.j, self.k)

    def rows(self):
        return (self.j, self.k)


@dataclass(frozen=True)
class Swap:
    j: int
    k: int

    def __post_init__(self):
        _index(self.j, "row index")
        _index(self.k, "row index")

    @property
    def encoding(self):
        return (3, self.j, self.k)

    def rows(self):
        return (self.j, self.k)


RowOp = Union[Scale, AddMul, Swap]


def from_encoding(code: Sequence, field: FieldSpec) -> RowOp:
    """Decode ``(1 c k)``, ``(2 c j k)`` or ``(3 j k)``."""
    code = tuple(code)
    kind = code[0] if code else None
    if kind == 1 and len(code) == 3:
        return Scale(field(code[1]), code[2])
    if kind == 2 and len(code) == 4:
        return AddMul(field(code[1]), code[2], code[3])
    if kind == 3 and len(code) == 3:
        return Swap(code[1], code[2])
    raise UsageError(f"not a row-operation encoding: {code!r}")


def is_row_op(op, m: int) -> bool:
    """Whether ``op`` is a valid operation on a matrix with ``m`` rows."""
    return isinstance(op, (Scale, AddMul, Swap)) and all(r < m for r in op.rows())


def _check_op(op, m):
    if not is_row_op(op, m):
        raise UsageError(f"{op!r} is not a valid row operation for {m} rows")


@dataclass(frozen=True)
class RowOpTrace:
    """An ordered list of row operations, each valid for ``row_count`` rows."""

    ops: tuple
    row_count: int

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            _check_op(op, self.row_count)

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __getitem__(self, i):
        return self.ops[i]

    @property
    def encodings(self):
        return tuple(op.encoding for op in self.ops)


def _ops_of(ops) -> tuple:
    return ops.ops if isinstance(ops, RowOpTrace) else tuple(ops)


def apply_row_op(op: RowOp, a: Matrix) -> Matrix:
    _check_op(op, a.nrows)
    if isinstance(op, Scale):
        return ero_scale(a, op.c, op.k)
    if isinstance(op, AddMul):
        return ero_addmul(a, op.c, op.j, op.k)
    return ero_swap(a, op.j, op.k)


def apply_row_ops(ops: Union[RowOpTrace, Iterable[RowOp]], a: Matrix) -> Matrix:
    """Apply ``ops`` left to right."""
    for op in _ops_of(ops):
        a = apply_row_op(op, a)
    return a


def _clear_column_ops(a, k, j, m, out):
    for r in range(m - 1, -1, -1):
        if r != k:
            c = -a.rows[r][j]
            out.append(AddMul(c, k, r))
            a = ero_addmul(a, c, k, r)


def row_reduce_step_ops(a: Matrix, m: int, k: int, i: int, j: int) -> list:
    """The operations performed by one :func:`~rowreduce.rref.row_reduce_step`."""
    c = a.rows[i][j].inverse()
    out = [Scale(c, i), Swap(i, k)]
    _clear_column_ops(ero_swap(ero_scale(a, c, i), i, k), k, j, m, out)
    return out


def row_reduce_ops(a: Matrix) -> RowOpTrace:
    m = a.nrows
    out = []
    for k in range(m):
        i = row_with_nonzero_at_least_index(a, m, k)
        if i is None:
            break
        j = first_nonzero(a.rows[i])
        out.extend(row_reduce_step_ops(a, m, k, i, j))
        a = _step(a, m, k, i, j)
    return RowOpTrace(tuple(out), m)


def _field_for(ops, field):
    if field is not None:
        return field
    for op in ops:
        if not isinstance(op, Swap):
            return op.c.field
    raise UsageError("field cannot be inferred from a swap-only trace; pass field=")


def elem_mat(op: RowOp, m: int, field: FieldSpec | None = None) -> Matrix:
    """The operation applied to the ``m x m`` identity."""
    return apply_row_op(op, id_mat(m, _field_for((op,), field)))


def row_ops_mat(ops: Union[RowOpTrace, Iterable[RowOp]], m: int,
                field: FieldSpec | None = None) -> Matrix:
    """Product of the elementary matrices of ``ops``, last operation leftmost.

    Built by replaying ``ops`` on the identity, which yields the same matrix
    as the right-to-left product in O(len(ops) * m) work.
    """
    ops = _ops_of(ops)
    return apply_row_ops(ops, id_mat(m, _field_for(ops, field)))


def row_reduce_mat(a: Matrix) -> Matrix:
    return row_ops_mat(row_reduce_ops(a), a.nrows, a.field)


def invert_row_op(op: RowOp) -> RowOp:
    if isinstance(op, Scale):
        return Scale(op.c.inverse(), op.k)
    if isinstance(op, AddMul):
        return AddMul(-op.c, op.j, op.k)
    if isinstance(op, Swap):
        return op
    raise UsageError(f"not a row operation: {op!r}")


def invert_row_ops(ops: Union[RowOpTrace, Iterable[RowOp]]):
    """Inverses of ``ops`` in reverse order; a trace in gives a trace out."""
    inverted = tuple(invert_row_op(op) for op in reversed(_ops_of(ops)))
    if isinstance(ops, RowOpTrace):
        return RowOpTrace(inverted, ops.row_count)
    return inverted


@dataclass(frozen=True)
class ReductionReport:
    """Everything one reduction of ``a`` produces, computed once and shared."""

    rref: Matrix
    rank: int
    lead_inds: tuple
    trace: RowOpTrace
    p_mat: Matrix


def reduction_report(a: Matrix) -> ReductionReport:
    trace = row_reduce_ops(a)
    r = row_reduce(a)
    return ReductionReport(
        rref=r,
        rank=num_nonzero_rows(r),
        lead_inds=lead_inds(r),
        trace=trace,
        p_mat=row_ops_mat(trace, a.nrows, a.field),
    )
