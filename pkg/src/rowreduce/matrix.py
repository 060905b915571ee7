"""Dense matrices and flists over an exact field.

An *flist* is a plain tuple of :class:`FieldElement` (a row or a vector). A
:class:`Matrix` is an immutable, non-empty, rectangular tuple of flists that
also records its field, so the identity and zero matrices know where they live.
Every operation validates dimensions and returns a new value.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .errors import FieldMismatch, UsageError
from .field import FieldElement, FieldSpec

FList = Tuple[FieldElement, ...]


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], field: FieldSpec | None = None):
        raw = [list(r) for r in rows]
        if not raw or not raw[0]:
            raise UsageError("matrices must have at least one row and one column")
        n = len(raw[0])
        for i, r in enumerate(raw):
            if len(r) != n:
                raise UsageError(f"row {i} has length {len(r)}, expected {n}")
        if field is None:
            field = next((x.field for r in raw for x in r if isinstance(x, FieldElement)), None)
            if field is None:
                raise UsageError("cannot infer the field; pass field= explicitly")
        built = tuple(tuple(field(x) for x in r) for r in raw)
        _init(self, field, built)

    @classmethod
    def _from_rows(cls, field: FieldSpec, rows: tuple) -> Matrix:
        # Trusted: rows is a non-empty rectangular tuple of tuples of elements in field.
        m = object.__new__(cls)
        _init(m, field, rows)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (Matrix, (self.rows, self.field))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> FList:
        _check_index(i, self.nrows, "row")
        return self.rows[i]

    def col(self, j: int) -> FList:
        return col(j, self)

    def __getitem__(self, ij):
        i, j = ij
        return entry(i, j, self)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        body = " ".join("(" + " ".join(str(x) for x in r) + ")" for r in self.rows)
        return f"Matrix[{self.field!r}]({body})"

    def tolist(self) -> list[list]:
        """Raw canonical values (``Fraction`` or ``int``), row by row."""
        return [[x.value for x in r] for r in self.rows]


def _init(m, field, rows):
    object.__setattr__(m, "field", field)
    object.__setattr__(m, "rows", rows)
    object.__setattr__(m, "nrows", len(rows))
    object.__setattr__(m, "ncols", len(rows[0]))


def _check_index(i, bound, what):
    if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < bound:
        raise UsageError(f"{what} index {i!r} out of range [0, {bound})")


def _check_same_field(a: Matrix, b: Matrix):
    if a.field != b.field:
        raise FieldMismatch(f"field mismatch: {a.field!r} vs {b.field!r}")


def _flist(field: FieldSpec, r: Sequence) -> FList:
    return tuple(field(x) for x in r)


def matrix(field: FieldSpec, rows: Iterable[Iterable]) -> Matrix:
    """Build a matrix from ints, Fractions, strings or elements of ``field``."""
    return Matrix(rows, field)


def flist(field: FieldSpec, values: Iterable) -> FList:
    out = _flist(field, list(values))
    if not out:
        raise UsageError("flists must be non-empty")
    return out


def entry(i: int, j: int, a: Matrix) -> FieldElement:
    _check_index(i, a.nrows, "row")
    _check_index(j, a.ncols, "column")
    return a.rows[i][j]


def _dot(r, c, zero):
    s = zero
    for x, y in zip(r, c):
        if x._v and y._v:
            s = s + x * y
    return s


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise UsageError(f"cannot multiply {a.nrows}x{a.ncols} by {b.nrows}x{b.ncols}")
    _check_same_field(a, b)
    zero = a.field.zero()
    cols = tuple(zip(*b.rows))
    return Matrix._from_rows(a.field, tuple(tuple(_dot(r, c, zero) for c in cols) for r in a.rows))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise UsageError(f"cannot add {a.shape} and {b.shape} matrices")
    _check_same_field(a, b)
    return Matrix._from_rows(
        a.field, tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a.rows, b.rows))
    )


def scalar_mul(c: FieldElement, a: Matrix) -> Matrix:
    c = a.field(c)
    return Matrix._from_rows(a.field, tuple(tuple(c * x for x in r) for r in a.rows))


def transpose(a: Matrix) -> Matrix:
    return Matrix._from_rows(a.field, tuple(zip(*a.rows)))


def id_mat(n: int, field: FieldSpec) -> Matrix:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise UsageError(f"identity size must be a positive integer, got {n!r}")
    zero, one = field.zero(), field.one()
    return Matrix._from_rows(
        field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    )


def zero_mat(m: int, n: int, field: FieldSpec) -> Matrix:
    if m < 1 or n < 1:
        raise UsageError("matrices must have at least one row and one column")
    zero = field.zero()
    return Matrix._from_rows(field, tuple((zero,) * n for _ in range(m)))


def _check_flist(r, n, field, what):
    if len(r) != n:
        raise UsageError(f"{what} has length {len(r)}, expected {n}")
    for x in r:
        if not isinstance(x, FieldElement) or x.field != field:
            raise FieldMismatch(f"{what} entry {x!r} is not an element of {field!r}")


def replace_row(a: Matrix, k: int, r: Sequence[FieldElement]) -> Matrix:
    _check_index(k, a.nrows, "row")
    r = tuple(r)
    _check_flist(r, a.ncols, a.field, "replacement row")
    return Matrix._from_rows(a.field, a.rows[:k] + (r,) + a.rows[k + 1:])


def replace_col(a: Matrix, i: int, b: Sequence[FieldElement]) -> Matrix:
    _check_index(i, a.ncols, "column")
    b = tuple(b)
    _check_flist(b, a.nrows, a.field, "replacement column")
    return Matrix._from_rows(
        a.field, tuple(r[:i] + (x,) + r[i + 1:] for r, x in zip(a.rows, b))
    )


def row(i: int, a: Matrix) -> FList:
    return a.row(i)


def col(j: int, a: Matrix) -> FList:
    _check_index(j, a.ncols, "column")
    return tuple(r[j] for r in a.rows)


def col_mat(x: Sequence[FieldElement]) -> Matrix:
    """The n x 1 column matrix holding ``x``."""
    x = tuple(x)
    if not x:
        raise UsageError("col_mat needs a non-empty flist")
    field = x[0].field
    _check_flist(x, len(x), field, "flist")
    return Matrix._from_rows(field, tuple((v,) for v in x))


def _check_pair(r, x):
    if len(r) != len(x):
        raise UsageError(f"flist lengths differ: {len(r)} vs {len(x)}")


def fdot(r: Sequence[FieldElement], x: Sequence[FieldElement]) -> FieldElement:
    _check_pair(r, x)
    if not r:
        raise UsageError("fdot of empty flists has no field")
    s = r[0].field.zero()
    for u, v in zip(r, x):
        s = s + u * v
    return s


def flist_scalar_mul(c: FieldElement, r: Sequence[FieldElement]) -> FList:
    return tuple(c * x for x in r)


def flist_add(r: Sequence[FieldElement], s: Sequence[FieldElement]) -> FList:
    _check_pair(r, s)
    return tuple(x + y for x, y in zip(r, s))


def flist_is_zero(r: Sequence[FieldElement]) -> bool:
    return not any(x._v for x in r)
