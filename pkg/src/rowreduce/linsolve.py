"""Linear systems ``a @ x == b``: solvability, unique solutions, Cramer's rule,
and the general solution test.

Everything is driven by one reduction of the coefficient matrix. With
``P = row_reduce_mat(a)``, ``ar = P @ a`` and ``br = P @ col_mat(b)``, the
system is equivalent to ``ar @ x == br``. It is solvable iff ``br`` vanishes
below the rank ``q``. Then only the first ``q`` rows matter (``aq``, ``bq``).
Each of those rows pins one lead variable in terms of the free ones.

In the parametric case the *particular* solution sets every free variable to
zero. That choice is a convention, not part of the characterization.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence, Union

from .determinant import det
from .errors import FieldMismatch, NotInvertible, SolveError, UsageError
from .field import FieldElement
from .matrix import FList, Matrix, _check_index, col, col_mat, mat_mul, replace_col
from .rowops import ReductionReport, reduction_report


@dataclass(frozen=True)
class LinearSystem:
    a: Matrix
    b: FList
    _report: Optional[ReductionReport] = dc_field(default=None, init=False, repr=False,
                                                  compare=False)

    def __post_init__(self):
        b = tuple(self.b)
        if len(b) != self.a.nrows:
            raise UsageError(f"right-hand side has length {len(b)}, expected {self.a.nrows}")
        for x in b:
            if not isinstance(x, FieldElement) or x.field != self.a.field:
                raise FieldMismatch(f"right-hand side entry {x!r} is not in {self.a.field!r}")
        object.__setattr__(self, "b", b)

    @property
    def m(self) -> int:
        return self.a.nrows

    @property
    def n(self) -> int:
        return self.a.ncols

    @property
    def report(self) -> ReductionReport:
        """Reduction of ``a``, computed on first use and cached."""
        if self._report is None:
            object.__setattr__(self, "_report", reduction_report(self.a))
        return self._report

    @property
    def reduced_rhs(self) -> Matrix:
        """``br``: the m x 1 column ``P @ col_mat(b)``."""
        return mat_mul(self.report.p_mat, col_mat(self.b))


@dataclass(frozen=True)
class Unsolvable:
    witness_row: int


@dataclass(frozen=True)
class Unique:
    x: FList


@dataclass(frozen=True)
class Parametric:
    lead_inds: tuple
    free_inds: tuple
    particular: FList


SolveOutcome = Union[Unsolvable, Unique, Parametric]


def _check_x(x, sys: LinearSystem) -> FList:
    x = tuple(x)
    if len(x) != sys.n:
        raise UsageError(f"candidate has length {len(x)}, expected {sys.n}")
    for v in x:
        if not isinstance(v, FieldElement) or v.field != sys.a.field:
            raise FieldMismatch(f"candidate entry {v!r} is not in {sys.a.field!r}")
    return x


def is_solution(x: Sequence[FieldElement], sys: LinearSystem) -> bool:
    x = _check_x(x, sys)
    return mat_mul(sys.a, col_mat(x)) == col_mat(sys.b)


def find_nonzero(br: Matrix, q: int, m: int) -> Optional[int]:
    """Greatest ``k`` in ``[q, m)`` with ``br[k, 0] != 0``, else ``None``."""
    if not 0 <= q <= m <= br.nrows:
        raise UsageError(f"need 0 <= q <= m <= {br.nrows}, got q={q}, m={m}")
    for k in range(m - 1, q - 1, -1):
        if br.rows[k][0]._v:
            return k
    return None


def is_solvable(sys: LinearSystem) -> bool:
    return find_nonzero(sys.reduced_rhs, sys.report.rank, sys.m) is None


def first_rows(q: int, a: Matrix) -> Matrix:
    if not 1 <= q <= a.nrows:
        raise UsageError(f"first_rows needs 1 <= q <= {a.nrows}, got {q}")
    return Matrix._from_rows(a.field, a.rows[:q])


def solve_unique(sys: LinearSystem) -> FList:
    """The unique solution, for a solvable system of full column rank.

    Raises :class:`SolveError` with reason ``"unsolvable"`` or ``"not-unique"``.
    """
    br = sys.reduced_rhs
    q = sys.report.rank
    k = find_nonzero(br, q, sys.m)
    if k is not None:
        raise SolveError("unsolvable", f"system is unsolvable (reduced row {k} reads 0 = nonzero)")
    if q != sys.n:
        raise SolveError("not-unique", f"solution is not unique (rank {q} < {sys.n} unknowns)")
    return col(0, first_rows(sys.n, br))


def solve_cramer(sys: LinearSystem) -> FList:
    """Cramer's rule, ``x_i = det(a with column i := b) / det(a)``; square ``n >= 2`` only."""
    a = sys.a
    if a.nrows != a.ncols:
        raise UsageError(f"Cramer's rule needs a square system, got {a.nrows}x{a.ncols}")
    if a.nrows < 2:
        raise UsageError("Cramer's rule needs n >= 2; use solve_unique for 1x1")
    d = det(a)
    if d.is_zero():
        raise NotInvertible(sys.report.rank, a.nrows)
    inv = d.inverse()
    return tuple(inv * det(replace_col(a, i, sys.b)) for i in range(a.ncols))


def fdot_select(inds: Sequence[int], r: Sequence[FieldElement],
                x: Sequence[FieldElement]) -> FieldElement:
    """Sum of ``r[j] * x[j]`` over ``j`` in ``inds``."""
    if len(r) != len(x):
        raise UsageError(f"flist lengths differ: {len(r)} vs {len(x)}")
    if not r:
        raise UsageError("fdot_select needs non-empty flists")
    s = r[0].field.zero()
    for j in inds:
        _check_index(j, len(r), "index")
        s = s + r[j] * x[j]
    return s


def _reduced_parts(sys: LinearSystem):
    rep = sys.report
    q = rep.rank
    lead = rep.lead_inds
    free = tuple(j for j in range(sys.n) if j not in set(lead))
    aq = rep.rref.rows[:q]
    bq = tuple(r[0] for r in sys.reduced_rhs.rows[:q])
    return aq, bq, lead, free


def solution_test(x: Sequence[FieldElement], sys: LinearSystem) -> bool:
    """Check each lead variable against its row equation; solvable systems only."""
    x = _check_x(x, sys)
    if not is_solvable(sys):
        raise UsageError("solution_test is only defined for solvable systems")
    aq, bq, lead, free = _reduced_parts(sys)
    for i in range(len(lead)):
        if x[lead[i]] != bq[i] - fdot_select(free, aq[i], x):
            return False
    return True


def solution_from_free(sys: LinearSystem, values: Sequence) -> FList:
    """The solution whose free variables take ``values`` (in free-index order)."""
    if not is_solvable(sys):
        raise SolveError("unsolvable", "system is unsolvable")
    aq, bq, lead, free = _reduced_parts(sys)
    values = tuple(sys.a.field(v) for v in values)
    if len(values) != len(free):
        raise UsageError(f"expected {len(free)} free values, got {len(values)}")
    x = [sys.a.field.zero()] * sys.n
    for j, v in zip(free, values):
        x[j] = v
    for i, j in enumerate(lead):
        x[j] = bq[i] - fdot_select(free, aq[i], x)
    return tuple(x)


def solve_general(sys: LinearSystem) -> SolveOutcome:
    k = find_nonzero(sys.reduced_rhs, sys.report.rank, sys.m)
    if k is not None:
        return Unsolvable(k)
    _, _, lead, free = _reduced_parts(sys)
    particular = solution_from_free(sys, [0] * len(free))
    if not free:
        return Unique(particular)
    return Parametric(lead, free, particular)
