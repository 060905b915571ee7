"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (singular matrix, no unique
solution when one was demanded), 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import textio
from .determinant import det
from .errors import DomainError, ParseError, UsageError
from .inverse import METHODS, inverse
from .linsolve import (
    LinearSystem,
    Unique,
    is_solution,
    is_solvable,
    solution_test,
    solve_cramer,
    solve_general,
    solve_unique,
)
from .rowops import row_reduce_mat, row_reduce_ops
from .rref import row_rank, row_reduce

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load_matrix(path):
    try:
        return textio.parse_matrix(_read(path))
    except ParseError as e:
        raise ParseError(f"{path}: {e}") from None


def _load_vector(path, field):
    try:
        v = textio.parse_vector(_read(path))
    except ParseError as e:
        raise ParseError(f"{path}: {e}") from None
    if v[0].field != field:
        raise UsageError(f"{path}: vector is over {v[0].field!r}, matrix is over {field!r}")
    return v


def _system(args):
    a = _load_matrix(args.matrix)
    return LinearSystem(a, _load_vector(args.rhs, a.field))


def cmd_rref(args, out):
    out.write(textio.format_matrix(row_reduce(_load_matrix(args.matrix))))


def cmd_rank(args, out):
    out.write(f"{row_rank(_load_matrix(args.matrix))}\n")


def cmd_rowops(args, out):
    out.write(textio.format_trace(row_reduce_ops(_load_matrix(args.matrix))))


def cmd_redmat(args, out):
    out.write(textio.format_matrix(row_reduce_mat(_load_matrix(args.matrix))))


def cmd_det(args, out):
    out.write(textio.format_element(det(_load_matrix(args.matrix))) + "\n")


def cmd_inverse(args, out):
    out.write(textio.format_matrix(inverse(_load_matrix(args.matrix), args.method)))


def cmd_solve(args, out):
    sys_ = _system(args)
    if args.method == "auto":
        outcome = solve_general(sys_)
    elif args.method == "unique":
        outcome = Unique(solve_unique(sys_))
    else:
        outcome = Unique(solve_cramer(sys_))
    out.write(textio.format_outcome(outcome))


def cmd_check_solution(args, out):
    sys_ = _system(args)
    x = _load_vector(args.candidate, sys_.a.field)
    if len(x) != sys_.n:
        raise UsageError(f"{args.candidate}: candidate has length {len(x)}, expected {sys_.n}")
    solvable = is_solvable(sys_)
    test = str(solution_test(x, sys_)).lower() if solvable else "n/a"
    out.write(f"solvable {str(solvable).lower()}\n"
              f"solution_test {test}\n"
              f"is_solution {str(is_solution(x, sys_)).lower()}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rowreduce",
        description="Exact row reduction, inversion and linear solving over Q and GF(p).",
    )
    sub = p.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def matrix_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("matrix", help="matrix file")
        sp.set_defaults(func=func)
        return sp

    matrix_cmd("rref", cmd_rref, "print the reduced row-echelon form")
    matrix_cmd("rank", cmd_rank, "print the row rank")
    matrix_cmd("rowops", cmd_rowops, "print the row operations of the reduction")
    matrix_cmd("redmat", cmd_redmat, "print the reduction matrix P with P*A = rref(A)")
    matrix_cmd("det", cmd_det, "print the determinant")
    inv = matrix_cmd("inverse", cmd_inverse, "print the inverse")
    inv.add_argument("--method", choices=METHODS, default="rref")

    sp = sub.add_parser("solve", help="solve A x = b")
    sp.add_argument("matrix", help="coefficient matrix file")
    sp.add_argument("rhs", help="right-hand side vector file")
    sp.add_argument("--method", choices=("auto", "unique", "cramer"), default="auto",
                    help="auto: full case analysis; unique/cramer: demand a unique solution")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("check-solution", help="test a candidate solution of A x = b")
    sp.add_argument("matrix")
    sp.add_argument("rhs")
    sp.add_argument("candidate")
    sp.set_defaults(func=cmd_check_solution)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        args.func(args, out)
    except DomainError as e:
        err.write(f"rowreduce: {e}\n")
        return EXIT_DOMAIN
    except UsageError as e:
        err.write(f"rowreduce: error: {e}\n")
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
