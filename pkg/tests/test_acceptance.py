"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

All checks are exact equalities. Case counts and time limits are fixed here.
"""

import io
import random
import time
from contextlib import contextmanager

from rowreduce import (
    GF, QQ, AddMul, LinearSystem, Scale, Swap, Unsolvable, apply_row_op, apply_row_ops,
    cli, col, col_mat, det, elem_mat, id_mat, inverse_adjugate, inverse_rref,
    invert_row_ops, is_invertible, is_row_echelon, is_solution, lead_inds, mat_mul, matrix,
    replace_col, row_ops_mat, row_rank, row_reduce, row_reduce_mat, row_reduce_ops,
    row_reduce_step, row_reduce_step_ops, solution_test, solve_cramer, solve_general,
    solve_unique, textio, transpose,
)

from conftest import FIXTURES, load_matrix, random_invertible, random_matrix, random_vector
from oracles import all_vectors, brute_solutions, perm_det

FIELDS = {"QQ": QQ, "GF(7)": GF(7)}


@contextmanager
def criterion(capsys, number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\n[FAIL] criterion {number}: {title} ({time.perf_counter() - start:.2f}s)")
        raise
    with capsys.disabled():
        print(f"\n[PASS] criterion {number}: {title} ({time.perf_counter() - start:.2f}s)")


def pinned(name):
    return (FIXTURES / name).read_text()


def test_criterion_1_worked_example(capsys):
    with criterion(capsys, 1, "a0 fixture: rref, step, rank, lead indices, step ops, "
                              "trace length, reduction matrix"):
        start = time.perf_counter()
        a0 = textio.parse_matrix(pinned("a0.mat"))
        assert textio.format_matrix(row_reduce(a0)) == pinned("a0_rref.mat")
        assert textio.format_matrix(row_reduce_step(a0, 4, 0, 1, 0)) == pinned("a0_step.mat")
        assert row_rank(a0) == 3
        assert lead_inds(row_reduce(a0)) == (0, 1, 3)
        step_ops = row_reduce_step_ops(a0, 4, 0, 1, 0)
        assert tuple(op.encoding for op in step_ops) == (
            (1, -1, 1), (3, 1, 0), (2, -1, 0, 3), (2, 2, 0, 2), (2, 0, 0, 1))
        assert textio.format_trace(step_ops) == pinned("a0_step_ops.trace")
        assert len(row_reduce_ops(a0)) == 15
        assert textio.format_matrix(row_reduce_mat(a0)) == pinned("a0_redmat.mat")
        assert time.perf_counter() - start < 1.0


def _random_op(rng, field, m):
    kind = rng.choice(("scale", "addmul", "swap") if m > 1 else ("scale", "swap"))
    if kind == "swap":
        return Swap(rng.randrange(m), rng.randrange(m))
    if kind == "scale":
        c = field(rng.randint(1, 9) * rng.choice((1, -1)))
        return Scale(c if c else field.one(), rng.randrange(m))
    j, k = rng.sample(range(m), 2)
    return AddMul(field(rng.randint(-9, 9)), j, k)


def test_criterion_2_reduction_theorems(capsys):
    cases = 500
    with criterion(capsys, 2, f"reduction theorems, {cases} cases per field, m,n <= 6, < 60 s"):
        start = time.perf_counter()
        for name, field in FIELDS.items():
            rng = random.Random(f"criterion-2-{name}")
            for _ in range(cases):
                m, n = rng.randint(1, 6), rng.randint(1, 6)
                a = random_matrix(rng, field, m, n)
                r = row_reduce(a)
                ops = row_reduce_ops(a)
                p = row_ops_mat(ops, m, field)
                assert mat_mul(p, a) == r
                assert p == row_reduce_mat(a)
                assert is_row_echelon(r)
                assert row_reduce(r) == r
                assert apply_row_ops(ops, a) == r
                op = _random_op(rng, field, m)
                assert mat_mul(elem_mat(op, m, field), a) == apply_row_op(op, a)
                extra = [_random_op(rng, field, m) for _ in range(rng.randint(0, 6))]
                for trace in (ops, extra):
                    q = row_ops_mat(trace, m, field)
                    qi = row_ops_mat(invert_row_ops(trace), m, field)
                    assert mat_mul(qi, q) == id_mat(m, field) == mat_mul(q, qi)
                assert 0 <= row_rank(a) <= min(m, n)
        assert time.perf_counter() - start < 60.0


def test_criterion_3_invertibility(capsys):
    cases = 300
    with criterion(capsys, 3, f"invertibility laws, {cases} cases per field, n <= 5"):
        for name, field in FIELDS.items():
            rng = random.Random(f"criterion-3-{name}")
            invertible_seen = singular_seen = 0
            for _ in range(cases):
                n = rng.randint(1, 5)
                a = random_matrix(rng, field, n, n)
                b = random_matrix(rng, field, n, n)
                I = id_mat(n, field)
                inv_a = is_invertible(a)
                assert inv_a == (not det(a).is_zero())
                assert is_invertible(mat_mul(a, b)) == (inv_a and is_invertible(b))
                if not inv_a:
                    singular_seen += 1
                    continue
                invertible_seen += 1
                ai = inverse_rref(a)
                assert mat_mul(a, ai) == I == mat_mul(ai, a)
                assert inverse_rref(ai) == a
                if n >= 2:
                    assert inverse_adjugate(a) == ai
                if is_invertible(b):
                    assert inverse_rref(mat_mul(a, b)) == mat_mul(inverse_rref(b), ai)
                c = random_matrix(rng, field, n, rng.randint(1, 5))
                rows = [list(x) for x in c.rows]
                i, j = rng.randrange(c.nrows), rng.randrange(c.ncols)
                rows[i][j] = rows[i][j] + field.one()
                d = matrix(field, rows)
                assert (mat_mul(a, c) == mat_mul(a, d)) == (c == d)
            assert invertible_seen >= cases // 5 and singular_seen >= cases // 20


def test_criterion_4_determinant_oracle(capsys):
    cases = 300
    with criterion(capsys, 4, f"det = permutation-sum oracle, {cases} cases per field, n <= 5"):
        for name, field in FIELDS.items():
            rng = random.Random(f"criterion-4-{name}")
            for t in range(cases):
                n = t % 5 + 1
                a = random_matrix(rng, field, n, n)
                b = random_matrix(rng, field, n, n)
                assert det(a) == perm_det(a)
                assert det(transpose(a)) == det(a)
                assert det(mat_mul(a, b)) == det(a) * det(b)


def test_criterion_5_solver(capsys):
    with criterion(capsys, 5, "solver: unique, Cramer, unsolvable, GF(3) enumeration"):
        for name, field in FIELDS.items():
            rng = random.Random(f"criterion-5-{name}")
            for _ in range(150):
                # full column rank, possibly tall, consistent by construction
                n = rng.randint(1, 5)
                a = random_invertible(rng, field, n)
                extra = rng.randint(0, 2)
                if extra:
                    mix = random_matrix(rng, field, extra, n)
                    a = matrix(field, a.rows + mat_mul(mix, a).rows)
                x0 = random_vector(rng, field, n)
                s = LinearSystem(a, col(0, mat_mul(a, col_mat(x0))))
                x = solve_unique(s)
                assert x == x0
                assert is_solution(x, s) and solution_test(x, s)
            for _ in range(150):
                n = rng.randint(2, 5)
                s = LinearSystem(random_invertible(rng, field, n), random_vector(rng, field, n))
                x = solve_cramer(s)
                assert x == solve_unique(s)
                d = perm_det(s.a)
                for i in range(n):
                    assert x[i] == perm_det(replace_col(s.a, i, s.b)) / d
            for _ in range(150):
                m, n = rng.randint(2, 6), rng.randint(1, 6)
                a = random_matrix(rng, field, m, n)
                a = matrix(field, a.rows[:-1] + (a.rows[0],))
                b = list(col(0, mat_mul(a, col_mat(random_vector(rng, field, n)))))
                b[-1] = b[-1] + field(rng.randint(1, 6))
                s = LinearSystem(a, tuple(b))
                assert isinstance(solve_general(s), Unsolvable)
                for _ in range(20):
                    assert not is_solution(random_vector(rng, field, n), s)
        F = GF(3)
        rng = random.Random("criterion-5-GF(3)")
        for _ in range(200):
            m, n = rng.randint(1, 5), rng.randint(1, 4)
            a = random_matrix(rng, F, m, n)
            s = LinearSystem(a, random_vector(rng, F, m))
            brute = set(brute_solutions(a, s.b))
            if isinstance(solve_general(s), Unsolvable):
                assert brute == set()
                continue
            assert brute == {x for x in all_vectors(F, n) if solution_test(x, s)}
            assert len(brute) == 3 ** (n - row_rank(a))


def _run_cli(*args):
    out, err = io.StringIO(), io.StringIO()
    return cli.main([str(x) for x in args], out=out, err=err), out.getvalue()


def test_criterion_6_cli(capsys):
    with criterion(capsys, 6, "CLI: fixture round-trip, rank, rowops replay, exit statuses"):
        for p in sorted(FIXTURES.iterdir()):
            if p.name.startswith("bad_"):
                continue
            text = p.read_text()
            if p.suffix == ".mat":
                v = textio.parse_matrix(text)
                assert textio.parse_matrix(textio.format_matrix(v)) == v
            elif p.suffix == ".vec":
                v = textio.parse_vector(text)
                assert textio.parse_vector(textio.format_vector(v)) == v
            elif p.suffix == ".trace":
                v = textio.parse_trace(text, QQ)
                assert textio.parse_trace(textio.format_trace(v), QQ) == v
            if "#" not in text and p.suffix in (".mat", ".vec"):
                fmt = textio.format_matrix if p.suffix == ".mat" else textio.format_vector
                parse = textio.parse_matrix if p.suffix == ".mat" else textio.parse_vector
                assert fmt(parse(text)) == text
        assert _run_cli("rank", FIXTURES / "a0.mat") == (0, "3\n")
        code, out = _run_cli("rowops", FIXTURES / "a0.mat")
        assert code == 0 and len(out.splitlines()) == 15
        a0 = load_matrix("a0.mat")
        assert apply_row_ops(textio.parse_trace(out, QQ, 4), a0) == row_reduce(a0)
        assert _run_cli("inverse", FIXTURES / "singular2.mat")[0] == 1
        assert _run_cli("inverse", FIXTURES / "singular2.mat", "--method", "adjugate")[0] == 1
        for p in sorted(FIXTURES.glob("bad_*.mat")):
            assert _run_cli("rank", p) == (2, "")
