"""Plain-text formats for matrices, vectors, row-operation traces and solve results.

Matrix file::

    field rational          # or: field gf 7
    rows 4 cols 5
    0 -3 -6 4 9
    ...

Vector file: the ``field`` line, ``len <n>``, then one data line. Traces have
no header, one operation per line: ``scale <c> <k>``, ``addmul <c> <j> <k>``,
``swap <j> <k>``. ``#`` starts a comment; blank lines are ignored. Rational
elements are written ``-3`` or ``8/5``; GF(p) elements as integers in
``[0, p)``. Printing is canonical, so ``format(parse(t)) == t`` for canonical
text.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import ParseError, UsageError
from .field import GF, QQ, FieldElement, FieldSpec
from .linsolve import Parametric, SolveOutcome, Unique, Unsolvable
from .matrix import Matrix
from .rowops import AddMul, RowOp, RowOpTrace, Scale, Swap

_INT = re.compile(r"[+-]?\d+\Z")
_RAT = re.compile(r"([+-]?\d+)/(\d+)\Z")
_NAT = re.compile(r"\d+\Z")


class _Line:
    __slots__ = ("no", "text", "tokens")

    def __init__(self, no, text):
        self.no = no
        self.text = text
        self.tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]


def _lines(text: str) -> Iterator[_Line]:
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield _Line(no, body)


class _Reader:
    def __init__(self, text):
        self._it = _lines(text)
        self.last_no = 0

    def next(self, what) -> _Line:
        line = next(self._it, None)
        if line is None:
            raise ParseError(f"unexpected end of input, expected {what}", self.last_no + 1)
        self.last_no = line.no
        return line

    def finish(self):
        line = next(self._it, None)
        if line is not None:
            raise ParseError("unexpected extra data", line.no, line.tokens[0][1])


def _nat(tok, line) -> int:
    s, c = tok
    if not _NAT.match(s):
        raise ParseError(f"expected a non-negative integer, got {s!r}", line.no, c)
    return int(s)


def parse_element(s: str, field: FieldSpec, line: int | None = None,
                  col: int | None = None) -> FieldElement:
    """Strict element syntax; GF(p) entries must already lie in ``[0, p)``."""
    if field.is_rational:
        if _INT.match(s):
            return QQ(int(s))
        m = _RAT.match(s)
        if m:
            den = int(m.group(2))
            if den == 0:
                raise ParseError(f"zero denominator in {s!r}", line, col)
            return QQ(Fraction(int(m.group(1)), den))
        raise ParseError(f"not a rational number: {s!r}", line, col)
    if _NAT.match(s) and int(s) < field.modulus:
        return field(int(s))
    if _INT.match(s) or _RAT.match(s):
        raise ParseError(f"element {s!r} is not in {field!r}", line, col)
    raise ParseError(f"not an integer: {s!r}", line, col)


def format_element(x: FieldElement) -> str:
    return str(x.value)


def parse_field_decl(line: _Line) -> FieldSpec:
    toks = line.tokens
    if not toks or toks[0][0] != "field":
        raise ParseError("expected a 'field' declaration", line.no, toks[0][1] if toks else 1)
    if len(toks) == 2 and toks[1][0] == "rational":
        return QQ
    if len(toks) == 3 and toks[1][0] == "gf":
        p = _nat(toks[2], line)
        try:
            return GF(p)
        except UsageError as e:
            raise ParseError(str(e), line.no, toks[2][1]) from None
    raise ParseError("expected 'field rational' or 'field gf <p>'", line.no, toks[0][1])


def format_field_decl(field: FieldSpec) -> str:
    return "field rational" if field.is_rational else f"field gf {field.modulus}"


def _data_row(line, field, n):
    if len(line.tokens) != n:
        raise ParseError(f"expected {n} entries, found {len(line.tokens)}", line.no)
    return tuple(parse_element(s, field, line.no, c) for s, c in line.tokens)


def parse_matrix(text: str) -> Matrix:
    rd = _Reader(text)
    field = parse_field_decl(rd.next("a 'field' declaration"))
    dims = rd.next("'rows <m> cols <n>'")
    t = dims.tokens
    if len(t) != 4 or t[0][0] != "rows" or t[2][0] != "cols":
        raise ParseError("expected 'rows <m> cols <n>'", dims.no, t[0][1])
    m, n = _nat(t[1], dims), _nat(t[3], dims)
    if m < 1 or n < 1:
        raise ParseError("matrix dimensions must be positive", dims.no)
    rows = tuple(_data_row(rd.next(f"row {i}"), field, n) for i in range(m))
    rd.finish()
    return Matrix._from_rows(field, rows)


def format_matrix(a: Matrix) -> str:
    lines = [format_field_decl(a.field), f"rows {a.nrows} cols {a.ncols}"]
    lines += [" ".join(format_element(x) for x in r) for r in a.rows]
    return "\n".join(lines) + "\n"


def _parse_vector_body(rd, field):
    hdr = rd.next("'len <n>'")
    t = hdr.tokens
    if len(t) != 2 or t[0][0] != "len":
        raise ParseError("expected 'len <n>'", hdr.no, t[0][1])
    n = _nat(t[1], hdr)
    if n < 1:
        raise ParseError("vector length must be positive", hdr.no)
    return _data_row(rd.next("the vector entries"), field, n)


def parse_vector(text: str) -> tuple:
    rd = _Reader(text)
    field = parse_field_decl(rd.next("a 'field' declaration"))
    v = _parse_vector_body(rd, field)
    rd.finish()
    return v


def format_vector(x: Sequence[FieldElement]) -> str:
    x = tuple(x)
    if not x:
        raise UsageError("cannot print an empty vector")
    return (f"{format_field_decl(x[0].field)}\nlen {len(x)}\n"
            + " ".join(format_element(v) for v in x) + "\n")


def format_row_op(op: RowOp) -> str:
    if isinstance(op, Scale):
        return f"scale {format_element(op.c)} {op.k}"
    if isinstance(op, AddMul):
        return f"addmul {format_element(op.c)} {op.j} {op.k}"
    return f"swap {op.j} {op.k}"


def format_trace(ops) -> str:
    return "".join(format_row_op(op) + "\n" for op in ops)


_ARITY = {"scale": 2, "addmul": 3, "swap": 2}


def parse_trace(text: str, field: FieldSpec, row_count: int | None = None):
    """Parse a trace. Returns a :class:`RowOpTrace` when ``row_count`` is given,
    otherwise a tuple of operations."""
    ops = []
    for line in _lines(text):
        (name, c0), *args = line.tokens
        if name not in _ARITY:
            raise ParseError(f"unknown row operation {name!r}", line.no, c0)
        if len(args) != _ARITY[name]:
            raise ParseError(f"{name} takes {_ARITY[name]} arguments", line.no, c0)
        try:
            if name == "swap":
                ops.append(Swap(_nat(args[0], line), _nat(args[1], line)))
            else:
                c = parse_element(args[0][0], field, line.no, args[0][1])
                idx = [_nat(t, line) for t in args[1:]]
                ops.append(Scale(c, *idx) if name == "scale" else AddMul(c, *idx))
        except ParseError:
            raise
        except UsageError as e:
            raise ParseError(str(e), line.no, c0) from None
    if row_count is None:
        return tuple(ops)
    try:
        return RowOpTrace(tuple(ops), row_count)
    except UsageError as e:
        raise ParseError(str(e)) from None


def format_outcome(outcome: SolveOutcome) -> str:
    if isinstance(outcome, Unsolvable):
        return f"UNSOLVABLE\nwitness {outcome.witness_row}\n"
    if isinstance(outcome, Unique):
        return "UNIQUE\n" + format_vector(outcome.x)
    if isinstance(outcome, Parametric):
        lead = " ".join(map(str, outcome.lead_inds))
        free = " ".join(map(str, outcome.free_inds))
        return (f"PARAMETRIC\nlead {lead}".rstrip() + f"\nfree {free}\n"
                + format_vector(outcome.particular))
    raise UsageError(f"not a solve outcome: {outcome!r}")


def _index_list(line, keyword):
    t = line.tokens
    if not t or t[0][0] != keyword:
        raise ParseError(f"expected '{keyword} ...'", line.no, t[0][1] if t else 1)
    return tuple(_nat(tok, line) for tok in t[1:])


def parse_outcome(text: str) -> SolveOutcome:
    rd = _Reader(text)
    head = rd.next("UNSOLVABLE, UNIQUE or PARAMETRIC")
    tag = head.tokens[0][0]
    if tag == "UNSOLVABLE" and len(head.tokens) == 1:
        ks = _index_list(rd.next("'witness <k>'"), "witness")
        if len(ks) != 1:
            raise ParseError("expected exactly one witness row", rd.last_no)
        out = Unsolvable(ks[0])
    elif tag == "UNIQUE" and len(head.tokens) == 1:
        field = parse_field_decl(rd.next("a 'field' declaration"))
        out = Unique(_parse_vector_body(rd, field))
    elif tag == "PARAMETRIC" and len(head.tokens) == 1:
        lead = _index_list(rd.next("'lead ...'"), "lead")
        free = _index_list(rd.next("'free ...'"), "free")
        field = parse_field_decl(rd.next("a 'field' declaration"))
        out = Parametric(lead, free, _parse_vector_body(rd, field))
    else:
        raise ParseError(f"unknown solve outcome {tag!r}", head.no, head.tokens[0][1])
    rd.finish()
    return out
