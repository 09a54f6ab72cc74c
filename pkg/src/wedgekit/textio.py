"""Plain-text matrix and linear-system files.

Matrix files hold one row per line with whitespace-separated entries.  Exact
entries are integers or ``p/q`` rationals; float entries are decimal literals.
Blank lines and ``#`` comments are ignored.  A system file is a square matrix
(rows are equations) followed by a line ``b: b_1 ... b_n``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cramer import LinearSystem
from .errors import DomainError, ParseError
from .numeric import EXACT, Matrix, Vector, to_scalar

_EXACT_TOKEN = re.compile(r"[+-]?\d+(/\d+)?")


def _tokens(line):
    for m in re.finditer(r"\S+", line):
        yield m.group(), m.start() + 1


def parse_scalar(token: str, mode=EXACT, line=None, column=None):
    if mode == EXACT and not _EXACT_TOKEN.fullmatch(token):
        raise ParseError(f"expected an integer or p/q rational, got {token!r}", line, column)
    try:
        return to_scalar(token, mode)
    except DomainError as exc:
        raise ParseError(str(exc), line, column) from None


def _parse_row(text, mode, lineno):
    return [parse_scalar(tok, mode, lineno, col) for tok, col in _tokens(text)]


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, body


def parse_matrix(text: str, mode=EXACT) -> Matrix:
    rows = []
    width = None
    for lineno, body in _content_lines(text):
        row = _parse_row(body, mode, lineno)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"ragged row: expected {width} entries, got {len(row)}", lineno)
        rows.append(tuple(row))
    if not rows:
        raise ParseError("no matrix rows found")
    return Matrix(tuple(rows), mode)


def parse_system(text: str, mode=EXACT) -> LinearSystem:
    matrix_lines = []
    rhs = None
    for lineno, body in _content_lines(text):
        stripped = body.lstrip()
        if stripped.startswith("b:"):
            if rhs is not None:
                raise ParseError("duplicate 'b:' line", lineno)
            offset = len(body) - len(stripped) + 2
            rhs = [
                parse_scalar(tok, mode, lineno, col + offset)
                for tok, col in _tokens(stripped[2:])
            ]
            rhs_line = lineno
        else:
            if rhs is not None:
                raise ParseError("matrix rows must come before the 'b:' line", lineno)
            matrix_lines.append((lineno, body))
    if rhs is None:
        raise ParseError("missing right-hand side line starting with 'b:'")
    if not matrix_lines:
        raise ParseError("no coefficient rows found")
    rows = []
    for lineno, body in matrix_lines:
        row = _parse_row(body, mode, lineno)
        if len(row) != len(matrix_lines):
            raise ParseError(
                f"coefficient matrix must be square: expected {len(matrix_lines)} entries, "
                f"got {len(row)}",
                lineno,
            )
        rows.append(tuple(row))
    if len(rhs) != len(rows):
        raise ParseError(f"rhs has {len(rhs)} entries, expected {len(rows)}", rhs_line)
    a = Matrix(tuple(rows), mode)
    return LinearSystem.from_matrix(a, Vector(tuple(rhs), mode))


def format_scalar(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return repr(value + 0.0)
    return str(value)


def format_matrix(m: Matrix) -> str:
    return "".join(" ".join(format_scalar(v) for v in r) + "\n" for r in m.rows)


def format_system(sys: LinearSystem) -> str:
    a = sys.coefficient_matrix()
    return format_matrix(a) + "b: " + " ".join(format_scalar(v) for v in sys.rhs) + "\n"

