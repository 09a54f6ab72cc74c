from fractions import Fraction

import pytest

from wedgekit.errors import ParseError
from wedgekit.textio import format_matrix, format_system, parse_matrix, parse_system


def test_parse_exact_matrix():
    m = parse_matrix("2 3 -1 5\n4 7 2 0\n")
    assert m.rows == ((2, 3, -1, 5), (4, 7, 2, 0))
    assert m.mode == "exact"


def test_parse_rationals_comments_and_blank_lines():
    m = parse_matrix("# header\n1/2  -3/4\n\n  5 +6   # trailing\n")
    assert m.rows == ((Fraction(1, 2), Fraction(-3, 4)), (5, 6))


def test_parse_float_matrix():
    m = parse_matrix("1.5 -2e3\n0 3\n", "float")
    assert m.mode == "float"
    assert m.rows == ((1.5, -2000.0), (0.0, 3.0))


@pytest.mark.parametrize(
    "text,mode,line,column",
    [
        ("1 2\n3 x\n", "exact", 2, 3),
        ("1 2\n3 1.5\n", "exact", 2, 3),
        ("1 2/0\n", "exact", 1, 3),
        ("1 2\n3\n", "exact", 2, None),
        ("1 nan\n", "float", 1, 3),
        ("1 1/2\n", "float", 1, 3),
        ("", "exact", None, None),
    ],
)
def test_parse_errors_carry_position(text, mode, line, column):
    with pytest.raises(ParseError) as info:
        parse_matrix(text, mode)
    assert info.value.line == line
    assert info.value.column == column


def test_parse_system():
    s = parse_system("2 1\n1 3\nb: 5 10\n")
    assert s.n == 2
    assert s.columns[0].entries == (2, 1)
    assert s.rhs.entries == (5, 10)


@pytest.mark.parametrize(
    "text",
    [
        "2 1\n1 3\n",
        "2 1\n1 3\nb: 5\n",
        "2 1 0\n1 3 0\nb: 5 10\n",
        "b: 1 2\n2 1\n1 3\n",
        "2 1\n1 3\nb: 5 10\nb: 1 1\n",
        "b: 1\n",
        "2 1\n1 3\nb: 5 q\n",
    ],
)
def test_parse_system_errors(text):
    with pytest.raises(ParseError):
        parse_system(text)


def test_rhs_column_diagnostic():
    with pytest.raises(ParseError) as info:
        parse_system("1 0\n0 1\nb: 5 q\n")
    assert (info.value.line, info.value.column) == (3, 6)


def test_roundtrip():
    text = "1/2 -3 0\n7 -1/9 4\n"
    m = parse_matrix(text)
    assert format_matrix(m) == text
    assert parse_matrix(format_matrix(m)) == m
    fm = parse_matrix("0.1 -2.5\n3 1e-7\n", "float")
    assert parse_matrix(format_matrix(fm), "float") == fm
    s = parse_system("2 1\n1 3\nb: 5 10\n")
    assert parse_system(format_system(s)) == s
