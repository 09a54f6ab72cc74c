"""Column reversal, the exchange matrix and the closed-form signs around it."""

from __future__ import annotations

import enum

from .errors import DomainError, InvariantError
from .numeric import Matrix, Vector, as_matrix, as_vector, delete_column, vectors_equal
from .wedge import cross


class SignParity(enum.IntEnum):
    MINUS = -1
    PLUS = 1

    @classmethod
    def of_exponent(cls, e: int) -> "SignParity":
        return cls.MINUS if e % 2 else cls.PLUS


class Symmetry(str, enum.Enum):
    PALINDROMIC = "palindromic"
    ANTIPALINDROMIC = "antipalindromic"
    NEITHER = "neither"


def reverse_matrix(m) -> Matrix:
    """Entry ``(i, j)`` becomes entry ``(i, n - j + 1)``; equals ``m @ J_n``."""
    m = as_matrix(m)
    return Matrix(tuple(r[::-1] for r in m.rows), m.mode)


def reverse_vector(v) -> Vector:
    v = as_vector(v)
    return Vector(v.entries[::-1], v.mode)


def exchange_matrix(n: int, mode="exact") -> Matrix:
    """Explicit ``J_n``.  Library code applies reversal as a permutation instead."""
    if n < 1:
        raise DomainError(f"exchange matrix needs n >= 1, got {n}")
    return reverse_matrix(Matrix.identity(n, mode))


def exchange_det(n: int) -> SignParity:
    """Closed-form ``det(J_n)``: ``(-1)**(n/2)`` for even n, ``(-1)**((n+3)/2)`` for odd n."""
    if n < 1:
        raise DomainError(f"det(J_n) needs n >= 1, got {n}")
    if n % 2 == 0:
        return SignParity.of_exponent(n // 2)
    return SignParity.of_exponent((n + 3) // 2)


def _as_rows(m):
    if isinstance(m, Vector):
        return Matrix((m.entries,), m.mode)
    return as_matrix(m)


def is_palindromic(m) -> bool:
    m = _as_rows(m)
    return all(_row_eq(r, r[::-1], m.mode) for r in m.rows)


def is_antipalindromic(m) -> bool:
    m = _as_rows(m)
    return all(_row_eq(r, tuple(-a for a in r[::-1]), m.mode) for r in m.rows)


def _row_eq(a, b, mode):
    return vectors_equal(Vector(a, mode), Vector(b, mode))


def classify(m) -> Symmetry:
    """Palindromic if reversal fixes ``m``, antipalindromic if it negates it.

    The zero matrix satisfies both identities and is reported palindromic.
    """
    if is_palindromic(m):
        return Symmetry.PALINDROMIC
    if is_antipalindromic(m):
        return Symmetry.ANTIPALINDROMIC
    return Symmetry.NEITHER


def reversed_deleted_column(m, k: int) -> Matrix:
    """``delete_column(reverse(M), k)``, checked against ``reverse(delete_column(M, n-k+1))``."""
    m = as_matrix(m)
    n = m.ncols
    if m.nrows != n - 1:
        raise DomainError(f"expected an (n-1) x n matrix, got {m.shape}")
    if not 1 <= k <= n:
        raise DomainError(f"column {k} out of range 1..{n}")
    left = delete_column(reverse_matrix(m), k)
    right = reverse_matrix(delete_column(m, n - k + 1))
    if left != right:
        raise InvariantError(f"reversed minor mismatch at k={k}: {left.rows} != {right.rows}")
    return left


def prop3_sign(n: int) -> SignParity:
    """Sign relating ``cross(reversed rows)`` to ``reverse(cross(rows))`` in R^n.

    ``(-1)**(3n/2)`` for even n and ``(-1)**((3n+1)/2)`` for odd n.
    """
    if n < 2:
        raise DomainError(f"the cross product needs n >= 2, got {n}")
    if n % 2 == 0:
        return SignParity.of_exponent(3 * n // 2)
    return SignParity.of_exponent((3 * n + 1) // 2)


def reversed_cross(rows) -> Vector:
    """``cross`` of the reversed rows, predicted from the unreversed product."""
    m = as_matrix(rows)
    base = reverse_vector(cross(m))
    return base if prop3_sign(m.ncols) == SignParity.PLUS else -base


def palindromic_cross_check(vectors) -> Vector:
    """Cross product of n-1 palindromic (or n-1 antipalindromic) vectors, n >= 4.

    Every maximal minor of such a family repeats a column up to sign, so the
    result is the zero vector; anything else raises :class:`InvariantError`.
    """
    m = as_matrix(vectors)
    n = m.ncols
    if n < 4:
        raise DomainError(f"vanishing is only guaranteed for n >= 4, got n={n}")
    if m.nrows != n - 1:
        raise DomainError(f"expected {n - 1} vectors in R^{n}, got {m.nrows}")
    if not (is_palindromic(m) or is_antipalindromic(m)):
        raise DomainError("vectors must all be palindromic or all antipalindromic")
    out = cross(m)
    if not out.is_zero():
        raise InvariantError(f"cross product of a symmetric family is nonzero: {out.entries}")
    return out
