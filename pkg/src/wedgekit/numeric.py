"""Scalars, vectors, matrices, determinants and minors.

Two scalar realizations are supported and never mixed inside one object:

* ``"exact"``: :class:`fractions.Fraction` entries, determinants by
  fraction-free Bareiss elimination.
* ``"float"``: binary64 entries, determinants by partial-pivot LU.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real
from typing import Iterable, Sequence, Tuple

from .combinadics import IndexSet, complement
from .errors import DomainError

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)

REL_TOL = 1e-9
ABS_TOL = 1e-12
# Float elimination treats |pivot| < PIVOT_TOL * max row norm as zero.
PIVOT_TOL = 1e-12


def _check_mode(mode):
    if mode not in MODES:
        raise DomainError(f"unknown scalar mode {mode!r}; expected one of {MODES}")


def to_scalar(value, mode=EXACT):
    """Coerce ``value`` into the scalar type of ``mode``.

    Exact mode accepts integers, rationals and rational strings ("3", "-2/7");
    a Python float is refused so that exactness is never silently assumed.
    """
    _check_mode(mode)
    if mode == EXACT:
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"not an exact rational: {value!r}") from exc
        raise DomainError(f"exact mode refuses {type(value).__name__} value {value!r}")
    if isinstance(value, str):
        try:
            out = float(value)
        except ValueError as exc:
            raise DomainError(f"not a float literal: {value!r}") from exc
    elif isinstance(value, Real):
        out = float(value)
    else:
        raise DomainError(f"float mode refuses {type(value).__name__} value {value!r}")
    if not math.isfinite(out):
        raise DomainError(f"non-finite float entry {value!r}")
    return out


def isclose(a, b, rel_tol=REL_TOL, abs_tol=ABS_TOL) -> bool:
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)


@dataclass(frozen=True)
class Vector:
    entries: Tuple
    mode: str = EXACT

    def __post_init__(self):
        _check_mode(self.mode)
        object.__setattr__(
            self, "entries", tuple(to_scalar(v, self.mode) for v in self.entries)
        )

    @classmethod
    def zeros(cls, dim, mode=EXACT):
        return cls((0,) * dim, mode)

    @classmethod
    def basis(cls, dim, i, mode=EXACT):
        """The 1-based ``i``-th standard basis vector of dimension ``dim``."""
        if not 1 <= i <= dim:
            raise DomainError(f"basis index {i} out of range 1..{dim}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(dim)), mode)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def _same_shape(self, other):
        if not isinstance(other, Vector):
            raise DomainError(f"expected a Vector, got {type(other).__name__}")
        if other.mode != self.mode:
            raise DomainError(f"mode mismatch: {self.mode} vs {other.mode}")
        if other.dim != self.dim:
            raise DomainError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._same_shape(other)
        return Vector(tuple(a + b for a, b in zip(self, other)), self.mode)

    def __sub__(self, other):
        self._same_shape(other)
        return Vector(tuple(a - b for a, b in zip(self, other)), self.mode)

    def __neg__(self):
        return Vector(tuple(-a for a in self), self.mode)

    def scale(self, alpha):
        alpha = to_scalar(alpha, self.mode)
        return Vector(tuple(alpha * a for a in self), self.mode)

    def is_zero(self) -> bool:
        if self.mode == EXACT:
            return all(a == 0 for a in self)
        return all(abs(a) <= ABS_TOL for a in self)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix; ``rows`` is a tuple of equal-length tuples."""

    rows: Tuple[Tuple, ...]
    mode: str = EXACT

    def __post_init__(self):
        _check_mode(self.mode)
        rows = tuple(tuple(to_scalar(v, self.mode) for v in r) for r in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DomainError("ragged rows: every row needs the same length")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_vectors(cls, vectors: Sequence[Vector], mode=None):
        vectors = list(vectors)
        if not vectors:
            raise DomainError("need at least one row vector")
        modes = {v.mode if isinstance(v, Vector) else (mode or EXACT) for v in vectors}
        if mode is not None:
            modes.add(mode)
        if len(modes) != 1:
            raise DomainError(f"mixed scalar modes {sorted(modes)}")
        return cls(tuple(tuple(v) for v in vectors), modes.pop())

    @classmethod
    def identity(cls, n, mode=EXACT):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), mode)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i) -> Vector:
        return Vector(self.rows[i], self.mode)

    def row_vectors(self) -> list[Vector]:
        return [Vector(r, self.mode) for r in self.rows]

    def column(self, j) -> Vector:
        return Vector(tuple(r[j] for r in self.rows), self.mode)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)), self.mode)

    def swap_rows(self, i, j) -> "Matrix":
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return Matrix(tuple(rows), self.mode)

    def __neg__(self):
        return Matrix(tuple(tuple(-a for a in r) for r in self.rows), self.mode)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.mode != self.mode:
            raise DomainError(f"mode mismatch: {self.mode} vs {other.mode}")
        if self.ncols != other.nrows:
            raise DomainError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return Matrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c) if a and b) for c in cols) for r in self.rows),
            self.mode,
        )


def as_matrix(rows, mode=None) -> Matrix:
    """Accept a Matrix, a sequence of Vectors, or nested sequences."""
    if isinstance(rows, Matrix):
        if mode is not None and rows.mode != mode:
            raise DomainError(f"mode mismatch: {rows.mode} vs {mode}")
        return rows
    rows = list(rows)
    if rows and all(isinstance(r, Vector) for r in rows):
        return Matrix.from_vectors(rows, mode)
    if any(isinstance(r, Vector) for r in rows):
        raise DomainError("cannot mix Vector rows with plain sequences")
    return Matrix(tuple(tuple(r) for r in rows), mode or EXACT)


def as_vector(v, mode=None) -> Vector:
    if isinstance(v, Vector):
        if mode is not None and v.mode != mode:
            raise DomainError(f"mode mismatch: {v.mode} vs {mode}")
        return v
    return Vector(tuple(v), mode or EXACT)


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - aik * rk[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _exact_det(rows) -> Fraction:
    # Clear denominators row by row so Bareiss runs on plain integers.
    scale = 1
    ints = []
    for r in rows:
        lcm = 1
        for v in r:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        scale *= lcm
        ints.append([v.numerator * (lcm // v.denominator) for v in r])
    return Fraction(_bareiss(ints), scale)


def _lu(rows):
    """Partial-pivot elimination; returns ``(det, singular)``."""
    a = [list(r) for r in rows]
    n = len(a)
    norm = max((math.fsum(abs(v) for v in r) for r in a), default=0.0)
    threshold = PIVOT_TOL * norm
    det = 1.0
    singular = norm == 0.0
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0.0:
            return 0.0, True
        if abs(a[p][k]) < threshold:
            singular = True
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pivot = a[k][k]
        det *= pivot
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                ri, rk = a[i], a[k]
                for j in range(k + 1, n):
                    ri[j] -= f * rk[j]
    return det, singular


def det(m: Matrix):
    m = as_matrix(m)
    if not m.is_square:
        raise DomainError(f"determinant needs a square matrix, got {m.shape}")
    if m.nrows == 0:
        return to_scalar(1, m.mode)
    if m.mode == EXACT:
        return _exact_det(m.rows)
    return _lu(m.rows)[0]


def is_singular(m: Matrix) -> bool:
    """Exact: determinant is zero.  Float: some pivot falls under the tolerance."""
    m = as_matrix(m)
    if not m.is_square:
        raise DomainError(f"singularity test needs a square matrix, got {m.shape}")
    if m.mode == EXACT:
        return det(m) == 0
    return _lu(m.rows)[1]


def select_columns(m: Matrix, cols: Iterable[int]) -> Matrix:
    cols = list(cols)
    return Matrix(tuple(tuple(r[j] for j in cols) for r in m.rows), m.mode)


def minor(u: Matrix, s: IndexSet) -> Matrix:
    """The k x k submatrix of the k x n matrix ``u`` on the columns of ``s``."""
    u = as_matrix(u)
    if s.n != u.ncols or s.k != u.nrows:
        raise DomainError(
            f"index set of size {s.k} over n={s.n} does not fit a {u.nrows}x{u.ncols} matrix"
        )
    return select_columns(u, s.indices)


def delete_column(m: Matrix, k: int) -> Matrix:
    """Drop the 1-based column ``k``, keeping the rest in order."""
    m = as_matrix(m)
    if not 1 <= k <= m.ncols:
        raise DomainError(f"column {k} out of range 1..{m.ncols}")
    if m.ncols == 1:
        return Matrix(tuple(() for _ in m.rows), m.mode)
    keep = complement(IndexSet((k - 1,), m.ncols))
    return select_columns(m, keep.indices)


def dot(u: Vector, v: Vector):
    u, v = as_vector(u), as_vector(v)
    u._same_shape(v)
    if u.mode == FLOAT:
        return math.fsum(a * b for a, b in zip(u, v))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def scalar_equal(a, b, mode) -> bool:
    if mode == EXACT:
        return a == b
    return isclose(a, b)


def vectors_equal(u: Vector, v: Vector) -> bool:
    u._same_shape(v)
    return all(scalar_equal(a, b, u.mode) for a, b in zip(u, v))
