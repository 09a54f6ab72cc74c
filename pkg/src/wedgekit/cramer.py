"""Cramer's rule driven by the generalized cross product.

For ``x_1 A_1 + ... + x_n A_n = B`` let ``C_i`` be the cross product of all
columns except ``A_i``.  Dotting the system with ``C_i`` kills every term but
the ``i``-th, hence ``x_i = (B . C_i) / (A_i . C_i)``, which equals the
determinant ratio ``det(A_1, .., B, .., A_n) / det(A)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import DomainError, InvariantError, SingularMatrixError
from .numeric import (
    EXACT,
    Matrix,
    Vector,
    as_vector,
    det,
    dot,
    is_singular,
    isclose,
    to_scalar,
)
from .wedge import cross

DET_RATIO = "det"
CROSS_QUOTIENT = "cross"


@dataclass(frozen=True)
class LinearSystem:
    columns: Tuple[Vector, ...]
    rhs: Vector

    def __post_init__(self):
        cols = tuple(as_vector(c) for c in self.columns)
        rhs = as_vector(self.rhs)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "rhs", rhs)
        n = len(cols)
        if n == 0:
            raise DomainError("a linear system needs at least one column")
        for c in cols + (rhs,):
            if c.dim != n:
                raise DomainError(f"every column and the rhs must have dimension {n}, got {c.dim}")
        if len({c.mode for c in cols + (rhs,)}) != 1:
            raise DomainError("columns and rhs must share one scalar mode")

    @classmethod
    def from_matrix(cls, a, b) -> "LinearSystem":
        """Build from a coefficient matrix whose rows are the equations."""
        a = a if isinstance(a, Matrix) else Matrix(tuple(tuple(r) for r in a))
        b = as_vector(b, a.mode) if isinstance(b, Vector) else Vector(tuple(b), a.mode)
        if not a.is_square:
            raise DomainError(f"coefficient matrix must be square, got {a.shape}")
        return cls(tuple(a.column(j) for j in range(a.ncols)), b)

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def mode(self) -> str:
        return self.rhs.mode

    def coefficient_matrix(self) -> Matrix:
        return Matrix(tuple(tuple(c[i] for c in self.columns) for i in range(self.n)), self.mode)

    def with_column(self, i: int, v: Vector) -> Matrix:
        """Coefficient matrix with the 1-based column ``i`` replaced by ``v``."""
        cols = list(self.columns)
        cols[i - 1] = v
        return Matrix(tuple(tuple(c[r] for c in cols) for r in range(self.n)), self.mode)


def _require_nonsingular(sys: LinearSystem):
    a = sys.coefficient_matrix()
    d = det(a)
    if is_singular(a):
        raise SingularMatrixError(f"singular system: det(A) = {d}", det=d)
    return d


def _cofactor_direction(sys: LinearSystem, i: int) -> Vector:
    others = [c for j, c in enumerate(sys.columns, start=1) if j != i]
    if not others:
        # n = 1: the empty cross product in R^1 is e_1.
        return Vector((1,), sys.mode)
    return cross(others)


def _cross_quotient(sys: LinearSystem, i: int):
    c = _cofactor_direction(sys, i)
    return dot(sys.rhs, c) / dot(sys.columns[i - 1], c)


def _det_ratio(sys: LinearSystem, i: int, d):
    return det(sys.with_column(i, sys.rhs)) / d


def solve_component(sys: LinearSystem, i: int):
    """The 1-based ``i``-th unknown, computed along both routes.

    In exact mode the cross-product quotient and the determinant ratio must
    coincide; a mismatch raises :class:`InvariantError`.
    """
    if not 1 <= i <= sys.n:
        raise DomainError(f"component {i} out of range 1..{sys.n}")
    d = _require_nonsingular(sys)
    via_det = _det_ratio(sys, i, d)
    via_cross = _cross_quotient(sys, i)
    if sys.mode == EXACT and via_det != via_cross:
        raise InvariantError(
            f"x_{i}: determinant ratio {via_det} != cross-product quotient {via_cross}"
        )
    return via_det


def solve(sys: LinearSystem, method: str = DET_RATIO) -> Vector:
    if method not in (DET_RATIO, CROSS_QUOTIENT):
        raise DomainError(f"unknown method {method!r}")
    d = _require_nonsingular(sys)
    if method == DET_RATIO:
        xs = [_det_ratio(sys, i, d) for i in range(1, sys.n + 1)]
    else:
        xs = [_cross_quotient(sys, i) for i in range(1, sys.n + 1)]
    return Vector(tuple(xs), sys.mode)


def residual(sys: LinearSystem, x: Vector) -> Vector:
    """``sum_i x_i A_i - B``."""
    x = as_vector(x, sys.mode)
    if x.dim != sys.n:
        raise DomainError(f"solution has dimension {x.dim}, system has {sys.n}")
    acc = -sys.rhs
    for xi, col in zip(x, sys.columns):
        acc = acc + col.scale(xi)
    return acc


def residual_ok(sys: LinearSystem, x: Vector) -> bool:
    """Exact: residual is zero.  Float: each equation holds to 1e-9 relative."""
    res = residual(sys, x)
    if sys.mode == EXACT:
        return res.is_zero()
    zero = to_scalar(0, sys.mode)
    for row, b, r in zip(sys.coefficient_matrix().rows, sys.rhs, res):
        scale = max([abs(b)] + [abs(a * xi) for a, xi in zip(row, x)])
        if not isclose(r, zero, abs_tol=1e-9 * scale + 1e-12):
            return False
    return True
