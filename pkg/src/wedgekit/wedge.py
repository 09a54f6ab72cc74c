"""The generalized cross product on R^n and the exterior map (R^n)^k -> R^C(n,k).

Component convention of :func:`wedge`: with ``C = C(n, k)`` and ``r(i)`` the
lexicographic rank of the column subset ``i``, component ``C - r(i) + 1``
(1-based) holds ``(-1)**(C - r(i)) * det(U_i)``.  So the last lex subset
lands first, and signs alternate starting from ``+`` at position 1.
:func:`to_plucker` converts to the unsigned lex ordering.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .combinadics import binomial, enumerate_subsets, rank
from .errors import CapacityError, DomainError
from .numeric import Vector, as_matrix, as_vector, delete_column, det, minor

DEFAULT_CAP = 10**6
PAPER_REVERSED = "paper-reversed"


def default_cap() -> int:
    """Component cap, overridable with the ``WEDGEKIT_CAP`` environment variable."""
    raw = os.environ.get("WEDGEKIT_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise DomainError(f"WEDGEKIT_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise DomainError(f"WEDGEKIT_CAP must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class WedgeVector:
    n: int
    k: int
    components: Vector
    convention: str = field(default=PAPER_REVERSED, init=False)

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise DomainError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")
        expected = binomial(self.n, self.k)
        if self.components.dim != expected:
            raise DomainError(
                f"C({self.n}, {self.k}) = {expected} components expected, "
                f"got {self.components.dim}"
            )

    @property
    def mode(self):
        return self.components.mode

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return self.components.dim

    def __getitem__(self, i):
        return self.components[i]

    def as_vector(self) -> Vector:
        return self.components


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def cross(rows) -> Vector:
    """Generalized vector product of ``n - 1`` vectors in R^n.

    ``sum_k (-1)**(1+k) det(X_k) e_k`` where ``X_k`` drops column ``k`` of
    the stacked ``(n-1) x n`` matrix.
    """
    m = as_matrix(rows)
    n = m.ncols
    if n < 2:
        raise DomainError(f"cross product needs n >= 2, got n={n}")
    if m.nrows != n - 1:
        raise DomainError(f"cross product in R^{n} takes {n - 1} vectors, got {m.nrows}")
    return Vector(
        tuple(_sign(1 + k) * det(delete_column(m, k)) for k in range(1, n + 1)), m.mode
    )


def wedge(rows, cap: int | None = None) -> WedgeVector:
    """Exterior product of the ``k`` rows of a ``k x n`` matrix."""
    u = as_matrix(rows)
    k, n = u.shape
    if n == 0 or k == 0:
        raise DomainError("wedge needs at least one non-empty vector")
    if k > n:
        raise DomainError(f"wedge of {k} vectors in R^{n} needs k <= n")
    if cap is None:
        cap = default_cap()
    total = binomial(n, k)
    if total > cap:
        raise CapacityError(f"C({n}, {k}) = {total} components exceeds the cap of {cap}")
    out = [None] * total
    for r, s in enumerate(enumerate_subsets(n, k), start=1):
        out[total - r] = _sign(total - r) * det(minor(u, s))
    return WedgeVector(n, k, Vector(tuple(out), u.mode))


def wedge_k1(u) -> WedgeVector:
    """``wedge([u])`` for even ``n``: ``(u_n, -u_{n-1}, ..., u_2, -u_1)``."""
    u = as_vector(u)
    if u.dim % 2:
        raise DomainError(f"wedge_k1 needs an even dimension, got {u.dim}")
    return wedge([u])


def det_via_wedge(u):
    u = as_matrix(u)
    if not u.is_square:
        raise DomainError(f"det_via_wedge needs a square matrix, got {u.shape}")
    return wedge(u).components[0]


def to_plucker(w: WedgeVector) -> Vector:
    """Unsigned maximal minors in ascending lex order of column subsets."""
    total = len(w)
    return Vector(
        tuple(_sign(total - r) * w[total - r] for r in range(1, total + 1)), w.mode
    )


def from_plucker(p, n: int, k: int) -> WedgeVector:
    """Inverse of :func:`to_plucker`."""
    p = as_vector(p)
    total = binomial(n, k)
    if p.dim != total:
        raise DomainError(f"expected {total} Plucker coordinates, got {p.dim}")
    out = [None] * total
    for r in range(1, total + 1):
        out[total - r] = _sign(total - r) * p[r - 1]
    return WedgeVector(n, k, Vector(tuple(out), p.mode))


def component_position(s) -> int:
    """1-based slot of the minor on columns ``s`` inside a wedge vector."""
    return binomial(s.n, s.k) - rank(s) + 1

