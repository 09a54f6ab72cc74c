"""Generalized cross products, the exterior map (R^n)^k -> R^C(n,k), a
cross-product Cramer solver and the column-reversal algebra around them."""

from .combinadics import IndexSet, binomial, complement, enumerate_subsets, rank, unrank
from .cramer import LinearSystem, residual, solve, solve_component
from .errors import (
    CapacityError,
    DomainError,
    InvariantError,
    ParseError,
    SingularMatrixError,
    WedgeKitError,
)
from .numeric import EXACT, FLOAT, Matrix, Vector, delete_column, det, dot, minor
from .reversing import (
    SignParity,
    Symmetry,
    classify,
    exchange_det,
    exchange_matrix,
    palindromic_cross_check,
    prop3_sign,
    reverse_matrix,
    reverse_vector,
    reversed_deleted_column,
)
from .wedge import (
    DEFAULT_CAP,
    WedgeVector,
    cross,
    det_via_wedge,
    from_plucker,
    to_plucker,
    wedge,
    wedge_k1,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DEFAULT_CAP",
    "DomainError",
    "EXACT",
    "FLOAT",
    "IndexSet",
    "InvariantError",
    "LinearSystem",
    "Matrix",
    "ParseError",
    "SignParity",
    "SingularMatrixError",
    "Symmetry",
    "Vector",
    "WedgeKitError",
    "WedgeVector",
    "binomial",
    "classify",
    "complement",
    "cross",
    "delete_column",
    "det",
    "det_via_wedge",
    "dot",
    "enumerate_subsets",
    "exchange_det",
    "exchange_matrix",
    "from_plucker",
    "minor",
    "palindromic_cross_check",
    "prop3_sign",
    "rank",
    "residual",
    "reverse_matrix",
    "reverse_vector",
    "reversed_deleted_column",
    "solve",
    "solve_component",
    "to_plucker",
    "unrank",
    "wedge",
    "wedge_k1",
]
