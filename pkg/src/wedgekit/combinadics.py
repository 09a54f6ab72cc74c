"""Lexicographically ordered k-subsets of {1, ..., n}.

Subsets are stored 0-based and shown 1-based.  Ranks are 1-based, so the
first subset ``{1, ..., k}`` has rank 1 and ``{n-k+1, ..., n}`` has rank
``C(n, k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Tuple

from .errors import CapacityError, DomainError

# Largest count representable in a signed 64-bit integer.
MAX_COUNT = 2**63 - 1


@dataclass(frozen=True, order=True)
class IndexSet:
    """A strictly increasing selection of column positions out of ``n``."""

    indices: Tuple[int, ...]
    n: int

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", idx)
        k = len(idx)
        if not 1 <= k <= self.n:
            raise DomainError(f"need 1 <= k <= n, got k={k}, n={self.n}")
        if idx[0] < 0 or idx[-1] >= self.n:
            raise DomainError(f"indices {self.one_based} out of range 1..{self.n}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise DomainError(f"indices {self.one_based} are not strictly increasing")

    @classmethod
    def from_one_based(cls, indices: Iterable[int], n: int) -> "IndexSet":
        return cls(tuple(int(i) - 1 for i in indices), n)

    @property
    def k(self) -> int:
        return len(self.indices)

    @property
    def one_based(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        sep = "" if self.n < 10 else ","
        return sep.join(str(i) for i in self.one_based)


def binomial(n: int, k: int) -> int:
    """Return ``C(n, k)``, refusing results that do not fit a 64-bit count."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"binomial needs 0 <= k <= n, got n={n}, k={k}")
    value = math.comb(n, k)
    if value > MAX_COUNT:
        raise CapacityError(f"C({n}, {k}) exceeds the 64-bit count range")
    return value


def _check_nk(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise DomainError(f"subsets need 1 <= k <= n, got n={n}, k={k}")


def enumerate_subsets(n: int, k: int) -> list[IndexSet]:
    _check_nk(n, k)
    binomial(n, k)
    return [IndexSet(c, n) for c in combinations(range(n), k)]


def rank(s: IndexSet) -> int:
    """1-based lexicographic position of ``s`` among all k-subsets of n.

    Uses the combinadic identity
    ``rank = C(n, k) - sum_j C(n - 1 - s_j, k - j)`` (0-based ``s_j``, ``j``).
    """
    if not isinstance(s, IndexSet):
        raise DomainError(f"expected an IndexSet, got {type(s).__name__}")
    n, k = s.n, s.k
    tail = sum(math.comb(n - 1 - v, k - j) for j, v in enumerate(s.indices))
    return binomial(n, k) - tail


def unrank(p: int, n: int, k: int) -> IndexSet:
    """Inverse of :func:`rank`."""
    _check_nk(n, k)
    total = binomial(n, k)
    if not 1 <= p <= total:
        raise DomainError(f"rank {p} out of range 1..{total}")
    m = total - p
    out = []
    c = n
    for i in range(k, 0, -1):
        c -= 1
        while math.comb(c, i) > m:
            c -= 1
        m -= math.comb(c, i)
        out.append(n - 1 - c)
    return IndexSet(tuple(out), n)


def complement(s: IndexSet) -> IndexSet:
    if s.k >= s.n:
        raise DomainError("complement of the full index set is empty")
    chosen = set(s.indices)
    return IndexSet(tuple(i for i in range(s.n) if i not in chosen), s.n)
