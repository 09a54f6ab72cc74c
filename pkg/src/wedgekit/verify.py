"""Seeded randomized checks of the identities the library is built on.

Every suite draws integer entries uniformly from [-9, 9] with a
:class:`random.Random` seeded once per suite, so a given (suite, sizes,
trials, seed) always yields the same checks and witnesses.
"""

from __future__ import annotations

import random
from typing import Callable, Dict, List, NamedTuple

from .combinadics import binomial
from .cramer import CROSS_QUOTIENT, DET_RATIO, LinearSystem, residual, solve
from .errors import DomainError
from .numeric import Matrix, Vector, det, delete_column, dot, is_singular
from .report import Check
from .reversing import (
    exchange_det,
    exchange_matrix,
    is_antipalindromic,
    is_palindromic,
    prop3_sign,
    reverse_matrix,
    reverse_vector,
)
from .wedge import DEFAULT_CAP, cross, wedge, wedge_k1

LO, HI = -9, 9

# Worked example for the reversal counterexample.
FINAL_REMARKS_U = ((2, 3, -1, 5), (4, 7, 2, 0))


def random_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix(tuple(tuple(rng.randint(LO, HI) for _ in range(cols)) for _ in range(rows)))


def random_vector(rng: random.Random, dim: int) -> Vector:
    return Vector(tuple(rng.randint(LO, HI) for _ in range(dim)))


def random_palindromic(rng: random.Random, dim: int) -> Vector:
    half = [rng.randint(LO, HI) for _ in range((dim + 1) // 2)]
    return Vector(tuple(half + half[: dim // 2][::-1]))


def random_antipalindromic(rng: random.Random, dim: int) -> Vector:
    half = [rng.randint(LO, HI) for _ in range(dim // 2)]
    middle = [0] if dim % 2 else []
    return Vector(tuple(half + middle + [-v for v in half[::-1]]))


def random_dependent(rng: random.Random, k: int, n: int) -> Matrix:
    """k rows in R^n spanning a space of dimension < k."""
    r = rng.randint(0, k - 1)
    basis = [random_vector(rng, n) for _ in range(r)]
    rows = []
    for _ in range(k):
        acc = Vector.zeros(n)
        for b in basis:
            acc = acc + b.scale(rng.randint(LO, HI))
        rows.append(acc)
    return Matrix.from_vectors(rows)


class Suite(NamedTuple):
    run: Callable[[range, int, random.Random, int], List[Check]]
    sizes: range
    min_n: int
    summary: str


def _first_failure(name, trials, witness_of):
    """Run ``witness_of(t)`` for each trial; it returns None on success."""
    for t in range(trials):
        w = witness_of(t)
        if w is not None:
            return Check(name, False, w)
    return Check(name, True)


def suite_prop1(sizes, trials, rng, cap):
    checks = []
    for n in sizes:
        closed = exchange_det(n)
        actual = det(exchange_matrix(n))
        checks.append(
            Check(
                f"prop1 n={n}: det(J_n) matches closed form",
                actual == int(closed),
                None if actual == int(closed) else {"closed_form": int(closed), "det": actual},
            )
        )
    return checks


def suite_prop2(sizes, trials, rng, cap):
    checks = []
    for n in sizes:
        j_small = exchange_matrix(n - 1)

        def witness(_, n=n, j_small=j_small):
            m = random_matrix(rng, n - 1, n)
            rev = reverse_matrix(m)
            for k in range(1, n + 1):
                left = delete_column(rev, k)
                right = delete_column(m, n - k + 1) @ j_small
                if left != right:
                    return {"M": m, "k": k, "lhs": left, "rhs": right}
            return None

        checks.append(_first_failure(f"prop2 n={n}: reversed minors, {trials} trials", trials, witness))
    return checks


def suite_prop3(sizes, trials, rng, cap):
    checks = []
    for n in sizes:
        sign = int(prop3_sign(n))

        def witness(_, n=n, sign=sign):
            m = random_matrix(rng, n - 1, n)
            lhs = cross(reverse_matrix(m))
            rhs = reverse_vector(cross(m)).scale(sign)
            return None if lhs == rhs else {"M": m, "lhs": lhs, "rhs": rhs}

        checks.append(
            _first_failure(f"prop3 n={n}: reversed cross sign {sign:+d}, {trials} trials", trials, witness)
        )
    return checks


def suite_palindromic(sizes, trials, rng, cap):
    checks = []
    for n in sizes:
        if n == 3:
            found = None
            for _ in range(max(trials, 1)):
                m = Matrix.from_vectors([random_palindromic(rng, 3) for _ in range(2)])
                c = cross(m)
                if not c.is_zero():
                    found = {"M": m, "cross": c}
                    break
            checks.append(Check("palindromic n=3: nonzero cross product exists", found is not None, found))
            continue
        for label, gen, pred in (
            ("palindromic", random_palindromic, is_palindromic),
            ("antipalindromic", random_antipalindromic, is_antipalindromic),
        ):

            def witness(_, n=n, gen=gen, pred=pred):
                m = Matrix.from_vectors([gen(rng, n) for _ in range(n - 1)])
                if not pred(m):
                    return {"M": m, "error": "generator produced a non-symmetric row"}
                c = cross(m)
                return None if c.is_zero() else {"M": m, "cross": c}

            checks.append(
                _first_failure(f"{label} n={n}: cross product vanishes, {trials} trials", trials, witness)
            )
    return checks


def _pairs(sizes, cap, min_k=1, pred=None):
    out = []
    for n in sizes:
        for k in range(min_k, n + 1):
            if binomial(n, k) <= cap and (pred is None or pred(n, k)):
                out.append((n, k))
    return out


def suite_wedge_props(sizes, trials, rng, cap):
    checks = []

    def run(name, pairs, body):
        if not pairs:
            return

        def witness(_):
            n, k = rng.choice(pairs)
            return body(n, k)

        checks.append(_first_failure(f"{name}, {trials} trials", trials, witness))

    def linearity(n, k):
        u = random_matrix(rng, k, n)
        b = random_vector(rng, n)
        i = rng.randrange(k)
        alpha, beta = rng.randint(LO, HI), rng.randint(LO, HI)
        rows = u.row_vectors()
        mixed = rows[:i] + [rows[i].scale(alpha) + b.scale(beta)] + rows[i + 1 :]
        with_b = rows[:i] + [b] + rows[i + 1 :]
        lhs = wedge(mixed, cap).components
        rhs = wedge(u, cap).components.scale(alpha) + wedge(with_b, cap).components.scale(beta)
        return None if lhs == rhs else {"U": u, "row": i + 1, "b": b, "alpha": alpha, "beta": beta}

    def antisymmetry(n, k):
        u = random_matrix(rng, k, n)
        i, j = sorted(rng.sample(range(k), 2))
        lhs = wedge(u.swap_rows(i, j), cap).components
        rhs = -wedge(u, cap).components
        return None if lhs == rhs else {"U": u, "swap": (i + 1, j + 1)}

    def dependent(n, k):
        u = random_dependent(rng, k, n)
        w = wedge(u, cap).components
        return None if w.is_zero() else {"U": u, "wedge": w}

    def k_equals_n(n, k):
        u = random_matrix(rng, n, n)
        w = wedge(u, cap)
        d = det(u)
        return None if tuple(w) == (d,) else {"U": u, "wedge": w, "det": d}

    def k_equals_n_minus_1(n, k):
        u = random_matrix(rng, n - 1, n)
        w = wedge(u, cap).components
        c = cross(u)
        return None if w == c else {"U": u, "wedge": w, "cross": c}

    def k1_orthogonal(n, k):
        u = random_vector(rng, n)
        d = dot(u, wedge_k1(u).components)
        return None if d == 0 else {"u": u, "dot": d}

    run("wedge k-linearity", _pairs(sizes, cap), linearity)
    run("wedge row-swap antisymmetry", _pairs(sizes, cap, min_k=2), antisymmetry)
    run("wedge of dependent rows is zero", _pairs(sizes, cap), dependent)
    run("wedge with k=n is det", _pairs(sizes, cap, pred=lambda n, k: k == n), k_equals_n)
    run(
        "wedge with k=n-1 is cross",
        _pairs(sizes, cap, pred=lambda n, k: n >= 2 and k == n - 1),
        k_equals_n_minus_1,
    )
    run(
        "wedge with k=1, n even is orthogonal to u",
        _pairs(sizes, cap, pred=lambda n, k: k == 1 and n % 2 == 0),
        k1_orthogonal,
    )
    return checks


def random_nonsingular_system(rng: random.Random, n: int) -> LinearSystem:
    while True:
        a = random_matrix(rng, n, n)
        if not is_singular(a):
            return LinearSystem.from_matrix(a, random_vector(rng, n))


def suite_cramer(sizes, trials, rng, cap):
    checks = []
    for n in sizes:
        systems = [random_nonsingular_system(rng, n) for _ in range(trials)]

        def resid(t, systems=systems):
            s = systems[t]
            x = solve(s)
            r = residual(s, x)
            return None if r.is_zero() else {"system": s.coefficient_matrix(), "b": s.rhs, "x": x}

        def paths(t, systems=systems):
            s = systems[t]
            xd, xc = solve(s, DET_RATIO), solve(s, CROSS_QUOTIENT)
            return None if xd == xc else {"system": s.coefficient_matrix(), "b": s.rhs, "det": xd, "cross": xc}

        checks.append(_first_failure(f"cramer n={n}: exact residual is zero, {trials} trials", trials, resid))
        checks.append(
            _first_failure(f"cramer n={n}: cross quotient equals det ratio, {trials} trials", trials, paths)
        )
    return checks


def final_remarks_check(u=FINAL_REMARKS_U) -> Check:
    """Expected failure of the naive law ``wedge(U) = (-1)**p wedge(reverse U)``.

    The check passes when no global sign relates the two vectors.
    """
    m = Matrix(u)
    w = wedge(m).components
    wr = wedge(reverse_matrix(m)).components
    law_holds = w == wr or w == -wr
    return Check(
        "final-remarks: naive sign law wedge(U) = ±wedge(reverse U) fails as expected",
        not law_holds,
        {"U": m, "wedge": w, "wedge_reversed": wr},
    )


def suite_final_remarks(sizes, trials, rng, cap):
    return [final_remarks_check()]


SUITES: Dict[str, Suite] = {
    "prop1": Suite(suite_prop1, range(1, 13), 1, "det(J_n) closed form"),
    "prop2": Suite(suite_prop2, range(2, 9), 2, "column deletion commutes with reversal"),
    "prop3": Suite(suite_prop3, range(2, 9), 2, "cross product of reversed rows"),
    "palindromic-vanish": Suite(suite_palindromic, range(3, 9), 3, "symmetric families have zero cross product"),
    "wedge-props": Suite(suite_wedge_props, range(1, 9), 1, "linearity, antisymmetry and special cases of wedge"),
    "cramer-equiv": Suite(suite_cramer, range(2, 8), 1, "Cramer residual and path equivalence"),
    "final-remarks": Suite(suite_final_remarks, range(4, 5), 1, "reversal counterexample for k != n-1"),
}


def parse_sizes(text: str) -> range:
    """``"2..8"``, ``"2-8"`` or a single ``"5"``; bounds inclusive."""
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, _, hi = text.partition(sep)
            break
    else:
        lo = hi = text
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise DomainError(f"invalid size range {text!r}; expected e.g. 2..8") from None
    if lo_i > hi_i:
        raise DomainError(f"empty size range {text!r}")
    return range(lo_i, hi_i + 1)


def run_suite(name: str, sizes=None, trials: int = 100, seed: int = 0, cap: int = DEFAULT_CAP) -> List[Check]:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    if sizes is None:
        sizes = suite.sizes
    if len(sizes) == 0 or sizes[0] < suite.min_n:
        raise DomainError(f"suite {name} needs sizes >= {suite.min_n}")
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    rng = random.Random(seed)
    return suite.run(sizes, trials, rng, cap)
