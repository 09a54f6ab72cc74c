import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wedgekit.combinadics import IndexSet, binomial
from wedgekit.errors import CapacityError, DomainError
from wedgekit.numeric import Matrix, Vector, det, dot
from wedgekit.wedge import (
    DEFAULT_CAP,
    WedgeVector,
    component_position,
    cross,
    default_cap,
    det_via_wedge,
    from_plucker,
    to_plucker,
    wedge,
    wedge_k1,
)

from oracles import brute_cross, laplace_det, lex_subsets, reference_wedge

RANDOM_5x5 = [
    [1, 4, 4, 1, 9],
    [-3, 4, -2, -3, -8],
    [-2, -9, -1, 7, 1],
    [9, 4, -6, 1, -2],
    [-2, 5, 2, -5, -3],
]


def rand_rows(rng, k, n):
    return Matrix(tuple(tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(k)))


def e(i, n=4):
    return Vector.basis(n, i)


class TestCross:
    def test_standard_basis(self):
        assert cross([e(1, 3), e(2, 3)]).entries == (0, 0, 1)

    def test_hand_example(self):
        assert cross([(1, 2, 3), (4, 5, 6)]).entries == (-3, 6, -3)
        assert brute_cross([(1, 2, 3), (4, 5, 6)]) == (-3, 6, -3)

    def test_repeated_vector_gives_zero(self):
        rng = random.Random(3)
        for n in range(3, 8):
            rows = rand_rows(rng, n - 2, n).row_vectors()
            rows.append(rows[0])
            assert cross(rows).is_zero()

    def test_shape_errors(self):
        with pytest.raises(DomainError):
            cross([(1, 2, 3)])
        with pytest.raises(DomainError):
            cross([(1,)])
        with pytest.raises(DomainError):
            cross([Vector((1, 2, 3)), Vector((1, 2))])

    def test_two_dimensional(self):
        assert cross([(3, 5)]).entries == (5, -3)

    def test_orthogonal_to_factors(self):
        rng = random.Random(4)
        for n in range(2, 9):
            for _ in range(10):
                m = rand_rows(rng, n - 1, n)
                c = cross(m)
                for row in m.row_vectors():
                    assert dot(row, c) == 0

    def test_matches_brute_force(self):
        rng = random.Random(5)
        for n in range(2, 7):
            m = rand_rows(rng, n - 1, n)
            assert cross(m).entries == brute_cross(m.rows)

    def test_laplace_identity(self):
        # det A = A_1 . (A_2 x ... x A_n) = (-1)^(1+j) A_j . (A_1 x .. A_{j-1} x A_{j+1} x .. A_n)
        rng = random.Random(6)
        for n in range(2, 8):
            for _ in range(5):
                a = rand_rows(rng, n, n)
                rows = a.row_vectors()
                d = det(a)
                assert dot(rows[0], cross(rows[1:])) == d
                for j in range(1, n + 1):
                    others = rows[: j - 1] + rows[j:]
                    assert (-1) ** (1 + j) * dot(rows[j - 1], cross(others)) == d


class TestWedge:
    def test_worked_example(self):
        w = wedge([(2, 3, -1, 5), (4, 7, 2, 0)])
        assert tuple(w) == (-10, 35, 13, 20, 8, -2)
        assert (w.n, w.k, w.convention) == (4, 2, "paper-reversed")

    @pytest.mark.parametrize(
        "i,j,expected",
        [
            (1, 2, (0, 0, 0, 0, 0, -1)),
            (1, 3, (0, 0, 0, 0, 1, 0)),
            (1, 4, (0, 0, 0, -1, 0, 0)),
            (2, 3, (0, 0, 1, 0, 0, 0)),
            (2, 4, (0, -1, 0, 0, 0, 0)),
            (3, 4, (1, 0, 0, 0, 0, 0)),
        ],
    )
    def test_basis_wedges(self, i, j, expected):
        assert tuple(wedge([e(i), e(j)])) == expected

    def test_basis_wedges_span(self):
        vecs = [tuple(wedge([e(i), e(j)])) for i in range(1, 5) for j in range(i + 1, 5)]
        assert det(Matrix(vecs)) != 0

    def test_reversed_example(self):
        assert tuple(wedge([(5, -1, 3, 2), (0, 2, 7, 4)])) == (-2, 8, -13, -20, 35, -10)

    def test_k_greater_than_n(self):
        with pytest.raises(DomainError):
            wedge([(1, 2), (3, 4), (5, 6)])

    def test_cap(self):
        with pytest.raises(CapacityError):
            wedge(Matrix.identity(4).rows[:2], cap=5)
        assert len(wedge(Matrix.identity(4).rows[:2], cap=6)) == 6

    def test_env_cap(self, monkeypatch):
        monkeypatch.delenv("WEDGEKIT_CAP", raising=False)
        assert default_cap() == DEFAULT_CAP == 10**6
        monkeypatch.setenv("WEDGEKIT_CAP", "3")
        with pytest.raises(CapacityError):
            wedge([(1, 2, 3, 4)])
        monkeypatch.setenv("WEDGEKIT_CAP", "nope")
        with pytest.raises(DomainError):
            default_cap()

    def test_one_by_one(self):
        assert tuple(wedge([(7,)])) == (7,)

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            wedge([()])

    def test_float_mode(self):
        w = wedge(Matrix(((2, 3, -1, 5), (4, 7, 2, 0)), "float"))
        assert w.mode == "float"
        assert tuple(w) == pytest.approx((-10, 35, 13, 20, 8, -2))

    def test_component_position(self):
        for s, r in zip(lex_subsets(4, 2), range(1, 7)):
            assert component_position(IndexSet.from_one_based(s, 4)) == 6 - r + 1

    def test_wedge_vector_validation(self):
        with pytest.raises(DomainError):
            WedgeVector(4, 2, Vector((1, 2, 3)))
        with pytest.raises(DomainError):
            WedgeVector(2, 3, Vector((1,)))

    def test_oracle_equivalence(self):
        rng = random.Random(7)
        for n in range(1, 7):
            for k in range(1, n + 1):
                for _ in range(3):
                    u = rand_rows(rng, k, n)
                    assert tuple(wedge(u)) == reference_wedge(u.rows)


class TestSpecialCases:
    def test_k1_examples(self):
        assert tuple(wedge_k1((11, 12, 13, 14))) == (14, -13, 12, -11)
        assert tuple(wedge_k1((1, 0, 0, 0))) == (0, 0, 0, -1)
        u = Vector((3, 1, 4, 1))
        assert dot(u, wedge_k1(u).components) == 0

    def test_k1_rejects_odd(self):
        with pytest.raises(DomainError):
            wedge_k1((1, 2, 3))

    def test_k1_component_formula(self):
        # v_j = (-1)^(j+1) u_{2p-j+1}
        u = Vector(tuple(range(1, 9)))
        v = wedge_k1(u)
        assert all(v[j - 1] == (-1) ** (j + 1) * u[8 - j] for j in range(1, 9))

    def test_odd_dimension_is_not_orthogonal_in_general(self):
        u = Vector((1, 2, 3))
        assert dot(u, wedge([u]).components) != 0

    def test_det_via_wedge(self):
        assert det_via_wedge(Matrix.identity(3)) == 1
        assert det_via_wedge([(2, 3), (4, 7)]) == 2
        assert det_via_wedge(RANDOM_5x5) == -3416 == laplace_det(RANDOM_5x5)
        with pytest.raises(DomainError):
            det_via_wedge([(1, 2, 3)])

    def test_k_n_minus_1_is_cross(self):
        rng = random.Random(8)
        for n in range(2, 9):
            for _ in range(5):
                m = rand_rows(rng, n - 1, n)
                assert wedge(m).components == cross(m)


class TestPlucker:
    def test_worked_example(self):
        u = [(2, 3, -1, 5), (4, 7, 2, 0)]
        p = to_plucker(wedge(u))
        assert p.entries == (2, 8, -20, 13, -35, -10)
        minors = tuple(laplace_det([[r[a - 1], r[b - 1]] for r in u]) for a, b in lex_subsets(4, 2))
        assert p.entries == minors

    def test_square(self):
        w = wedge([(2, 3), (4, 7)])
        assert to_plucker(w).entries == (2,) == tuple(w)

    def test_basis(self):
        assert to_plucker(wedge([e(1), e(2)])).entries == (1, 0, 0, 0, 0, 0)

    def test_roundtrip(self):
        rng = random.Random(9)
        for n in range(1, 7):
            for k in range(1, n + 1):
                w = wedge(rand_rows(rng, k, n))
                assert from_plucker(to_plucker(w), n, k) == w

    def test_from_plucker_size(self):
        with pytest.raises(DomainError):
            from_plucker((1, 2, 3), 4, 2)


small = st.integers(-9, 9)


@st.composite
def wedge_inputs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n))
    rows = draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=k, max_size=k))
    return Matrix(tuple(tuple(r) for r in rows))


@settings(max_examples=80, deadline=None)
@given(wedge_inputs(), st.data())
def test_multilinearity(u, data):
    k, n = u.shape
    i = data.draw(st.integers(0, k - 1))
    b = Vector(tuple(data.draw(st.lists(small, min_size=n, max_size=n))))
    alpha = Fraction(data.draw(small), data.draw(st.integers(1, 5)))
    beta = data.draw(small)
    rows = u.row_vectors()
    lhs = wedge(rows[:i] + [rows[i].scale(alpha) + b.scale(beta)] + rows[i + 1 :])
    rhs = wedge(u).components.scale(alpha) + wedge(rows[:i] + [b] + rows[i + 1 :]).components.scale(beta)
    assert lhs.components == rhs


@settings(max_examples=80, deadline=None)
@given(wedge_inputs().filter(lambda u: u.nrows >= 2), st.data())
def test_antisymmetry(u, data):
    i, j = data.draw(st.lists(st.integers(0, u.nrows - 1), min_size=2, max_size=2, unique=True))
    assert wedge(u.swap_rows(i, j)).components == -wedge(u).components


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))), st.data())
def test_dependent_rows_vanish(nk, data):
    n, k = nk
    r = data.draw(st.integers(0, k - 1))
    basis = [Vector(tuple(data.draw(st.lists(small, min_size=n, max_size=n)))) for _ in range(r)]
    rows = []
    for _ in range(k):
        acc = Vector.zeros(n)
        for v in basis:
            acc = acc + v.scale(data.draw(small))
        rows.append(acc)
    assert wedge(rows).components.is_zero()
    assert len(wedge(rows)) == binomial(n, k)
