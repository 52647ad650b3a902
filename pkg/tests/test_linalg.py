import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conecrit.linalg import (
    IntMatrix,
    IntPoly,
    char_poly,
    cofactor_determinant,
    determinant,
    eval_abs_at_minus_n,
    gcd_minors_diagonal,
    smith_normal_form,
)

P4_LAPLACIAN = IntMatrix([[1, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 1]])


def m_n(n):
    return IntMatrix([[n + 2, 0, 1, 1], [0, n + 3, 0, 1], [1, 0, n + 3, 0], [1, 1, 0, n + 2]])


def square_matrices(max_dim=5, lo=-9, hi=9):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        ).map(IntMatrix)
    )


def any_matrices(max_dim=4):
    return st.tuples(st.integers(1, max_dim), st.integers(1, max_dim)).flatmap(
        lambda rc: st.lists(
            st.lists(st.integers(-9, 9), min_size=rc[1], max_size=rc[1]),
            min_size=rc[0], max_size=rc[0],
        ).map(IntMatrix)
    )


def fraction_det(a):
    # Gaussian elimination over Q; independent of Bareiss.
    m = [[Fraction(x) for x in row] for row in a.tolist()]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    assert det.denominator == 1
    return int(det)


class TestIntMatrix:
    def test_matmul_and_transpose(self):
        a = IntMatrix([[1, 2], [3, 4], [5, 6]])
        assert (a.T @ a) == IntMatrix([[35, 44], [44, 56]])
        assert a @ [1, -1] == [-1, -1, -1]

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            IntMatrix([[1, 2], [3]])

    def test_block_diag_and_hstack(self):
        b = IntMatrix.block_diag(IntMatrix([[2]]), IntMatrix.identity(2) * 3)
        assert b == IntMatrix.diagonal([2, 3, 3])
        assert IntMatrix.identity(2).hstack(IntMatrix.ones(2, 1)) == IntMatrix([[1, 0, 1], [0, 1, 1]])

    def test_delete(self):
        assert P4_LAPLACIAN.delete(3, 3) == IntMatrix([[1, -1, 0], [-1, 2, -1], [0, -1, 2]])

    def test_big_integers_stay_exact(self):
        big = 10**40 + 7
        assert (IntMatrix([[big]]) @ IntMatrix([[big]]))[0, 0] == big * big


class TestSmithNormalForm:
    @pytest.mark.parametrize(
        "a, diag",
        [
            (IntMatrix.identity(3), [1, 1, 1]),
            (m_n(2), [1, 1, 1, 336]),
            (IntMatrix([[2, 0], [0, 3]]), [1, 6]),
            (IntMatrix([[2, -1], [-1, 2]]), [1, 3]),
            (IntMatrix.zeros(2), [0, 0]),
            (IntMatrix([[0, 4, 0], [6, 0, 0]]), [2, 12]),
        ],
    )
    def test_examples(self, a, diag):
        assert smith_normal_form(a).diag == diag

    def test_identity_transforms(self):
        r = smith_normal_form(IntMatrix.identity(3))
        assert r.U == r.V == IntMatrix.identity(3)

    def test_deterministic(self):
        assert smith_normal_form(m_n(5)) == smith_normal_form(m_n(5))

    @settings(max_examples=150, deadline=None)
    @given(any_matrices())
    def test_transform_identity_and_unimodular(self, a):
        r = smith_normal_form(a)
        assert r.U @ a @ r.V == r.S
        assert abs(determinant(r.U)) == 1
        assert abs(determinant(r.V)) == 1
        d = r.diag
        assert all(x >= 0 for x in d)
        for i in range(r.S.rows):
            for j in range(r.S.cols):
                if i != j:
                    assert r.S[i, j] == 0
        nz = [x for x in d if x]
        assert d == nz + [0] * (len(d) - len(nz))
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))

    @settings(max_examples=150, deadline=None)
    @given(square_matrices(4))
    def test_matches_gcd_of_minors(self, a):
        assert smith_normal_form(a).diag == gcd_minors_diagonal(a)

    @settings(max_examples=100, deadline=None)
    @given(square_matrices(5))
    def test_product_is_abs_det(self, a):
        d = smith_normal_form(a).diag
        prod = 1
        for x in d:
            prod *= x
        assert prod == abs(determinant(a))


class TestGcdMinors:
    def test_examples(self):
        assert gcd_minors_diagonal(IntMatrix.diagonal([2, 3])) == [1, 6]
        assert gcd_minors_diagonal(IntMatrix.zeros(2)) == [0, 0]

    def test_path_minor_forces_cyclic(self):
        # delete second row and third column of M_n: a unit 3x3 minor
        for n in range(1, 8):
            assert cofactor_determinant(m_n(n).delete(1, 2)) == 1
            assert gcd_minors_diagonal(m_n(n))[:3] == [1, 1, 1]

    def test_bounds(self):
        with pytest.raises(ValueError):
            gcd_minors_diagonal(IntMatrix([[1, 2]]))
        with pytest.raises(ValueError):
            gcd_minors_diagonal(IntMatrix.identity(7))


class TestDeterminant:
    def test_examples(self):
        assert determinant(m_n(2)) == 336
        assert determinant(P4_LAPLACIAN.delete(3, 3)) == 1
        assert determinant(IntMatrix([[2, -1], [-1, 2]])) == 3
        assert determinant(IntMatrix.zeros(0)) == 1

    def test_needs_pivot_swap(self):
        assert determinant(IntMatrix([[0, 1], [1, 0]])) == -1
        assert determinant(IntMatrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])) == -1

    def test_non_square(self):
        with pytest.raises(ValueError):
            determinant(IntMatrix([[1, 2]]))

    @settings(max_examples=200, deadline=None)
    @given(square_matrices(4))
    def test_agrees_with_cofactor_expansion(self, a):
        assert determinant(a) == cofactor_determinant(a)

    @settings(max_examples=100, deadline=None)
    @given(square_matrices(6, -50, 50))
    def test_agrees_with_rational_elimination(self, a):
        assert determinant(a) == fraction_det(a)


class TestCharPoly:
    def test_path(self):
        # x(x-2)(x^2-4x+2)
        assert char_poly(P4_LAPLACIAN).coeffs == (0, -4, 10, -6, 1)

    def test_zero_and_complete(self):
        assert char_poly(IntMatrix.zeros(2)).coeffs == (0, 0, 1)
        k3 = IntMatrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
        # x(x-3)^2
        assert char_poly(k3).coeffs == (0, 9, -6, 1)

    @settings(max_examples=100, deadline=None)
    @given(square_matrices(5))
    def test_is_det_xI_minus_A(self, a):
        p = char_poly(a)
        n = a.rows
        assert p.degree == n and p.coeffs[-1] == 1
        assert p(0) == (-1) ** n * determinant(a)
        for x in (-3, -1, 2, 5):
            assert p(x) == determinant(IntMatrix.identity(n) * x - a)

    def test_str(self):
        assert str(char_poly(P4_LAPLACIAN)) == "x^4 - 6*x^3 + 10*x^2 - 4*x"


class TestEvalAbs:
    def test_path_at_two(self):
        # |(-2)(-4)((-2)^2 + 8 + 2)| = 112, i.e. det(2I + L)
        assert eval_abs_at_minus_n(char_poly(P4_LAPLACIAN), 2) == 112

    @pytest.mark.parametrize("k, n", list(itertools.product(range(5), range(1, 5))))
    def test_monomial(self, k, n):
        assert eval_abs_at_minus_n(IntPoly((0,) * k + (1,)), n) == n**k

    def test_complete_graph_at_one(self):
        k3 = IntMatrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
        assert eval_abs_at_minus_n(char_poly(k3), 1) == 16
