import pytest

from conecrit.cones import (
    VerificationError,
    all_ones_order_check,
    block_reduction,
    cone1_group,
    cone_det_identity,
    cone_matrix,
    expected_block_matrix,
    factorize,
    full_report,
    gcd_identity_check,
    h_n_group,
    order_formula,
    p_adic_valuation,
    ses_consistency,
    splitting_analysis,
    theorem_structure,
)
from conecrit.corpus import standard_corpus
from conecrit.graph import (
    NotEulerianError,
    complete_graph,
    cone,
    from_arcs,
    from_undirected,
    laplacian,
    path_graph,
    reduced_laplacian,
)
from conecrit.groups import AbelianGroup, critical_group
from conecrit.linalg import IntMatrix, determinant
from conecrit.oracles import arborescence_count, spanning_tree_count


def m_n(n):
    return IntMatrix([[n + 2, 0, 1, 1], [0, n + 3, 0, 1], [1, 0, n + 3, 0], [1, 1, 0, n + 2]])


class TestConeMatrix:
    def test_path_matches_displayed_matrix(self, p4):
        for n in range(1, 10):
            assert cone_matrix(p4, n) == m_n(n)

    def test_complete(self, k3):
        assert cone_matrix(k3, 4) == IntMatrix.identity(3) * 7

    @pytest.mark.parametrize("g", standard_corpus(4))
    def test_all_ones_eigenvector(self, g):
        for n in (1, 2, 5):
            assert cone_matrix(g, n) @ ([1] * g.k) == [n + g.k] * g.k
            assert determinant(cone_matrix(g, n)) != 0

    def test_rejects_non_eulerian(self):
        with pytest.raises(NotEulerianError):
            cone_matrix(from_arcs(2, [(0, 1)]), 2)


class TestStructure:
    def test_path(self, p4):
        assert theorem_structure(p4, 2) == AbelianGroup((336,))
        assert theorem_structure(p4, 3) == AbelianGroup((7, 805))

    def test_complete(self, k3):
        assert theorem_structure(k3, 4) == AbelianGroup((7,) * 5)
        assert critical_group(cone(k3, 4)) == AbelianGroup((7,) * 5)

    def test_n_must_be_two(self, p4):
        with pytest.raises(ValueError):
            theorem_structure(p4, 1)


class TestBlockReduction:
    def test_path_n2_has_no_middle_block(self, p4):
        assert block_reduction(p4, 2) == IntMatrix.block_diag(m_n(2), IntMatrix([[1]]))

    def test_path_n3(self, p4):
        assert block_reduction(p4, 3) == IntMatrix.block_diag(m_n(3), IntMatrix([[7]]), IntMatrix([[1]]))

    def test_complete(self, k3):
        want = IntMatrix.diagonal([6, 6, 6, 6, 1])
        assert block_reduction(k3, 3) == want
        assert expected_block_matrix(k3, 3) == want

    def test_corrupted_input_is_caught(self, p4, monkeypatch):
        import conecrit.cones as cones

        def corrupted(g, sink):
            a = reduced_laplacian(g, sink).tolist()
            a[0][-1] += 1
            return IntMatrix(a)

        monkeypatch.setattr(cones, "reduced_laplacian", corrupted)
        with pytest.raises(VerificationError) as info:
            block_reduction(p4, 3)
        assert info.value.claim == "block_reduction"


class TestAllOnes:
    @pytest.mark.parametrize("g, n, want", [
        (path_graph(4), 2, 6), (complete_graph(3), 5, 8), (path_graph(4), 9, 13),
    ])
    def test_examples(self, g, n, want):
        assert all_ones_order_check(g, n) == want


class TestOrderFormula:
    def test_path_n2(self, p4):
        # det(2I + L) = 2*4*14 = 112, so 112/2 * 6 = 336
        assert determinant(laplacian(p4) + IntMatrix.identity(4) * 2) == 112
        assert order_formula(p4, 2) == 336

    def test_complete(self, k3):
        assert order_formula(k3, 2) == 125 == spanning_tree_count(complete_graph(5))

    @pytest.mark.parametrize("k", range(1, 7))
    def test_trees(self, k):
        t = path_graph(k)
        want = determinant(laplacian(t) + IntMatrix.identity(k) * 2) // 2 * (k + 2)
        assert order_formula(t, 2) == want
        assert want == critical_group(cone(t, 2)).order()


class TestDetIdentity:
    def test_path_factorization(self, p4):
        for n in range(1, 15):
            assert abs(determinant(m_n(n))) == (n * n + 4 * n + 2) * (n + 4) * (n + 2)
            assert cone_det_identity(p4, n)

    def test_complete(self, k3):
        for n in range(1, 6):
            assert determinant(cone_matrix(k3, n)) == (n + 3) ** 3
            assert cone_det_identity(k3, n)


class TestSplitting:
    def test_path_parity(self, p4):
        for n in range(2, 16):
            assert splitting_analysis(p4, n).splits == (n % 2 == 1)

    def test_path_n2_evidence(self, p4):
        r = splitting_analysis(p4, 2)
        assert r.n_plus_k == 6
        assert r.factorization == ((2, 1), (3, 1))
        assert r.cok_valuations[2] == (4,)
        assert r.witness == {2: False, 3: True}
        assert not r.splits

    def test_complete(self, k3):
        for n in range(2, 8):
            assert splitting_analysis(k3, n).splits

    def test_factorize(self):
        assert factorize(1) == []
        assert factorize(336) == [(2, 4), (3, 1), (7, 1)]
        assert factorize(97) == [(97, 1)]
        assert p_adic_valuation(336, 2) == 4


class TestGcdIdentity:
    def test_values(self):
        assert all(gcd_identity_check(n) for n in range(1, 200))


class TestConeOne:
    def test_complete(self, k3):
        assert cone1_group(k3) == AbelianGroup((4, 4))

    def test_path(self, p4):
        g = cone1_group(p4)
        assert g.order() == 21 == determinant(IntMatrix.identity(4) + laplacian(p4))
        assert spanning_tree_count(cone(p4, 1)) == 21

    def test_edge(self):
        assert cone1_group(from_undirected(2, [(0, 1)])) == AbelianGroup((3,))


class TestReport:
    def test_path_n3(self, p4):
        r = full_report(p4, 3)
        assert r.group_direct == r.group_theorem == AbelianGroup((7, 805))
        assert r.order_direct == r.order_formula == 5635
        assert r.all_ones_order == 7
        assert r.h_n.order() == 115
        assert r.ok

    def test_complete(self, k3):
        r = full_report(k3, 2)
        assert r.group_direct == r.group_theorem == AbelianGroup((5, 5, 5))
        assert r.order_direct == 125

    def test_directed_cycle(self, c3):
        g2 = cone(c3, 2)
        assert [arborescence_count(g2, u) for u in range(5)] == [65] * 5
        r = full_report(c3, 2)
        assert r.group_direct == r.group_theorem == AbelianGroup((65,))
        assert r.h_n.order() == 13
        assert r.ok

    def test_h_n_and_ses(self, p4):
        for n in range(2, 7):
            assert h_n_group(p4, n).order() == (n * n + 4 * n + 2) * (n + 2)
            assert ses_consistency(p4, n)
