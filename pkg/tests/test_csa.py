from __future__ import annotations

import pytest

from indecomp.construct import abelian, cyclic, direct_product
from indecomp.csa import is_commutative_transitive, is_csa, is_malnormal
from indecomp.lattice import all_subgroups, maximal_abelian_subgroups
from indecomp.verify import revalidate_csa_witness


class TestMalnormal:
    def test_trivial_subgroup(self, s3):
        ok, _ = is_malnormal(s3.trivial_subgroup(), s3)
        assert ok

    def test_a3_in_s3_fails(self, s3):
        c = next(i for i in range(6) if s3.element_order(i) == 3)
        a3 = s3.generated_subgroup([c])
        ok, g = is_malnormal(a3, s3)
        assert not ok
        assert g not in a3
        assert s3.element_order(g) == 2

    def test_transposition_subgroup_malnormal(self, s3):
        t = next(i for i in range(6) if s3.element_order(i) == 2)
        ok, _ = is_malnormal(s3.generated_subgroup([t]), s3)
        assert ok

    def test_wrong_parent_rejected(self, s3, q3):
        with pytest.raises(ValueError):
            is_malnormal(q3.trivial_subgroup(), s3)


class TestCSA:
    def test_abelian_groups_are_csa(self):
        for G in [cyclic(1), cyclic(12), abelian([2, 2]), abelian([4, 2])]:
            ok, _ = is_csa(G)
            assert ok

    def test_s3_fails_with_a3_witness(self, s3):
        ok, witness = is_csa(s3)
        assert not ok
        A, g = witness
        assert A.size == 3
        assert revalidate_csa_witness(s3, A, g)

    def test_q3_fails(self, q3):
        ok, witness = is_csa(q3)
        assert not ok
        A, g = witness
        assert revalidate_csa_witness(q3, A, g)

    def test_no_nonabelian_csa_in_corpus(self, small_corpus):
        for G in small_corpus:
            ok, witness = is_csa(G)
            if G.is_abelian():
                assert ok
            else:
                assert not ok
                assert revalidate_csa_witness(G, *witness)

    def test_csa_implies_commutative_transitive(self, small_corpus):
        for G in small_corpus:
            if is_csa(G)[0]:
                assert is_commutative_transitive(G)

    def test_subgroup_heredity_for_csa_groups(self, small_corpus):
        for G in small_corpus:
            if not is_csa(G)[0] or G.order > 16:
                continue
            for sub in all_subgroups(G).subgroups:
                assert is_csa(sub.as_group())[0]


class TestCommutativeTransitive:
    def test_abelian(self):
        assert is_commutative_transitive(abelian([9, 3]))

    def test_s3(self, s3):
        assert is_commutative_transitive(s3)

    def test_s3_times_c2_fails(self, s3):
        assert not is_commutative_transitive(direct_product(s3, cyclic(2)))


class TestEvenOrderFailures:
    def test_even_nonabelian_groups_fail_with_valid_witness(self, small_corpus):
        for G in small_corpus:
            if G.order % 2 or G.is_abelian():
                continue
            ok, witness = is_csa(G)
            assert not ok
            A, g = witness
            assert any(A.mask == m.mask for m in maximal_abelian_subgroups(G))
            assert revalidate_csa_witness(G, A, g)
