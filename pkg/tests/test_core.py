from __future__ import annotations

import numpy as np
import pytest

from indecomp.construct import abelian, cyclic, dihedral
from indecomp.core import FiniteGroup

from conftest import brute_center_mask, brute_conjugate_mask


class TestTableValidation:
    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            FiniteGroup(np.zeros((2, 3), dtype=np.int64))

    def test_rejects_bad_identity(self):
        # Z/3 table with elements relabeled so index 0 is not the identity
        table = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
        with pytest.raises(ValueError, match="identity"):
            FiniteGroup(np.array(table))

    def test_rejects_non_latin(self):
        table = np.array([[0, 1], [1, 1]])
        with pytest.raises(ValueError):
            FiniteGroup(table)

    def test_rejects_non_associative_loop(self):
        # order-5 loop: Latin square with identity and inverses, all elements
        # involutions, which no group of order 5 allows
        table = np.array(
            [
                [0, 1, 2, 3, 4],
                [1, 0, 3, 4, 2],
                [2, 4, 0, 1, 3],
                [3, 2, 4, 0, 1],
                [4, 3, 1, 2, 0],
            ]
        )
        assert table[1, 2] == 3 and table[table[1, 2], 2] != table[1, table[2, 2]]
        with pytest.raises(ValueError, match="associative"):
            FiniteGroup(table)

    def test_accepts_all_constructors(self, small_corpus):
        for G in small_corpus:
            n = G.order
            assert np.array_equal(G.table[0], np.arange(n))
            assert np.array_equal(np.sort(G.table, axis=1), np.tile(np.arange(n), (n, 1)))
            assert all(G.table[g, G.inv(g)] == 0 for g in range(n))


class TestMultiply:
    def test_cyclic_inverse_pair(self):
        G = cyclic(4)
        assert G.multiply(1, 3) == 0

    def test_identity_absorbs(self, s3):
        for g in range(s3.order):
            assert s3.multiply(0, g) == g
            assert s3.multiply(g, 0) == g

    def test_q3_x_squared_is_involution(self, q3):
        # x sits at index 1 by construction; x^2 has order 2
        assert q3.element_order(1) == 4
        x2 = q3.multiply(1, 1)
        assert q3.element_order(x2) == 2

    def test_out_of_range(self, s3):
        with pytest.raises(IndexError):
            s3.multiply(0, 6)
        with pytest.raises(IndexError):
            s3.multiply(-1, 0)


class TestElementOrder:
    def test_identity(self, s3):
        assert s3.element_order(0) == 1

    def test_q3_y_has_order_4(self, q3):
        # y is index 4 (= 2^(n-1)); y^2 = x^2 != e, y^4 = e
        assert q3.element_order(4) == 4

    def test_cyclic_12(self):
        assert cyclic(12).element_order(2) == 6

    def test_order_divides_group_order(self, small_corpus):
        for G in small_corpus:
            assert all(G.order % int(o) == 0 for o in G.element_orders())


class TestGeneratedSubgroup:
    def test_empty_gives_trivial(self, s3):
        assert s3.generated_subgroup([]).size == 1

    def test_three_cycle_in_s3(self, s3):
        g = next(i for i in range(6) if s3.element_order(i) == 3)
        assert s3.generated_subgroup([g]).size == 3

    def test_q3_generated_by_x_y(self, q3):
        assert q3.generated_subgroup([1, 4]).size == 8

    def test_idempotent_on_closed_masks(self, small_corpus):
        for G in small_corpus[:8]:
            H = G.generated_subgroup([g for g in range(G.order) if g % 3 == 0])
            again = G.generated_subgroup(H.elements())
            assert again.mask == H.mask


class TestCenterAndCentralizer:
    def test_abelian_center_is_whole(self):
        G = abelian([4, 2])
        assert G.center().size == G.order

    def test_q3_center_size_two(self, q3):
        assert q3.center().size == 2

    def test_s3_center_trivial_matches_brute(self, s3):
        assert s3.center().mask == brute_center_mask(s3.table) == 1

    def test_center_matches_brute_oracle(self, small_corpus):
        for G in small_corpus:
            assert G.center().mask == brute_center_mask(G.table)

    def test_centralizer_of_identity(self, s3):
        assert s3.centralizer(0).size == 6

    def test_centralizer_transposition_s3(self, s3):
        t = next(i for i in range(6) if s3.element_order(i) == 2)
        C = s3.centralizer(t)
        assert C.size == 2
        assert {0, t} == set(C.elements())

    def test_centralizer_of_x_in_q3(self, q3):
        C = q3.centralizer(1)
        assert C.size == 4
        assert C.mask == q3.cyclic_subgroup_mask(1)

    def test_center_is_normal(self, small_corpus):
        for G in small_corpus:
            Z = G.center()
            for g in range(G.order):
                assert Z.conjugate(g).mask == Z.mask


class TestConjugateSubgroup:
    def test_by_identity(self, s3):
        H = s3.generated_subgroup([1])
        assert H.conjugate(0).mask == H.mask

    def test_normal_subgroup_fixed(self, s3):
        a3 = s3.generated_subgroup(
            [next(i for i in range(6) if s3.element_order(i) == 3)]
        )
        for g in range(6):
            assert a3.conjugate(g).mask == a3.mask

    def test_s3_transposition_conjugates(self, s3):
        t = next(i for i in range(6) if s3.element_order(i) == 2)
        c = next(i for i in range(6) if s3.element_order(i) == 3)
        H = s3.generated_subgroup([t])
        K = H.conjugate(c)
        assert K.size == 2
        assert K.mask != H.mask
        assert K.mask == brute_conjugate_mask(s3.table, H.mask, c)

    def test_matches_brute_oracle(self, small_corpus):
        rng = np.random.default_rng(7)
        for G in small_corpus:
            H = G.generated_subgroup([int(rng.integers(G.order))])
            g = int(rng.integers(G.order))
            assert H.conjugate(g).mask == brute_conjugate_mask(G.table, H.mask, g)


class TestDerivedSeriesAndSolvability:
    def test_abelian(self):
        G = cyclic(9)
        series = G.derived_series()
        assert [s.size for s in series] == [9, 1]
        assert G.is_solvable()

    def test_s3(self, s3):
        assert [s.size for s in s3.derived_series()] == [6, 3, 1]
        assert s3.is_solvable()

    def test_a5_inside_s5_not_solvable(self, s5):
        orders = s5.element_orders()
        a5 = s5.generated_subgroup([g for g in range(120) if orders[g] == 3])
        assert a5.size == 60
        A5 = a5.as_group()
        series = A5.derived_series()
        assert [s.size for s in series] == [60]
        assert not A5.is_solvable()

    def test_odd_order_corpus_groups_solvable(self, small_corpus):
        for G in small_corpus:
            if G.order % 2 == 1:
                assert G.is_solvable()


class TestNilpotency:
    def test_p_groups(self, q3):
        assert q3.is_nilpotent()
        assert dihedral(4).is_nilpotent()

    def test_cyclic_6(self):
        assert cyclic(6).is_nilpotent()

    def test_s3(self, s3):
        assert not s3.is_nilpotent()


class TestSubgroupObject:
    def test_as_group_revalidates(self, s4):
        orders = s4.element_orders()
        H = s4.generated_subgroup([next(g for g in range(24) if orders[g] == 4)])
        K = H.as_group()
        assert K.order == 4
        assert K.element_order(1) in (2, 4)

    def test_subgroup_mask_check(self, s3):
        c = next(i for i in range(6) if s3.element_order(i) == 3)
        with pytest.raises(ValueError, match="closed"):
            s3.subgroup(1 | 1 << c, check=True)
        with pytest.raises(ValueError, match="identity"):
            s3.subgroup(0b10)

    def test_generating_set_generates(self, small_corpus):
        for G in small_corpus:
            gens = G.generating_set()
            assert G.generated_subgroup(gens).size == G.order
            assert len(gens) <= 3
