import itertools

import pytest

from monotri import counting, oracle
from monotri.counting import AlphaMethod, POLY_METHODS
from monotri.exactpoly import Poly, parse_poly
from monotri.verify import increasing_rows


class TestAlphaEval:
    @pytest.mark.parametrize("method", list(AlphaMethod))
    def test_123(self, method):
        assert counting.alpha_eval((1, 2, 3), method) == 7

    def test_single_entry(self):
        assert counting.alpha_eval((5,)) == 1

    def test_pair(self):
        assert counting.alpha_eval((1, 2)) == 2

    def test_empty_row(self):
        with pytest.raises(ValueError):
            counting.alpha_eval(())

    def test_brute_rejects_non_increasing(self):
        with pytest.raises(ValueError, match="strictly increasing"):
            counting.alpha_eval((3, 1), AlphaMethod.BRUTE_FORCE)

    def test_polynomial_extends_off_range(self):
        # alpha(2) = k2 - k1 + 1 vanishes on (k, k-1)
        assert counting.alpha_eval((4, 3)) == 0

    @pytest.mark.parametrize("method", [AlphaMethod.OPERATOR_DIRECT, AlphaMethod.OPERATOR_VARIANT])
    def test_pointwise_matches_polynomial(self, method):
        for n in (2, 3, 4):
            poly = counting.alpha_poly(n)
            for row in itertools.product(range(-1, 3), repeat=n):
                assert counting.alpha_eval(row, method) == poly.evaluate(row)


class TestAlphaPoly:
    def test_n1(self):
        assert counting.alpha_poly(1) == Poly.const(1, 1)

    def test_n2(self):
        assert counting.alpha_poly(2, AlphaMethod.RECURSION) == parse_poly("1 - k1 + k2", 2)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_methods_agree(self, n):
        polys = [counting.alpha_poly(n, m) for m in POLY_METHODS]
        assert all(p == polys[0] for p in polys)

    @pytest.mark.parametrize("n", [3, 4])
    def test_factor_order_irrelevant(self, n):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        ref = counting.alpha_poly(n)
        for perm in itertools.islice(itertools.permutations(pairs), 0, None, 7):
            assert counting.alpha_direct(n, perm) == ref

    def test_brute_has_no_polynomial(self):
        with pytest.raises(ValueError):
            counting.alpha_poly(3, AlphaMethod.BRUTE_FORCE)

    def test_bad_size(self):
        with pytest.raises(ValueError):
            counting.alpha_poly(0)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_integer_valued(self, n):
        p = counting.alpha_poly(n)
        for row in itertools.product(range(-2, 2), repeat=n):
            assert p.evaluate(row).denominator == 1


class TestTableaux:
    def test_examples(self):
        assert counting.beta_count((1, 3, 5)) == 8
        assert counting.beta_count((1, 2, 4)) == 3

    @pytest.mark.parametrize("n", range(1, 5))
    def test_antisymmetrized_alpha_is_product(self, n):
        assert counting.antisymmetrized_alpha(n) == counting.ssyt_product_poly(n)

    def test_rejects_bad_row(self):
        with pytest.raises(ValueError):
            counting.beta_count((2, 2))


class TestClosedForms:
    def test_asm_values(self):
        assert [counting.asm_count(n) for n in range(1, 8)] == [1, 2, 7, 42, 429, 7436, 218348]

    def test_refined_n3(self):
        assert [counting.refined_asm(3, k) for k in (1, 2, 3)] == [2, 3, 2]

    def test_refined_bad_column(self):
        with pytest.raises(ValueError):
            counting.refined_asm(3, 4)

    def test_vsasm(self):
        assert [counting.vsasm_count(n) for n in range(1, 5)] == [1, 3, 26, 646]

    @pytest.mark.parametrize("n", range(2, 7))
    def test_refined_poly_meets_gamma_only_on_columns(self, n):
        diff = counting.gamma_poly(n, n) - counting.refined_asm_poly(n)
        assert all(diff.evaluate((k,)) == 0 for k in range(1, n + 1))
        assert not diff.is_zero()


class TestGamma:
    def test_r1_is_one(self):
        assert counting.gamma_poly(1, 4) == Poly.const(4, 1)

    def test_n2(self):
        assert counting.gamma_poly(2, 2) == parse_poly("-k^2 + 3*k - 1", 1, ["k"])

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            counting.gamma_poly(3, 2)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_enumeration(self, n):
        for r in range(1, n + 1):
            g = counting.gamma_poly(r, n)
            counts = oracle.trapezoid_top_counts(n, r)
            for top in increasing_rows(n - r + 1, 1, n):
                assert g.evaluate(top) == counts[top]


class TestIdentities:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_t_prime_vanishes(self, n):
        assert counting.t_prime_vanishing_check(n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_degree_bound(self, n):
        p = counting.alpha_poly(n, AlphaMethod.RECURSION)
        assert all(p.degree(i) <= n - 1 for i in range(1, n + 1))
