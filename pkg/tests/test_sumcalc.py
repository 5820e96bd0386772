import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monotri.exactpoly import Poly, parse_poly
from monotri.sumcalc import (SumBound, interval_sum, merge_identity_sides, merge_rule_check,
                             nested_sum, unit_antidifference, variable_bounds)
from monotri.verify import DEGREE_WITNESS, increasing_rows

from strategies import brute_interleaved_sum, polys, random_poly

x = Poly.var(1, 1)


def rising(base, length):
    out = Poly.const(base.nvars, 1)
    for i in range(length):
        out = out * (base + i)
    return out


class TestAntidifference:
    def test_constant(self):
        assert unit_antidifference(Poly.const(1, 1), 1) == x + 1

    def test_triangular(self):
        assert unit_antidifference(x, 1) == x * (x + 1) / 2

    @pytest.mark.parametrize("n", range(0, 9))
    def test_rising_factorial_formula(self, n):
        # variables: 1 = summation variable (then y), 2 = w
        y, w = Poly.var(2, 1), Poly.var(2, 2)
        lhs = unit_antidifference(rising(y + w, n), 1)
        rhs = (rising(y + w, n + 1) - rising(w - 1, n + 1)) / (n + 1)
        assert lhs == rhs

    @given(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=1, max_size=9))
    def test_difference_recovers_summand(self, coeffs):
        p = Poly(1, {(d,): c for d, c in enumerate(coeffs)})
        q = unit_antidifference(p, 1)
        assert q - q.shift(1, -1) == p
        assert q(0) == p(0)

    def test_other_variables_are_parameters(self):
        p = parse_poly("k1*k2^2 + 3", 2)
        q = unit_antidifference(p, 2)
        for a in range(-2, 3):
            for y in range(0, 4):
                assert q(a, y) == sum(p(a, t) for t in range(y + 1))


class TestIntervalSum:
    def test_empty(self):
        assert interval_sum(x ** 2, 1, 5, 4).is_zero()

    def test_reversed(self):
        assert interval_sum(Poly.const(1, 1), 1, 3, 1) == -1

    def test_reversed_equals_negated_gap(self):
        f = x ** 3 - 2 * x
        assert interval_sum(f, 1, 6, 2) == -(f(3) + f(4) + f(5))

    def test_symbolic_length(self):
        p = Poly.const(3, 1)  # summand in slot 3, bounds k1, k2
        assert interval_sum(p, 3, SumBound(1), SumBound(2)).restrict(2) == parse_poly("k2 - k1 + 1", 2)

    @given(polys(1, max_deg=4))
    @settings(max_examples=40)
    def test_additivity(self, p):
        # slot 1 summed; slots 2, 3, 4 carry a, b, c
        f = p.embed(4, [1])
        a, b, c = SumBound(2), SumBound(3), SumBound(4)
        assert interval_sum(f, 1, a, c) == interval_sum(f, 1, a, b) + interval_sum(f, 1, b + 1, c)

    @given(polys(1, max_deg=3), st.integers(-4, 4), st.integers(-4, 4))
    def test_integer_bounds_match_loop(self, p, lo, hi):
        got = interval_sum(p, 1, lo, hi)
        if hi >= lo - 1:
            assert got == sum((p(t) for t in range(lo, hi + 1)), Fraction(0))
        else:
            assert got == -sum((p(t) for t in range(hi + 1, lo)), Fraction(0))


class TestNestedSum:
    def test_base_case(self):
        assert nested_sum(Poly.const(1, 1), variable_bounds(2)) == parse_poly("k2 - k1 + 1", 2)

    def test_three_bounds_gives_alpha3(self):
        alpha2 = parse_poly("k2 - k1 + 1", 2)
        alpha3 = nested_sum(alpha2, variable_bounds(3))
        expected = parse_poly(
            "-3*k1 + k1^2 + 2*k1*k2 - k1^2*k2 - 2*k2^2 + k1*k2^2 + 3*k3 - 4*k1*k3 + k1^2*k3"
            " + 2*k2*k3 - k2^2*k3 + k3^2 - k1*k3^2 + k2*k3^2", 3) / 2
        assert alpha3 == expected

    def test_integer_bounds_123(self):
        # pairs 1 <= l1 <= 2 <= l2 <= 3 with l1 != l2: (1,2), (1,3), (2,3)
        assert nested_sum(Poly.const(2, 1), [1, 2, 3]).constant_term() == 3

    def test_bound_count_mismatch(self):
        with pytest.raises(ValueError):
            nested_sum(Poly.const(1, 1), variable_bounds(3))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_oracle_agreement(self, n):
        rng = random.Random(100 + n)
        for _ in range(3):
            p = random_poly(rng, n - 1, 3, 4)
            s = nested_sum(p, variable_bounds(n))
            for row in increasing_rows(n, -2, 6):
                assert s.evaluate(row) == brute_interleaved_sum(lambda ls: p.evaluate(ls), row), row

    def test_shifted_bounds(self):
        p = parse_poly("k1*k2", 2)
        bounds = [SumBound(1, -1), SumBound(2), SumBound(3, 2)]
        s = nested_sum(p, bounds)
        for row in increasing_rows(3, 0, 5):
            shifted = (row[0] - 1, row[1], row[2] + 2)
            assert s.evaluate(row) == brute_interleaved_sum(lambda ls: p.evaluate(ls), shifted)


class TestDegreeGrowth:
    @pytest.mark.parametrize("R", [1, 2, 3])
    def test_bound(self, R):
        rng = random.Random(R)
        for n in (3, 4):
            for _ in range(3):
                p = random_poly(rng, n - 1, R, 4)
                s = nested_sum(p, variable_bounds(n))
                for i in range(2, n):
                    assert s.degree(i) <= 2 * R + 2

    def test_witness_attains_bound(self):
        summand, var, R = DEGREE_WITNESS
        assert nested_sum(summand, variable_bounds(3)).degree(var) == 2 * R + 2


class TestMerge:
    def test_random_quadratic_n3(self):
        rng = random.Random(3)
        for _ in range(5):
            assert merge_rule_check(random_poly(rng, 2, 2, 3), 2)

    def test_constant_n4(self):
        for i in (2, 3):
            assert merge_rule_check(Poly.const(3, 1), i)

    def test_zero(self):
        assert merge_rule_check(Poly.zero(3), 2)

    def test_random_n4(self):
        rng = random.Random(4)
        for i in (2, 3):
            for _ in range(3):
                assert merge_rule_check(random_poly(rng, 3, 2, 3), i)

    def test_split_index_range(self):
        with pytest.raises(ValueError):
            merge_identity_sides(Poly.const(2, 1), 1)
