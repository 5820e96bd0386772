import itertools
from fractions import Fraction

from hypothesis import strategies as st

from monotri.exactpoly import Poly
from monotri.opcalc import ShiftOperator

coefficients = st.fractions(min_value=-9, max_value=9, max_denominator=5)


def polys(nvars, max_deg=3, max_terms=5):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(exps, coefficients, max_size=max_terms).map(lambda d: Poly(nvars, d))


def operators(nvars, lo=-2, hi=2, max_terms=3):
    offs = st.tuples(*[st.integers(lo, hi)] * nvars)
    return st.dictionaries(offs, coefficients, max_size=max_terms).map(
        lambda d: ShiftOperator(nvars, d))


def random_poly(rng, nvars, max_deg, nterms):
    return Poly(nvars, {tuple(rng.randint(0, max_deg) for _ in range(nvars)):
                        Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(nterms)})


def random_operator(rng, nvars, nterms, lo, hi):
    return ShiftOperator(nvars, {tuple(rng.randint(lo, hi) for _ in range(nvars)):
                                 Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                                 for _ in range(nterms)})


def brute_interleaved_sum(f, bounds):
    """sum of f(l) over k1 <= l1 <= k2 <= ... <= l_{n-1} <= kn with l_i != l_{i+1}."""
    ranges = [range(a, b + 1) for a, b in zip(bounds, bounds[1:])]
    total = Fraction(0)
    for ls in itertools.product(*ranges):
        if all(x != y for x, y in zip(ls, ls[1:])):
            total += f(ls)
    return total
