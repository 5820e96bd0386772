"""Counting formulas for monotone triangles, ASMs and monotone trapezoids.

``alpha(n; k_1..k_n)`` counts monotone triangles with bottom row ``k``.  It is
available as a polynomial through four independent routes:

* ``recursion``: iterate the interleaved nested sum starting from ``alpha(1) = 1``;
* ``direct``: ``prod_{p<q} (id + E_p Delta_q)`` applied to ``prod_{i<j} (k_j - k_i)/(j - i)``;
* ``inverse``: ``prod_{p<q} (id + E_q Delta_p)^-1`` applied to the same product,
  each inverse expanded as a terminating geometric series;
* ``variant``: ``prod_{p<q} (id + E_q^-1 Delta_p Delta_q)`` applied to
  ``prod_{i<j} (k_j - k_i + j - i)/(j - i)``.
"""
from __future__ import annotations

import enum
import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from . import oracle
from .exactpoly import Poly
from .opcalc import DeltaFactoredOp, ShiftOperator, e_delta_factor, t_prime_apply
from .sumcalc import SumBound, nested_sum, variable_bounds


class AlphaMethod(str, enum.Enum):
    RECURSION = "recursion"
    OPERATOR_DIRECT = "direct"
    OPERATOR_INVERSE = "inverse"
    OPERATOR_VARIANT = "variant"
    BRUTE_FORCE = "brute"


POLY_METHODS = (AlphaMethod.RECURSION, AlphaMethod.OPERATOR_DIRECT,
                AlphaMethod.OPERATOR_INVERSE, AlphaMethod.OPERATOR_VARIANT)


class InconsistentResult(ArithmeticError):
    """An exact formula that must produce an integer did not."""


def _as_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise InconsistentResult(f"{what} evaluated to non-integer {x}")
    return x.numerator


def _pairs(n: int):
    return list(itertools.combinations(range(1, n + 1), 2))


def _hook_denominator(n: int) -> int:
    return math.prod(j - i for i, j in _pairs(n))


@lru_cache(maxsize=None)
def ssyt_product_poly(n: int) -> Poly:
    """``prod_{1<=i<j<=n} (k_j - k_i) / (j - i)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = Poly.const(n, 1)
    for i, j in _pairs(n):
        out = out * (Poly.var(n, j) - Poly.var(n, i))
    return out / _hook_denominator(n)


@lru_cache(maxsize=None)
def shifted_ssyt_product_poly(n: int) -> Poly:
    """``prod_{i<j} (k_j - k_i + j - i) / (j - i)``."""
    out = Poly.const(n, 1)
    for i, j in _pairs(n):
        out = out * (Poly.var(n, j) - Poly.var(n, i) + (j - i))
    return out / _hook_denominator(n)


def ssyt_product_value(row: Sequence[int]) -> Fraction:
    n = len(row)
    num = math.prod(row[j - 1] - row[i - 1] for i, j in _pairs(n))
    return Fraction(num, _hook_denominator(n))


def direct_factor(n: int, p: int, q: int) -> ShiftOperator:
    """``id + E_p Delta_q``."""
    return e_delta_factor(n, p, q)


def variant_factor(n: int, p: int, q: int) -> ShiftOperator:
    """``id + E_q^-1 Delta_p Delta_q``."""
    return (ShiftOperator.identity(n)
            + ShiftOperator.shift(n, q, -1)
            * ShiftOperator.delta(n, p) * ShiftOperator.delta(n, q))


def antisymmetrizer_factor(n: int, p: int, q: int) -> DeltaFactoredOp:
    """``id + E_q Delta_p`` as an invertible operator with pivot ``p``."""
    return DeltaFactoredOp(p, ShiftOperator.shift(n, q))


def apply_factors(p: Poly, factors: Iterable[ShiftOperator]) -> Poly:
    for f in factors:
        p = f.apply(p)
    return p


def alpha_direct(n: int, pairs: Optional[Sequence[Tuple[int, int]]] = None) -> Poly:
    """Product formula with the factors applied in the order ``pairs``."""
    pairs = _pairs(n) if pairs is None else pairs
    return apply_factors(ssyt_product_poly(n), (direct_factor(n, p, q) for p, q in pairs))


def alpha_inverse(n: int) -> Poly:
    out = ssyt_product_poly(n)
    for p, q in _pairs(n):
        out = antisymmetrizer_factor(n, p, q).inverse_apply(out)
    return out


def alpha_variant(n: int) -> Poly:
    return apply_factors(shifted_ssyt_product_poly(n),
                         (variant_factor(n, p, q) for p, q in _pairs(n)))


def alpha_recursion(n: int) -> Poly:
    out = Poly.const(1, 1)
    for m in range(2, n + 1):
        out = nested_sum(out, variable_bounds(m))
    return out


@lru_cache(maxsize=None)
def alpha_poly(n: int, method: AlphaMethod = AlphaMethod.OPERATOR_DIRECT) -> Poly:
    if n < 1:
        raise ValueError("n must be at least 1")
    method = AlphaMethod(method)
    if method is AlphaMethod.RECURSION:
        return alpha_recursion(n)
    if method is AlphaMethod.OPERATOR_DIRECT:
        return alpha_direct(n)
    if method is AlphaMethod.OPERATOR_INVERSE:
        return alpha_inverse(n)
    if method is AlphaMethod.OPERATOR_VARIANT:
        return alpha_variant(n)
    raise ValueError("brute force enumeration yields numbers, not a polynomial")


_FACTORS = {
    AlphaMethod.OPERATOR_DIRECT: direct_factor,
    AlphaMethod.OPERATOR_VARIANT: variant_factor,
}


@lru_cache(maxsize=None)
def _expanded_terms(n: int, method: AlphaMethod) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    make = _FACTORS[AlphaMethod(method)]
    cur = {(0,) * n: 1}
    for p, q in _pairs(n):
        factor = [(o, int(c)) for o, c in make(n, p, q).terms.items()]
        nxt: dict = {}
        for o, c in cur.items():
            for fo, fc in factor:
                key = tuple([a + b for a, b in zip(o, fo)])
                nxt[key] = nxt.get(key, 0) + c * fc
        cur = {o: c for o, c in nxt.items() if c}
    return tuple(cur.items())


def expanded_operator(n: int, method: AlphaMethod = AlphaMethod.OPERATOR_DIRECT) -> ShiftOperator:
    """The whole factor product of the direct or variant formula, expanded."""
    return ShiftOperator(n, dict(_expanded_terms(n, method)))


def _pointwise(n: int, method: AlphaMethod, row: Tuple[int, ...]) -> Fraction:
    shift = 0 if method is AlphaMethod.OPERATOR_DIRECT else 1
    pairs = [(i - 1, j - 1, (j - i) * shift) for i, j in _pairs(n)]
    total = 0
    for offs, c in _expanded_terms(n, method):
        x = [a + b for a, b in zip(row, offs)]
        prod = c
        for i, j, d in pairs:
            prod *= x[j] - x[i] + d
            if not prod:
                break
        total += prod
    return Fraction(total, _hook_denominator(n))


def alpha_eval(row: Sequence[int], method: AlphaMethod = AlphaMethod.OPERATOR_DIRECT,
               force: bool = False) -> int:
    """Number of monotone triangles with bottom row ``row``.

    For rows that are not strictly increasing the polynomial methods return
    the value of the (extended) polynomial.  The direct and variant methods
    apply the expanded operator pointwise, ``sum_t c_t f(row + o_t)``, which
    never materialises the polynomial.
    """
    row = tuple(int(k) for k in row)
    if not row:
        raise ValueError("bottom row must be nonempty")
    method = AlphaMethod(method)
    n = len(row)
    if method is AlphaMethod.BRUTE_FORCE:
        return oracle.count_monotone_triangles(row, force=force)
    if method in _FACTORS:
        value = _pointwise(n, method, row)
    else:
        value = alpha_poly(n, method).evaluate(row)
    return _as_integer(value, f"alpha{row} via {method.value}")


def asm_count(n: int) -> int:
    """``prod_{j=1}^{n} (3j-2)! / (n+j-1)!``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    value = Fraction(1)
    for j in range(1, n + 1):
        value *= Fraction(math.factorial(3 * j - 2), math.factorial(n + j - 1))
    return _as_integer(value, f"ASM product for n={n}")


def rising(x: int, length: int) -> int:
    return math.prod(x + i for i in range(length))


def refined_asm(n: int, k: int) -> int:
    """ASMs of size n whose top-row 1 is in column k."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= k <= n:
        raise ValueError(f"column k={k} outside 1..{n}")
    value = Fraction(rising(k, n - 1) * rising(1 + n - k, n - 1), math.factorial(n - 1))
    for j in range(1, n):
        value *= Fraction(math.factorial(3 * j - 2), math.factorial(n + j - 1))
    return _as_integer(value, f"refined ASM formula for n={n}, k={k}")


def refined_asm_poly(n: int) -> Poly:
    """The refined ASM formula read as a polynomial in ``k``."""
    const = Fraction(1, math.factorial(n - 1))
    for j in range(1, n):
        const *= Fraction(math.factorial(3 * j - 2), math.factorial(n + j - 1))
    k = Poly.var(1, 1)
    return (_rising_poly(k, n - 1) * _rising_poly(1 + n - k, n - 1)).scale(const)


def _rising_poly(base: Poly, length: int) -> Poly:
    out = Poly.const(base.nvars, 1)
    for i in range(length):
        out = out * (base + i)
    return out


def vsasm_count(n: int) -> int:
    """Vertically symmetric ASMs of size 2n+1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    value = Fraction(math.factorial(n), math.factorial(2 * n) * 2 ** n)
    for j in range(1, n + 1):
        value *= Fraction(math.factorial(6 * j - 2), math.factorial(2 * n + 2 * j - 1))
    return _as_integer(value, f"VSASM product for n={n}")


def beta_count(row: Sequence[int]) -> int:
    """Monotone triangles with bottom row ``row`` strictly increasing along southeast diagonals."""
    row = oracle.check_row(row)
    return _as_integer(ssyt_product_value(row), f"tableaux product at {row}")


def gamma_bounds(r: int, n: int):
    m = n - r + 1
    return [SumBound(None, 1)] + variable_bounds(m) + [SumBound(None, n)]


@lru_cache(maxsize=None)
def gamma_poly(r: int, n: int) -> Poly:
    """Monotone (r, n) trapezoids with bottom row ``(1..n)`` as a polynomial in the top row."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if r == 1:
        return Poly.const(n, 1)
    prev = gamma_poly(r - 1, n)
    m = n - r + 1
    return nested_sum(prev, gamma_bounds(r, n), nvars=m)


def t_prime_vanishing_check(n: int, method: AlphaMethod = AlphaMethod.OPERATOR_DIRECT) -> bool:
    if n < 2:
        raise ValueError("n must be at least 2")
    a = alpha_poly(n, method)
    return all(t_prime_apply(a, i).is_zero() for i in range(1, n))


def antisymmetrized_alpha(n: int) -> Poly:
    """``prod_{p<q} (id + E_q Delta_p)`` applied to ``alpha(n)``."""
    return apply_factors(alpha_poly(n), (antisymmetrizer_factor(n, p, q).operator()
                                         for p, q in _pairs(n)))
