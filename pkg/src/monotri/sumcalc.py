"""Symbolic summation over intervals with affine bounds.

Sums follow the extended convention: ``sum_{x=a}^{b} f(x)`` is ``F(b) - F(a-1)``
for the antidifference ``F`` of ``f``, which is the ordinary sum for
``a <= b``, zero for ``b = a - 1`` and ``-(f(b+1) + ... + f(a-1))`` below that.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

from .exactpoly import Poly


@dataclass(frozen=True)
class SumBound:
    """Either ``k_var + offset`` or, with ``var=None``, the integer ``offset``."""

    var: Optional[int] = None
    offset: int = 0

    def __add__(self, k: int) -> "SumBound":
        return SumBound(self.var, self.offset + k)

    def __sub__(self, k: int) -> "SumBound":
        return SumBound(self.var, self.offset - k)

    def value(self, point: Sequence[int]) -> int:
        return self.offset + (point[self.var - 1] if self.var is not None else 0)

    def __str__(self) -> str:
        if self.var is None:
            return str(self.offset)
        if not self.offset:
            return f"k{self.var}"
        return f"k{self.var}{self.offset:+d}"


BoundLike = Union[SumBound, int]


def as_bound(b: BoundLike) -> SumBound:
    if isinstance(b, SumBound):
        return b
    if isinstance(b, int):
        return SumBound(None, b)
    raise TypeError(f"cannot use {b!r} as a summation bound")


def variable_bounds(n: int) -> List[SumBound]:
    """The bound row ``(k_1, ..., k_n)``."""
    return [SumBound(i) for i in range(1, n + 1)]


@lru_cache(maxsize=None)
def _falling_to_power_sum(j: int) -> Tuple[Fraction, ...]:
    # coefficients (in y) of C(y + 1, j + 1) = (y+1) y (y-1) ... (y-j+1) / (j+1)!
    coeffs = [Fraction(1)]
    for r in range(j + 1):
        root = 1 - r  # factor (y + 1 - r)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] += c
            nxt[d] += c * root
        coeffs = nxt
    scale = Fraction(1, math.factorial(j + 1))
    return tuple(c * scale for c in coeffs)


@lru_cache(maxsize=None)
def _stirling2(e: int, j: int) -> int:
    if e == j:
        return 1
    if j == 0 or j > e:
        return 0
    return j * _stirling2(e - 1, j) + _stirling2(e - 1, j - 1)


@lru_cache(maxsize=None)
def power_sum_coefficients(e: int) -> Tuple[Fraction, ...]:
    """Coefficients of ``q(y) = sum_{x=0}^{y} x^e``.

    ``x^e = sum_j S(e, j) j! C(x, j)`` and ``sum_{x=0}^{y} C(x, j) = C(y+1, j+1)``.
    """
    out = [Fraction(0)] * (e + 2)
    for j in range(e + 1):
        s = _stirling2(e, j)
        if not s:
            continue
        w = s * math.factorial(j)
        for d, c in enumerate(_falling_to_power_sum(j)):
            out[d] += w * c
    return tuple(out)


def unit_antidifference(p: Poly, var: int) -> Poly:
    """The polynomial ``q`` with ``q(y) = sum_{x=0}^{y} p(x)`` in the slot of ``var``."""
    idx = var - 1
    if not 0 <= idx < p.nvars:
        raise ValueError(f"variable id {var} out of range 1..{p.nvars}")
    out = {}
    for e, c in p.terms.items():
        rest = list(e)
        rest[idx] = 0
        for d, w in enumerate(power_sum_coefficients(e[idx])):
            if not w:
                continue
            rest[idx] = d
            key = tuple(rest)
            out[key] = out.get(key, 0) + c * w
    return Poly(p.nvars, out)


def substitute_bound(p: Poly, var: int, bound: BoundLike) -> Poly:
    b = as_bound(bound)
    return p.substitute_affine(var, b.var, b.offset)


def interval_sum(p: Poly, var: int, lo: BoundLike, hi: BoundLike) -> Poly:
    """``sum_{var=lo}^{hi} p`` with the extended convention; ``var`` disappears."""
    q = unit_antidifference(p, var)
    return substitute_bound(q, var, hi) - substitute_bound(q, var, as_bound(lo) - 1)


def _nested(a: Poly, bounds: Sequence[SumBound], lvars: Sequence[int]) -> Poly:
    # sums out lvars (len(bounds) - 1 of them); splits off the last summation variable
    if not lvars:
        return a
    if len(lvars) == 1:
        return interval_sum(a, lvars[0], bounds[0], bounds[1])
    last = lvars[-1]
    head = _nested(interval_sum(a, last, bounds[-2] + 1, bounds[-1]),
                   bounds[:-1], lvars[:-1])
    tail = _nested(substitute_bound(a, last, bounds[-2]),
                   list(bounds[:-2]) + [bounds[-2] - 1], lvars[:-1])
    return head + tail


def _bounds_space(bounds: Sequence[SumBound]) -> int:
    return max((b.var for b in bounds if b.var is not None), default=0)


def nested_sum(p: Poly, bounds: Sequence[BoundLike], nvars: Optional[int] = None) -> Poly:
    """Interleaved sum of ``p(l_1, ..., l_{n-1})`` over the row ``bounds = (k_1, ..., k_n)``.

    For strictly increasing integer bounds this is the sum over
    ``k_1 <= l_1 <= k_2 <= ... <= l_{n-1} <= k_n`` with ``l_i != l_{i+1}``;
    elsewhere it is the inductive extension that splits off ``l_{n-1}``.
    The result is a polynomial in ``nvars`` variables (default: the largest
    variable id referenced by a bound).
    """
    bounds = [as_bound(b) for b in bounds]
    if len(bounds) != p.nvars + 1:
        raise ValueError(
            f"{len(bounds)} bounds need a summand in {len(bounds) - 1} variables, got {p.nvars}")
    needed = _bounds_space(bounds)
    if nvars is None:
        nvars = needed
    elif nvars < needed:
        raise ValueError(f"bounds reference k{needed} but only {nvars} variables requested")
    width = nvars + p.nvars
    lvars = list(range(nvars + 1, width + 1))
    a = p.embed(width, lvars)
    return _nested(a, bounds, lvars).restrict(nvars)


def merge_identity_sides(p: Poly, i: int, bounds: Optional[Sequence[BoundLike]] = None):
    """Both sides of the merging rule at split index ``i`` (``2 <= i <= n-1``).

    Left: the nested sum over ``bounds``.  Right: ``I^{k_i}_{k', k''}`` applied to
    the nested sum over ``(k_1..k_{i-1}, k')`` of the nested sum over
    ``(k'', k_{i+1}..k_n)``, where ``I^y_{x,z} f = f(y-1,y) + f(y,y+1) - f(y-1,y+1)``.
    """
    n = p.nvars + 1
    bounds = [as_bound(b) for b in (bounds if bounds is not None else variable_bounds(n))]
    if len(bounds) != n:
        raise ValueError(f"expected {n} bounds, got {len(bounds)}")
    if not 2 <= i <= n - 1:
        raise ValueError(f"split index {i} must lie in 2..{n - 1}")
    nout = max(_bounds_space(bounds), 0)
    kp, kpp = nout + 1, nout + 2
    width = nout + 2 + p.nvars
    lvars = list(range(nout + 3, width + 1))
    a = p.embed(width, lvars)

    left = _nested(a, bounds, lvars)
    inner = _nested(a, [SumBound(kpp)] + bounds[i:], lvars[i - 1:])
    split = _nested(inner, bounds[:i - 1] + [SumBound(kp)], lvars[:i - 1])
    y = bounds[i - 1]
    right = (substitute_bound(substitute_bound(split, kp, y - 1), kpp, y)
             + substitute_bound(substitute_bound(split, kp, y), kpp, y + 1)
             - substitute_bound(substitute_bound(split, kp, y - 1), kpp, y + 1))
    return left.restrict(nout), right.restrict(nout)


def merge_rule_check(p: Poly, i: int, bounds: Optional[Sequence[BoundLike]] = None) -> bool:
    left, right = merge_identity_sides(p, i, bounds)
    return left == right
