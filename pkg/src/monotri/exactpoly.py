"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent vectors to :class:`fractions.Fraction`
coefficients over a fixed number of positional variables.  Variables are
addressed by 1-based ids: id ``i`` is ``k_i`` and is printed as ``ki``.

Values are treated as immutable; every operation returns a new polynomial.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]

MINUS_INFINITY = -math.inf


@lru_cache(maxsize=None)
def binomial_row(e: int) -> Tuple[int, ...]:
    return tuple(math.comb(e, j) for j in range(e + 1))


def _check_var(nvars: int, var: int) -> int:
    if not 1 <= var <= nvars:
        raise ValueError(f"variable id {var} out of range 1..{nvars}")
    return var - 1


class Poly:
    """Polynomial in ``nvars`` variables over the rationals.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero
    coefficients.  Two polynomials compare equal exactly when their term maps
    do, so ``==`` is a polynomial identity test.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponents, Scalar]] = None):
        self.nvars = nvars
        clean: Dict[Exponents, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} does not have {nvars} entries")
                if c:
                    clean[tuple(exps)] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponents, Fraction]) -> "Poly":
        # terms must already be clean (no zeros, Fraction values)
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: Scalar) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, var: int) -> "Poly":
        idx = _check_var(nvars, var)
        exps = [0] * nvars
        exps[idx] = 1
        return cls._raw(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def rising_factorial(cls, nvars: int, var: Optional[int], offset: Scalar, length: int) -> "Poly":
        """``(x + offset)_length = prod_{i<length} (x + offset + i)``.

        ``var=None`` gives the constant rising factorial of ``offset``.
        """
        if length < 0:
            raise ValueError("rising factorial length must be nonnegative")
        base = cls.const(nvars, offset)
        if var is not None:
            base = base + cls.var(nvars, var)
        out = cls.const(nvars, 1)
        for i in range(length):
            out = out * (base + i)
        return out

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self, var: int) -> Union[int, float]:
        """Largest exponent of ``var``; ``MINUS_INFINITY`` for the zero polynomial."""
        idx = _check_var(self.nvars, var)
        if not self.terms:
            return MINUS_INFINITY
        return max(e[idx] for e in self.terms)

    def total_degree(self) -> Union[int, float]:
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def variables(self) -> Tuple[int, ...]:
        """Ids of variables that actually occur."""
        used = set()
        for e in self.terms:
            used.update(i + 1 for i, a in enumerate(e) if a)
        return tuple(sorted(used))

    # -- ring operations ------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "Poly":
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- evaluation -----------------------------------------------------
    def __call__(self, *point: Scalar) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        total = Fraction(0)
        for e, c in self.terms.items():
            m = c
            for x, a in zip(point, e):
                if a:
                    m *= x ** a
            total += m
        return total

    def substitute(self, values: Mapping[int, Scalar]) -> "Poly":
        """Partial evaluation.  Substituted variables stay in the space with degree 0."""
        idx = {_check_var(self.nvars, v): Fraction(x) for v, x in values.items()}
        out: Dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, x in idx.items():
                if e[i]:
                    c = c * x ** e[i]
                    e2[i] = 0
            key = tuple(e2)
            out[key] = out.get(key, 0) + c
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def substitute_affine(self, var: int, target: Optional[int], offset: Scalar) -> "Poly":
        """Replace ``var`` by ``target + offset`` (``target=None``: by the constant ``offset``)."""
        idx = _check_var(self.nvars, var)
        if target is None:
            return self.substitute({var: offset})
        tidx = _check_var(self.nvars, target)
        offset = Fraction(offset)
        out: Dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            a = e[idx]
            if not a:
                out[e] = out.get(e, 0) + c
                continue
            base = list(e)
            base[idx] = 0
            row = binomial_row(a)
            for j in range(a + 1):
                coeff = row[j] * offset ** (a - j)
                if not coeff:
                    continue
                exps = base.copy()
                exps[tidx] += j
                key = tuple(exps)
                out[key] = out.get(key, 0) + c * coeff
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    # -- shift, difference, swap ----------------------------------------
    def shift(self, var: int, offset: int = 1) -> "Poly":
        """``p`` with ``var`` replaced by ``var + offset`` (``E_var ** offset``)."""
        if not offset:
            return self
        return self.substitute_affine(var, var, offset)

    def shift_many(self, offsets: Sequence[int]) -> "Poly":
        out = self
        for i, o in enumerate(offsets):
            if o:
                out = out.shift(i + 1, o)
        return out

    def delta(self, var: int) -> "Poly":
        """Forward difference ``p(var + 1) - p``."""
        return self.shift(var, 1) - self

    def swap(self, i: int, j: int) -> "Poly":
        a, b = _check_var(self.nvars, i), _check_var(self.nvars, j)
        if a == b:
            raise ValueError("swap needs two distinct variables")
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[a], e2[b] = e2[b], e2[a]
            out[tuple(e2)] = c
        return Poly._raw(self.nvars, out)

    def permute(self, perm: Sequence[int]) -> "Poly":
        """Rename variable ``i`` to ``perm[i-1]`` (1-based images)."""
        if sorted(perm) != list(range(1, self.nvars + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{self.nvars}")
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * self.nvars
            for i, a in enumerate(e):
                e2[perm[i] - 1] = a
            out[tuple(e2)] = c
        return Poly._raw(self.nvars, out)

    # -- variable space changes -----------------------------------------
    def embed(self, nvars: int, positions: Sequence[int]) -> "Poly":
        """Move variable ``i`` to id ``positions[i-1]`` in a space of ``nvars`` variables."""
        if len(positions) != self.nvars:
            raise ValueError("need one target position per variable")
        idx = [_check_var(nvars, p) for p in positions]
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * nvars
            for i, a in zip(idx, e):
                e2[i] += a
            out[tuple(e2)] = c
        return Poly._raw(nvars, {e: c for e, c in out.items() if c})

    def restrict(self, nvars: int) -> "Poly":
        """Drop trailing variables, which must not occur."""
        out = {}
        for e, c in self.terms.items():
            if any(e[nvars:]):
                raise ValueError("cannot drop a variable that still occurs")
            out[e[:nvars]] = c
        return Poly._raw(nvars, out)

    # -- text form ------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def to_str(self, names: Optional[Sequence[str]] = None) -> str:
        """Canonical text: terms in descending lex order, ``k1`` most significant."""
        names = list(names) if names is not None else default_names(self.nvars)
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(e) if a)
            mag = abs(c)
            coeff = str(mag) if mag.denominator != 1 else str(mag.numerator)
            if mono:
                body = mono if mag == 1 else f"{coeff}*{mono}"
            else:
                body = coeff
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.to_str()!r})"

    @classmethod
    def parse(cls, text: str, nvars: int, names: Optional[Sequence[str]] = None) -> "Poly":
        return parse_poly(text, nvars, names)


def default_names(nvars: int) -> list:
    return [f"k{i}" for i in range(1, nvars + 1)]


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_RATIONAL = re.compile(r"^\d+(/\d+)?$")


def parse_poly(text: str, nvars: int, names: Optional[Sequence[str]] = None) -> Poly:
    """Parse the canonical text form (any term order, ``*`` between factors)."""
    names = list(names) if names is not None else default_names(nvars)
    lookup = {name: i for i, name in enumerate(names)}
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial")
    parts = _TERM_SPLIT.split(src)
    if parts[0] == "":
        parts = parts[1:]
    else:
        parts = ["+"] + parts
    acc: Dict[Exponents, Fraction] = {}
    for sign, body in zip(parts[0::2], parts[1::2]):
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = Fraction(1 if sign == "+" else -1)
        exps = [0] * nvars
        for factor in body.replace(" ", "").split("*"):
            if _RATIONAL.match(factor):
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in lookup:
                raise ValueError(f"unknown token {factor!r} in {text!r}")
            if power and not power.isdigit():
                raise ValueError(f"bad exponent in {factor!r}")
            exps[lookup[name]] += int(power) if power else 1
        key = tuple(exps)
        acc[key] = acc.get(key, 0) + coeff
    return Poly(nvars, acc)
