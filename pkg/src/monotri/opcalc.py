"""Laurent polynomials in commuting shift operators acting on :class:`Poly`.

An operator is stored fully expanded: a map from per-variable integer shift
offsets to rational coefficients, so ``{(1, -1): 2}`` is ``2 E_1 E_2^-1``.
Composition is multiplication of Laurent polynomials.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple

from .exactpoly import Poly, Scalar

Offsets = Tuple[int, ...]


class ShiftOperator:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Offsets, Scalar]] = None):
        self.nvars = nvars
        clean: Dict[Offsets, Fraction] = {}
        for offs, c in (terms or {}).items():
            if len(offs) != nvars:
                raise ValueError(f"offset vector {offs} does not have {nvars} entries")
            offs = tuple(offs)
            clean[offs] = clean.get(offs, 0) + Fraction(c)
        self.terms = {o: c for o, c in clean.items() if c}

    @classmethod
    def identity(cls, nvars: int) -> "ShiftOperator":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def shift(cls, nvars: int, var: int, power: int = 1) -> "ShiftOperator":
        """``E_var ** power``; negative powers give the inverse shift."""
        if not 1 <= var <= nvars:
            raise ValueError(f"variable id {var} out of range 1..{nvars}")
        offs = [0] * nvars
        offs[var - 1] = power
        return cls(nvars, {tuple(offs): 1})

    @classmethod
    def delta(cls, nvars: int, var: int) -> "ShiftOperator":
        return cls.shift(nvars, var) - cls.identity(nvars)

    @classmethod
    def parse(cls, text: str, nvars: int) -> "ShiftOperator":
        return parse_operator(text, nvars)

    def _coerce(self, other) -> "ShiftOperator":
        if isinstance(other, ShiftOperator):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return ShiftOperator(self.nvars, {(0,) * self.nvars: other})
        return NotImplemented

    def __add__(self, other) -> "ShiftOperator":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for o, c in other.terms.items():
            out[o] = out.get(o, 0) + c
        return ShiftOperator(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "ShiftOperator":
        return ShiftOperator(self.nvars, {o: -c for o, c in self.terms.items()})

    def __sub__(self, other) -> "ShiftOperator":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "ShiftOperator":
        return (-self) + other

    def __mul__(self, other) -> "ShiftOperator":
        """Composition (offsets add, coefficients multiply)."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Offsets, Fraction] = {}
        for o1, c1 in self.terms.items():
            for o2, c2 in other.terms.items():
                o = tuple(a + b for a, b in zip(o1, o2))
                out[o] = out.get(o, 0) + c1 * c2
        return ShiftOperator(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ShiftOperator":
        if k < 0:
            raise ValueError("only nonnegative powers of a general operator are defined")
        out = ShiftOperator.identity(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self) -> str:
        return f"ShiftOperator({self.nvars}, {self.to_str()!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def at_ones(self) -> Fraction:
        """Value of the Laurent polynomial at ``E_1 = ... = E_n = 1``."""
        return sum(self.terms.values(), Fraction(0))

    def permute(self, perm: Sequence[int]) -> "ShiftOperator":
        """``R(E_1..E_n) -> R`` with ``E_i`` renamed to ``E_{perm[i-1]}``."""
        out = {}
        for o, c in self.terms.items():
            o2 = [0] * self.nvars
            for i, a in enumerate(o):
                o2[perm[i] - 1] = a
            out[tuple(o2)] = c
        return ShiftOperator(self.nvars, out)

    def swap(self, i: int, j: int) -> "ShiftOperator":
        perm = list(range(1, self.nvars + 1))
        perm[i - 1], perm[j - 1] = j, i
        return self.permute(perm)

    def apply(self, p: Poly) -> Poly:
        if p.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {p.nvars}")
        out = Poly.zero(p.nvars)
        # shifts sharing a prefix of offsets reuse the partially shifted polynomial
        cache: Dict[Offsets, Poly] = {(): p}

        def shifted(offs: Offsets) -> Poly:
            if offs in cache:
                return cache[offs]
            prev = shifted(offs[:-1])
            res = prev.shift(len(offs), offs[-1]) if offs[-1] else prev
            cache[offs] = res
            return res

        for o, c in sorted(self.terms.items()):
            out = out + shifted(o).scale(c)
        return out

    __call__ = apply

    def apply_at(self, f: Callable[[Tuple[int, ...]], Scalar], point: Sequence[int]) -> Fraction:
        """``(O f)(point)`` for a function ``f`` on integer vectors."""
        total = Fraction(0)
        for o, c in self.terms.items():
            total += c * f(tuple(x + a for x, a in zip(point, o)))
        return total

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for o, c in sorted(self.terms.items(), reverse=True):
            factors = [f"E{i + 1}" if a == 1 else f"E{i + 1}^{a}" for i, a in enumerate(o) if a]
            mag = abs(c)
            if factors:
                body = "*".join(([str(mag)] if mag != 1 else []) + factors)
            else:
                body = str(mag)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    __str__ = to_str


_OP_TERM_SPLIT = re.compile(r"(?<!\^)\s*([+-])\s*")
_OP_FACTOR = re.compile(r"^([ED])(\d+)(?:\^(-?\d+))?$")


def parse_operator(text: str, nvars: int) -> ShiftOperator:
    """Parse ``"3/2 * E1^2 * E3^-1 + D2"``; ``Di`` stands for ``Ei - 1``."""
    parts = _OP_TERM_SPLIT.split(text.strip())
    if parts[0] == "":
        parts = parts[1:]
    else:
        parts = ["+"] + parts
    total = ShiftOperator(nvars)
    for sign, body in zip(parts[0::2], parts[1::2]):
        term = ShiftOperator.identity(nvars)
        if sign == "-":
            term = -term
        for factor in body.replace(" ", "").split("*"):
            if re.fullmatch(r"\d+(/\d+)?", factor):
                term = term * Fraction(factor)
                continue
            m = _OP_FACTOR.match(factor)
            if not m:
                raise ValueError(f"bad operator factor {factor!r} in {text!r}")
            kind, var, power = m.group(1), int(m.group(2)), int(m.group(3) or 1)
            if kind == "E":
                term = term * ShiftOperator.shift(nvars, var, power)
            else:
                if power < 0:
                    raise ValueError(f"difference operator {factor!r} has no inverse")
                term = term * ShiftOperator.delta(nvars, var) ** power
        total = total + term
    return total


@dataclass(frozen=True)
class DeltaFactoredOp:
    """The operator ``id + Delta_pivot * body``, invertible on polynomials.

    The inverse is the series ``sum_l (-1)^l Delta_pivot^l body^l``, which
    terminates on any polynomial because ``Delta_pivot`` lowers the degree in
    the pivot variable and shift operators never raise it.
    """

    pivot: int
    body: ShiftOperator

    @property
    def nvars(self) -> int:
        return self.body.nvars

    def operator(self) -> ShiftOperator:
        n = self.nvars
        return ShiftOperator.identity(n) + ShiftOperator.delta(n, self.pivot) * self.body

    def apply(self, p: Poly) -> Poly:
        return self.operator().apply(p)

    def inverse_apply(self, g: Poly) -> Poly:
        step = -(ShiftOperator.delta(self.nvars, self.pivot) * self.body)
        out = g
        term = g
        for _ in range(max(g.degree(self.pivot), 0) if g else 0):
            term = step.apply(term)
            if not term:
                break
            out = out + term
        return out


def neumann_inverse_apply(op: DeltaFactoredOp, g: Poly) -> Poly:
    return op.inverse_apply(g)


def v_operator(nvars: int, i: int, j: int) -> ShiftOperator:
    """``V_{i,j} = id + E_i^-1 Delta_i Delta_j``."""
    if i == j:
        raise ValueError("V needs two distinct variables")
    return (ShiftOperator.identity(nvars)
            + ShiftOperator.shift(nvars, i, -1)
            * ShiftOperator.delta(nvars, i) * ShiftOperator.delta(nvars, j))


def v_apply(p: Poly, i: int, j: int) -> Poly:
    return v_operator(p.nvars, i, j).apply(p)


def e_delta_factor(nvars: int, shifted: int, differenced: int) -> ShiftOperator:
    """``id + E_shifted Delta_differenced``, the building block of the product formulas."""
    return (ShiftOperator.identity(nvars)
            + ShiftOperator.shift(nvars, shifted) * ShiftOperator.delta(nvars, differenced))


def t_prime_apply(p: Poly, i: int) -> Poly:
    """``(id + S_{i,i+1})(id + E_{i+1} Delta_i) p``."""
    if not 1 <= i < p.nvars:
        raise ValueError(f"adjacent pair ({i}, {i + 1}) out of range for {p.nvars} variables")
    q = e_delta_factor(p.nvars, i + 1, i).apply(p)
    return q + q.swap(i, i + 1)


def antisymmetry_check(p: Poly, i: int) -> bool:
    if not 1 <= i < p.nvars:
        raise ValueError(f"adjacent pair ({i}, {i + 1}) out of range for {p.nvars} variables")
    return p.swap(i, i + 1) == -p
