"""Named verification suites run by ``monotri verify``.

Each suite yields :class:`Check` records; a failing check carries the first
counterexample it met.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable, Dict, Iterator, List, Tuple

from . import counting, oracle
from .counting import AlphaMethod
from .exactpoly import Poly, parse_poly
from .opcalc import DeltaFactoredOp, ShiftOperator
from .sumcalc import merge_identity_sides, nested_sum, variable_bounds

ORACLE_WINDOW = (-2, 6)

# Summand l1^2 * l2^2 (degree R = 2 in each variable); its nested sum over
# (k1, k2, k3) has degree 2R + 2 = 6 in k2.
DEGREE_WITNESS = (Poly(2, {(2, 2): 1}), 2, 2)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


def load_golden() -> List[Tuple[str, int, int, Poly]]:
    """Golden polynomials as ``(object, n, r, poly)``; ``r`` is 0 for alpha."""
    text = resources.files("monotri").joinpath("data/golden.txt").read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    out = []
    for header, body in zip(lines[0::2], lines[1::2]):
        fields = header.lstrip("#").split()
        obj = fields[0]
        meta = dict(f.split("=") for f in fields[1:])
        n, r = int(meta["n"]), int(meta.get("r", 0))
        if obj == "alpha":
            poly = parse_poly(body, n)
        else:
            nv = n - r + 1
            poly = parse_poly(body, nv, ["k"] if nv == 1 else None)
        out.append((obj, n, r, poly))
    return out


def increasing_rows(n: int, lo: int, hi: int) -> Iterator[Tuple[int, ...]]:
    return itertools.combinations(range(lo, hi + 1), n)


def suite_golden(max_n: int) -> Iterator[Check]:
    for obj, n, r, expected in load_golden():
        if obj == "alpha":
            if n > max_n:
                continue
            got = counting.alpha_poly(n, AlphaMethod.RECURSION)
            name = f"alpha(n={n}) via recursion matches printed polynomial"
        else:
            got = counting.gamma_poly(r, n)
            name = f"gamma(r={r}, n={n}) matches printed polynomial"
        yield Check(name, got == expected,
                    "" if got == expected else f"got {got}, expected {expected}")


def suite_oracle(max_n: int) -> Iterator[Check]:
    lo, hi = ORACLE_WINDOW
    for n in range(1, max_n + 1):
        bad = None
        for row in increasing_rows(n, lo, hi):
            a = counting.alpha_eval(row)
            b = oracle.count_monotone_triangles(row)
            if a != b:
                bad = f"row {row}: operator {a}, enumeration {b}"
                break
        yield Check(f"alpha operator formula = enumeration, n={n}, window {ORACLE_WINDOW}",
                    bad is None, bad or "")
        bad = None
        for row in increasing_rows(n, lo, hi):
            a = counting.beta_count(row)
            b = oracle.count_strict_se_triangles(row)
            if a != b:
                bad = f"row {row}: product {a}, enumeration {b}"
                break
        yield Check(f"tableaux product = strict-SE enumeration, n={n}", bad is None, bad or "")
    for n in range(1, min(max_n, 4) + 1):
        for r in range(1, n + 1):
            g = counting.gamma_poly(r, n)
            counts = oracle.trapezoid_top_counts(n, r)
            bad = None
            for top in increasing_rows(n - r + 1, 1, n):
                if g.evaluate(top) != counts[top]:
                    bad = f"top {top}: polynomial {g.evaluate(top)}, enumeration {counts[top]}"
                    break
            yield Check(f"gamma(r={r}, n={n}) = trapezoid enumeration", bad is None, bad or "")


def random_poly(rng: random.Random, nvars: int, max_deg: int, nterms: int) -> Poly:
    terms = {}
    for _ in range(nterms):
        exps = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        terms[exps] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Poly(nvars, terms)


def random_operator(rng: random.Random, nvars: int, nterms: int, lo: int = -2, hi: int = 2) -> ShiftOperator:
    terms = {}
    for _ in range(nterms):
        offs = tuple(rng.randint(lo, hi) for _ in range(nvars))
        terms[offs] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return ShiftOperator(nvars, terms)


def symmetrize(op: ShiftOperator) -> ShiftOperator:
    total = ShiftOperator(op.nvars)
    for perm in itertools.permutations(range(1, op.nvars + 1)):
        total = total + op.permute(perm)
    return total


def neumann_round_trips(count: int, seed: int = 2024) -> Iterator[Tuple[DeltaFactoredOp, Poly, bool]]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 3)
        op = DeltaFactoredOp(rng.randint(1, n), random_operator(rng, n, rng.randint(1, 3)))
        g = random_poly(rng, n, 3, rng.randint(0, 4))
        f = op.inverse_apply(g)
        yield op, g, op.apply(f) == g and f.degree(op.pivot) == g.degree(op.pivot)


def scalar_action_trials(count: int, max_n: int, seed: int = 7) -> Iterator[Tuple[ShiftOperator, bool]]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, max_n)
        sym = symmetrize(random_operator(rng, n, rng.randint(1, 2), 0, 2))
        base = counting.ssyt_product_poly(n)
        yield sym, sym.apply(base) == base.scale(sym.at_ones())


def suite_operators(max_n: int) -> Iterator[Check]:
    for n in range(2, max_n + 1):
        ok = counting.t_prime_vanishing_check(n)
        yield Check(f"T' alpha(n={n}) = 0 for every adjacent pair", ok)
    for n in range(1, max_n + 1):
        polys = {m: counting.alpha_poly(n, m) for m in counting.POLY_METHODS}
        ok = len(set(polys.values())) == 1
        yield Check(f"four alpha methods agree, n={n}", ok,
                    "" if ok else "; ".join(f"{m.value}: {p}" for m, p in polys.items()))
        anti = counting.antisymmetrized_alpha(n)
        ok = anti == counting.ssyt_product_poly(n)
        yield Check(f"prod (id + E_q D_p) alpha(n={n}) = tableaux product", ok,
                    "" if ok else str(anti))
    bad = next((f"op {op.operator()} on {g}" for op, g, ok in neumann_round_trips(200) if not ok), None)
    yield Check("Neumann inverse round trip, 200 random cases", bad is None, bad or "")
    bad = next((f"P = {op}" for op, ok in scalar_action_trials(50, min(max_n, 4)) if not ok), None)
    yield Check("symmetric shift polynomial acts on tableaux product as P(1..1), 50 cases",
                bad is None, bad or "")


def suite_degrees(max_n: int) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        a = counting.alpha_poly(n)
        degs = [a.degree(i) for i in range(1, n + 1)]
        yield Check(f"deg alpha(n={n}) <= {n - 1} in every variable", max(degs) <= n - 1,
                    f"degrees {degs}")
    for n in range(1, min(max_n, 5) + 1):
        for r in range(1, n + 1):
            g = counting.gamma_poly(r, n)
            degs = [g.degree(i) for i in range(1, n - r + 2)]
            yield Check(f"deg gamma(r={r}, n={n}) <= {2 * r - 2} in every variable",
                        max(degs) <= 2 * r - 2, f"degrees {degs}")
    summand, var, R = DEGREE_WITNESS
    d = nested_sum(summand, variable_bounds(summand.nvars + 1)).degree(var)
    yield Check(f"nested sum of {summand} reaches degree 2R+2 = {2 * R + 2} in k{var}",
                d == 2 * R + 2, f"degree {d}")


def suite_refined(max_n: int) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        g = counting.gamma_poly(n, n) if n <= 6 else None
        for k in range(1, n + 1):
            f = counting.refined_asm(n, k)
            e = oracle.refined_bottom_count(n, k)
            values = [f, e] + ([g.evaluate((k,))] if g is not None else [])
            ok = all(v == f for v in values)
            yield Check(f"refined ASM n={n}, k={k}: formula = enumeration"
                        + (" = gamma" if g is not None else ""), ok, f"values {values}")
        total = sum(counting.refined_asm(n, k) for k in range(1, n + 1))
        yield Check(f"sum_k refined ASM(n={n}) = ASM count", total == counting.asm_count(n),
                    f"{total} vs {counting.asm_count(n)}")
    for n in range(1, min(max_n, 4) + 1):
        row = tuple(range(1, 2 * n, 2))
        a, v = counting.alpha_eval(row), counting.vsasm_count(n)
        yield Check(f"alpha{row} = VSASM count", a == v, f"{a} vs {v}")


def suite_merge(max_n: int, cases: int = 4, seed: int = 11) -> Iterator[Check]:
    rng = random.Random(seed)
    for n in range(3, max(3, min(max_n, 4)) + 1):
        for i in range(2, n):
            for _ in range(cases):
                p = random_poly(rng, n - 1, 2, rng.randint(1, 3))
                left, right = merge_identity_sides(p, i)
                yield Check(f"merge rule n={n}, i={i}, summand {p}", left == right,
                            "" if left == right else f"{left} != {right}")


SUITES: Dict[str, Callable[[int], Iterator[Check]]] = {
    "golden": suite_golden,
    "oracle": suite_oracle,
    "operators": suite_operators,
    "degrees": suite_degrees,
    "refined": suite_refined,
    "merge": suite_merge,
}
