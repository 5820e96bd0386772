"""Command line entry point: ``monotri alpha|gamma|verify|sweep``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any, List, Optional, Sequence

from . import counting, oracle
from .counting import AlphaMethod
from .verify import SUITES, increasing_rows

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_SWEEP_ROWS = 20000


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    method: Optional[str]
    result: Any
    timing: Optional[float] = None
    checks: List[str] = field(default_factory=list)

    def to_json(self, with_timing: bool = True) -> str:
        data = asdict(self)
        if not with_timing:
            data.pop("timing")
        if not data["checks"]:
            data.pop("checks")
        return json.dumps(data, sort_keys=True)


def parse_row(text: str) -> tuple:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"bad row entry {tok!r} in {text!r}; expected integers like 1,2,3") from None
    return tuple(out)


def largest_prime_factor(m: int) -> Optional[int]:
    m = abs(m)
    if m < 2:
        return None
    best = None
    d = 2
    while d * d <= m:
        while m % d == 0:
            best = d
            m //= d
        d += 1 if d == 2 else 2
    return m if m > 1 else best


def cmd_alpha(args) -> OutputRecord:
    method = AlphaMethod(args.method)
    if args.row is not None and args.emit == "poly":
        raise UsageError("--emit poly takes --n, not --row")
    if args.row is not None:
        row = parse_row(args.row)
        if method is AlphaMethod.BRUTE_FORCE:
            try:
                oracle.check_row(row)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        value = counting.alpha_eval(row, method, force=args.force)
        return OutputRecord("alpha", {"row": list(row)}, method.value, value)
    if args.n is None:
        raise UsageError("give --row k1,...,kn or --n N")
    if method is AlphaMethod.BRUTE_FORCE:
        raise UsageError("brute force counts rows; it cannot emit a polynomial")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    poly = counting.alpha_poly(args.n, method)
    return OutputRecord("alpha", {"n": args.n}, method.value, poly.to_str())


def cmd_gamma(args) -> OutputRecord:
    r, n = args.r, args.n
    if not 1 <= r <= n:
        raise UsageError(f"need 1 <= r <= n, got r={r}, n={n}")
    poly = counting.gamma_poly(r, n)
    m = n - r + 1
    names = ["k"] if m == 1 else None
    if args.emit == "value" and args.at is None:
        raise UsageError("--emit value needs --at k1,...")
    if args.at is not None:
        point = parse_row(args.at)
        if len(point) != m:
            raise UsageError(f"gamma(r={r}, n={n}) takes {m} top-row entries, got {len(point)}")
        value = poly.evaluate(point)
        result = value.numerator if value.denominator == 1 else str(value)
        return OutputRecord("gamma", {"r": r, "n": n, "at": list(point)}, "recursion", result)
    return OutputRecord("gamma", {"r": r, "n": n}, "recursion", poly.to_str(names))


def cmd_verify(args) -> OutputRecord:
    checks = list(SUITES[args.suite](args.max_n))
    failed = next((c for c in checks if not c.ok), None)
    rec = OutputRecord("verify", {"suite": args.suite, "max_n": args.max_n}, None,
                       "pass" if failed is None else "fail",
                       checks=[c.line() for c in checks])
    if failed is not None:
        rec.inputs["counterexample"] = failed.line()
    return rec


def cmd_sweep(args) -> OutputRecord:
    n, lo, hi = args.n, args.lo, args.hi
    if n < 1 or hi < lo:
        raise UsageError("need n >= 1 and lo <= hi")
    nrows = math.comb(hi - lo + 1, n)
    if nrows > MAX_SWEEP_ROWS:
        raise UsageError(
            f"window {lo}..{hi} holds {nrows} rows of length {n} (limit {MAX_SWEEP_ROWS}); "
            "narrow the window or lower n")
    rows = []
    for row in increasing_rows(n, lo, hi):
        value = counting.alpha_eval(row)
        entry = {"row": list(row), "value": value}
        if args.factor:
            entry["largest_prime_factor"] = largest_prime_factor(value)
        rows.append(entry)
    return OutputRecord("sweep", {"n": n, "lo": lo, "hi": hi, "factor": args.factor},
                        AlphaMethod.OPERATOR_DIRECT.value, rows)


def render_text(rec: OutputRecord) -> str:
    if rec.command == "verify":
        lines = list(rec.checks)
        lines.append(f"suite {rec.inputs['suite']}: {rec.result.upper()}")
        if "counterexample" in rec.inputs:
            lines.append(f"first counterexample: {rec.inputs['counterexample']}")
        return "\n".join(lines)
    if rec.command == "sweep":
        out = []
        for e in rec.result:
            row = ",".join(map(str, e["row"]))
            line = f"{row}\t{e['value']}"
            if "largest_prime_factor" in e:
                line += f"\t{e['largest_prime_factor']}"
            out.append(line)
        return "\n".join(out)
    return str(rec.result)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monotri", description="Count monotone triangles with prescribed bottom row.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--no-timing", action="store_true",
                        help="omit the timing field from json output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", help="count for a row, or emit the polynomial for size n")
    p.add_argument("--row", help="bottom row k1,k2,...,kn")
    p.add_argument("--n", type=int, help="emit alpha(n) as a polynomial")
    p.add_argument("--method", default="direct", choices=[m.value for m in AlphaMethod])
    p.add_argument("--emit", choices=("poly", "value"), default=None)
    p.add_argument("--force", action="store_true", help="allow brute force beyond the size guard")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("gamma", help="monotone trapezoid polynomial gamma(r, n)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", choices=("poly", "value"), default="poly")
    p.add_argument("--at", help="evaluate at the top row k1,...")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="evaluate alpha on every increasing row in a window")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--factor", action="store_true", help="report the largest prime factor")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        rec = args.func(args)
    except (UsageError, oracle.EnumerationTooLarge) as exc:
        print(f"monotri: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rec.timing = round(time.perf_counter() - start, 6)
    if args.format == "json":
        print(rec.to_json(with_timing=not args.no_timing))
    else:
        print(render_text(rec))
    if rec.command == "verify" and rec.result != "pass":
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
