"""Command-line front end; every command prints one JSON document to stdout.

    corank betti --inline "< a, b | a b a^-1 b^-1 >"
    corank expr "Z^2 * Z * C(2) * C(2)"
    corank realize 2 3 5 --verify
    corank oracle corpus/z2.txt --primes 2,3,5
    corank check presentation.txt

Exit status: 0 on success, 1 for a rejected request or failed verification,
2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .abelian import abelianize
from .calculus import (
    ExprParseError,
    UnsupportedExpression,
    abelianization,
    format_expr,
    invariants,
    is_torsion_free,
    isotropy_bounds,
    parse_expr,
    to_presentation,
)
from .oracle import DEFAULT_BUDGET, BudgetExceeded, agreement_primes, hom_table, is_prime
from .presentation import ParseError, Presentation, format_presentation, parse
from .realize import TripleRequest, realize, violation

EXIT_OK, EXIT_REJECTED, EXIT_BAD_INPUT = 0, 1, 2


class InputError(Exception):
    def __init__(self, payload: dict[str, Any]):
        super().__init__(payload.get("message", ""))
        self.payload = payload


# -- report builders -------------------------------------------------------------


def _read_input(args) -> str:
    if args.inline is not None:
        if args.path is not None:
            raise InputError({"error": "usage", "message": "give a path or --inline, not both"})
        return args.inline
    if args.path is None:
        raise InputError({"error": "usage", "message": "no input: give a path, '-' or --inline"})
    if args.path == "-":
        return sys.stdin.read()
    try:
        with open(args.path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError({"error": "io", "message": str(exc)}) from None


def _parse_presentation(text: str) -> Presentation:
    try:
        return parse(text)
    except ParseError as exc:
        raise InputError(
            {"error": "parse", "message": exc.message, "position": exc.pos}
        ) from None


def betti_report(text: str) -> dict[str, Any]:
    p = _parse_presentation(text)
    ab = abelianize(p)
    return {
        "command": "betti",
        "input": text.strip(),
        "presentation": format_presentation(p),
        "generators": p.ngens,
        "relators": len(p.relators),
        "betti": ab.betti,
        "torsion": list(ab.torsion),
        "rank_bounds": [ab.betti, p.ngens],
    }


def check_report(text: str) -> dict[str, Any]:
    p = _parse_presentation(text)
    return {
        "command": "check",
        "input": text.strip(),
        "valid": True,
        "presentation": format_presentation(p),
        "generators": p.ngens,
        "relators": len(p.relators),
    }


def expr_report(text: str) -> dict[str, Any]:
    try:
        e = parse_expr(text)
        t = invariants(e)
    except ExprParseError as exc:
        raise InputError({"error": "parse", "message": exc.message, "position": exc.pos}) from None
    except UnsupportedExpression as exc:
        raise InputError({"error": "unsupported", "message": str(exc)}) from None
    lo, hi = isotropy_bounds(e)
    return {
        "command": "expr",
        "input": text.strip(),
        "expression": format_expr(e),
        "corank": t.corank,
        "betti": t.betti,
        "rank": t.rank,
        "torsion": list(abelianization(e).torsion),
        "isotropy": [lo, hi],
        "torsion_free": is_torsion_free(e),
    }


def realize_report(c: int, b: int, r: int, emit_expression: bool = True,
                   emit_presentation: bool = True, verify: bool = False) -> dict[str, Any]:
    req = TripleRequest(c, b, r)
    report: dict[str, Any] = {"command": "realize", "request": [c, b, r]}
    reason = violation(req)
    if reason is not None:
        report.update(admissible=False, reason=reason)
        return report
    e = realize(req)
    p = to_presentation(e)
    report["admissible"] = True
    if emit_expression:
        report["expression"] = format_expr(e)
    if emit_presentation:
        report["presentation"] = format_presentation(p)
    report["torsion_free"] = is_torsion_free(e)
    if verify:
        t = invariants(e)
        ab = abelianize(p)
        checks = {
            "calculus_triple": t.as_tuple() == (c, b, r),
            "snf_betti": ab.betti == b,
            "generator_count": p.ngens == r,
            "torsion": ab.torsion == (2,) * (r - b),
            "torsion_free_iff_b_eq_r": is_torsion_free(e) == (b == r),
        }
        report["verification"] = {
            "calculus": list(t.as_tuple()),
            "snf_betti": ab.betti,
            "snf_torsion": list(ab.torsion),
            "generators": p.ngens,
            "checks": checks,
            "passed": all(checks.values()),
        }
    return report


def oracle_report(text: str, primes: list[int] | None = None,
                  budget: int = DEFAULT_BUDGET) -> dict[str, Any]:
    p = _parse_presentation(text)
    ab = abelianize(p)
    if primes is None:
        primes = agreement_primes(ab.torsion)
    for q in primes:
        if not is_prime(q):
            raise InputError({"error": "usage", "message": f"{q} is not prime"})
    report: dict[str, Any] = {"command": "oracle", "input": text.strip(), "primes": primes}
    try:
        table = hom_table(p, primes, budget)
    except BudgetExceeded as exc:
        report.update(refused=True, reason=str(exc), budget=budget)
        return report
    oracle_betti = min(h.log_dim for h in table)
    exact = any(all(t % q for t in ab.torsion) for q in primes)
    report.update(
        table=[{"prime": h.prime, "count": h.count, "log_dim": h.log_dim} for h in table],
        oracle_betti=oracle_betti,
        oracle_exact=exact,
        snf_betti=ab.betti,
        snf_torsion=list(ab.torsion),
        agrees=oracle_betti == ab.betti,
    )
    if not exact:
        report["warning"] = "no supplied prime avoids torsion; oracle value is only an upper bound"
    return report


# -- rendering -------------------------------------------------------------------


def _pretty(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_pretty(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {value}")
    return lines


def emit(report: dict[str, Any], pretty: bool = False) -> None:
    if pretty:
        print("\n".join(_pretty(report)))
    else:
        print(json.dumps(report, ensure_ascii=False))


# -- argument parsing ------------------------------------------------------------


def _prime_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("path", nargs="?", help="presentation file, or '-' for stdin")
    source.add_argument("--inline", help="presentation text given directly")

    ap = argparse.ArgumentParser(
        prog="corank",
        description="Betti number, co-rank and rank of finitely presented groups.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("betti", parents=[common, source],
                   help="abelian invariants of a presentation")
    sub.add_parser("check", parents=[common, source], help="parse and normalize only")

    p = sub.add_parser("expr", parents=[common], help="invariants of a group expression")
    p.add_argument("expression", help='e.g. "Z^2 * C(2) * F(3)"')

    p = sub.add_parser("realize", parents=[common],
                       help="witness group for (corank, betti, rank)")
    p.add_argument("c", type=int)
    p.add_argument("b", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--emit-expression", action="store_true")
    p.add_argument("--emit-presentation", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="recompute the triple by the calculus and by Smith normal form")

    p = sub.add_parser("oracle", parents=[common, source],
                       help="Betti number by counting homomorphisms to Z_p")
    p.add_argument("--primes", type=_prime_list, nargs="+",
                   help="primes, space or comma separated (default: 2..13, extended "
                        "past the largest torsion coefficient)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum assignments enumerated per prime")
    return ap


def run(args) -> tuple[dict[str, Any], int]:
    if args.command == "betti":
        return betti_report(_read_input(args)), EXIT_OK
    if args.command == "check":
        return check_report(_read_input(args)), EXIT_OK
    if args.command == "expr":
        return expr_report(args.expression), EXIT_OK
    if args.command == "realize":
        both = not (args.emit_expression or args.emit_presentation)
        report = realize_report(
            args.c, args.b, args.r,
            emit_expression=both or args.emit_expression,
            emit_presentation=both or args.emit_presentation,
            verify=args.verify,
        )
        ok = report["admissible"] and report.get("verification", {}).get("passed", True)
        return report, EXIT_OK if ok else EXIT_REJECTED
    if args.command == "oracle":
        primes = [q for chunk in args.primes for q in chunk] if args.primes else None
        report = oracle_report(_read_input(args), primes, args.budget)
        return report, EXIT_REJECTED if report.get("refused") else EXIT_OK
    raise AssertionError(args.command)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, status = run(args)
    except InputError as exc:
        payload = {"command": args.command, **exc.payload}
        emit(payload, args.pretty)
        where = exc.payload.get("position")
        suffix = f" (at position {where})" if where is not None else ""
        print(f"corank {args.command}: {exc.payload.get('message')}{suffix}", file=sys.stderr)
        return EXIT_BAD_INPUT
    emit(report, args.pretty)
    return status


if __name__ == "__main__":
    sys.exit(main())
