"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad arguments (including
malformed rationals and pole values of mu).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import MuParam, format_rational, parse_rational
from .hermite import generalized_hermite, hermite
from .intertwiner import Realization, v_mu_apply
from .ops import OperatorName, OperatorTag, apply_operator
from .poly import format_poly, parse_poly
from .quadrature import (
    DEFAULT_GRID,
    build_rule,
    compare_realizations,
    required_nodes,
)
from .verify import SUITES, run_suite

SCHEMA_VERSION = 1


class UsageError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _mu(text: str) -> MuParam:
    try:
        return MuParam(parse_rational(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _poly(text: str):
    try:
        return parse_poly(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _positive_float(text: str) -> float:
    try:
        value = float(Fraction(text)) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed number {text!r}") from exc
    if not value > 0:
        raise UsageError(f"mu must be > 0 for quadrature, got {text}")
    return value


def _coeff_list(p):
    return [format_rational(c) for c in p.coeffs]


def _emit_json(obj) -> None:
    obj = {"schema_version": SCHEMA_VERSION, **obj}
    print(json.dumps(obj, indent=2))


def cmd_hermite(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.mu is None:
        p = hermite(args.n)
    else:
        p = generalized_hermite(_mu(args.mu), args.n)
    if args.json:
        _emit_json({"n": args.n, "mu": args.mu, "coefficients": _coeff_list(p)})
    else:
        print(format_poly(p))
    return 0


def cmd_intertwine(args) -> int:
    mu = _mu(args.mu)
    p = _poly(args.poly)
    image = v_mu_apply(mu, p, Realization(args.method))
    if args.json:
        _emit_json({
            "mu": str(mu),
            "method": args.method,
            "input": _coeff_list(p),
            "output": _coeff_list(image),
        })
    else:
        print(format_poly(image))
    return 0


def cmd_apply(args) -> int:
    name = OperatorName(args.op)
    mu = _mu(args.mu) if args.mu is not None else None
    try:
        tag = OperatorTag(name, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    p = _poly(args.poly)
    out = apply_operator(tag, p)
    if args.json:
        _emit_json({
            "operator": name.value,
            "mu": None if mu is None else str(mu),
            "input": _coeff_list(p),
            "output": _coeff_list(out),
        })
    else:
        print(format_poly(out))
    return 0


def cmd_verify(args) -> int:
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    mus = None
    if args.mu_samples:
        mus = [_mu(t).value for t in args.mu_samples.split(",")]
        if len(set(mus)) != len(mus):
            raise UsageError("--mu-samples must be distinct")
    report = run_suite(args.suite, args.max_degree, mus, jobs=args.jobs)
    print(json.dumps(report.as_dict(), indent=2))
    return 0 if report.ok else 1


def cmd_quadrature(args) -> int:
    mu = _positive_float(args.mu)
    if args.nodes < 1:
        raise UsageError("--nodes must be >= 1")
    rule = build_rule(mu, args.nodes)
    if args.emit_rule:
        _emit_json({
            "mu": mu,
            "nodes": list(rule.nodes),
            "weights": list(rule.weights),
        })
    else:
        for t, w in zip(rule.nodes, rule.weights):
            print(f"{t:.17g},{w:.17g}")
    return 0


def cmd_compare(args) -> int:
    _positive_float(args.mu)
    mu = Fraction(args.mu)
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    if args.nodes is not None and args.nodes < required_nodes(args.max_degree):
        print(
            f"warning: {args.nodes} nodes cannot integrate degree "
            f"{args.max_degree} exactly; need {required_nodes(args.max_degree)}",
            file=sys.stderr,
        )
    report = compare_realizations(mu, args.max_degree, DEFAULT_GRID, args.nodes)
    _emit_json(report.as_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dunkl",
        description="Exact one-dimensional Dunkl calculus and the Dunkl "
                    "intertwining operator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("hermite", "genhermite"):
        p = sub.add_parser(name, help="Hermite or generalized Hermite coefficients")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--mu", default=None, help="rational p/q; omit for H_n")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("intertwine", help="apply V_mu to a polynomial")
    p.add_argument("--mu", required=True)
    p.add_argument("--method", required=True,
                   choices=[r.value for r in Realization if r is not Realization.INTEGRAL])
    p.add_argument("--poly", required=True, help="coefficients low to high, e.g. -2,0,4")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_intertwine)

    p = sub.add_parser("apply", help="apply a named operator to a polynomial")
    p.add_argument("--op", required=True, choices=[o.value for o in OperatorName])
    p.add_argument("--mu", default=None)
    p.add_argument("--poly", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--max-degree", type=int, default=40)
    p.add_argument("--mu-samples", default=None,
                   help="comma-separated rationals; default is a certification set")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quadrature", help="print a normalized Gauss-Jacobi rule")
    p.add_argument("--mu", required=True)
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--emit-rule", action="store_true",
                   help="emit the rule as a JSON object instead of CSV")
    p.set_defaults(func=cmd_quadrature)

    p = sub.add_parser("compare", help="integral vs exact V_mu error report")
    p.add_argument("--mu", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--nodes", type=int, default=None)
    p.set_defaults(func=cmd_compare)
    return parser


_VALUE_FLAGS = ("--mu", "--poly", "--mu-samples")


def _join_signed_values(argv):
    # argparse mistakes "-3/2" or "-2,0,4" for an option; glue to the flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
            else:
                out.extend([tok, nxt])
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_signed_values(list(argv)))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dunkl {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
