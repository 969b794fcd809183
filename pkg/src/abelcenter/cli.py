"""Command-line front end.

Exit codes: 0 computed and the verdict holds, 1 computed and the verdict is
negative, 2 usage or input error, 3 runtime failure (blow-up, singular
endpoint).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from .abelmodel import AbelEquation, paper_counterexample, paper_curves
from .compcond import composition_condition, moment
from .darboux import (
    DarbouxCandidate,
    SingularEndpointError,
    check_first_integral,
    cofactor,
    endpoint_profile,
)
from .itint import IndexTuple, iterated_integral
from .numflow import (
    DEFAULT_GRID,
    BlowUpError,
    IllConditionedFitError,
    StepUnderflowError,
    integrate_flow,
)
from .parse import ParseError, parse_bipoly, parse_indices, parse_poly, parse_rational
from .polycore import BiPoly, format_rational
from .returnmap import center_check, return_map_coefficient, universal_center_check

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2, 3

_VALUE_FLAGS = {
    "--p", "--q", "--a", "--b", "--indices", "--n", "--order", "--i", "--j",
    "--weight", "--f", "--m0", "--curves", "--y0", "--grid", "--tol",
}


class UsageError(ValueError):
    pass


class Report:
    """One verdict: a JSON-ready payload plus its text rendering."""

    def __init__(self, command: str, code: int = EXIT_OK):
        self.code = code
        self.data: dict = {"command": command}
        self.lines: list[str] = []

    def text(self) -> str:
        return "\n".join(self.lines)


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse rejects option values such as "-1/2" or "-3x"; rewrite as --flag=value
    out: list[str] = []
    i = 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and argv[i + 1] not in _VALUE_FLAGS and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _equation(args) -> AbelEquation:
    if args.paper:
        if any(v is not None for v in (args.p, args.q, args.a, args.b)):
            raise UsageError("--paper cannot be combined with --p/--q/--a/--b")
        return paper_counterexample()
    missing = [f"--{n}" for n in ("p", "q", "a", "b") if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)} (or use --paper)")
    a, b = parse_rational(args.a), parse_rational(args.b)
    if not a < b:
        raise UsageError("interval must satisfy a < b")
    return AbelEquation(parse_poly(args.p), parse_poly(args.q), a, b)


def _equation_data(eq: AbelEquation) -> dict:
    return {"p": str(eq.p), "q": str(eq.q), "a": format_rational(eq.a), "b": format_rational(eq.b)}


def _curve(spec: str) -> tuple[str, BiPoly]:
    spec = spec.strip()
    builtin = paper_curves()
    if spec in builtin:
        return spec, builtin[spec]
    return spec, parse_bipoly(spec)


def _positive(value: int, flag: str) -> int:
    if value < 1:
        raise UsageError(f"{flag} must be a positive integer")
    return value


def _floats(text: str, flag: str) -> list[float]:
    try:
        vals = [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated numbers") from None
    if not vals:
        raise UsageError(f"{flag} is empty")
    return vals


# -- commands -------------------------------------------------------------


def cmd_iterated(args) -> Report:
    if args.indices is None:
        raise UsageError("--indices is required")
    t = IndexTuple(parse_indices(args.indices))
    eq = _equation(args)
    value = iterated_integral(eq, t)
    rep = Report("iterated")
    rep.data.update(equation=_equation_data(eq), indices=list(t), value=format_rational(value))
    rep.lines.append(format_rational(value))
    return rep


def cmd_return_coeff(args) -> Report:
    if args.n is None:
        raise UsageError("--n is required")
    n = _positive(args.n, "--n")
    eq = _equation(args)
    value = return_map_coefficient(eq, n)
    rep = Report("return-coeff")
    rep.data.update(equation=_equation_data(eq), n=n, value=format_rational(value))
    rep.lines.append(format_rational(value))
    return rep


def cmd_center_check(args) -> Report:
    N = _positive(args.order, "--order")
    eq = _equation(args)
    res = center_check(eq, N)
    rep = Report("center-check", EXIT_OK if res.all_zero else EXIT_NEGATIVE)
    rep.data.update(
        equation=_equation_data(eq),
        order_checked=N,
        all_zero=res.all_zero,
        first_failure=None if res.all_zero else
        {"n": res.first_failure[0], "value": format_rational(res.first_failure[1])},
        coefficients=[format_rational(c) for c in res.coefficients],
    )
    if res.all_zero:
        rep.lines.append(f"CENTER up to order {N}")
    else:
        n, v = res.first_failure
        rep.lines.append(f"NOT A CENTER: c_{n} = {format_rational(v)}")
    rep.lines += [f"c_{n} = {format_rational(c)}" for n, c in enumerate(res.coefficients, 1)]
    return rep


def cmd_universal_check(args) -> Report:
    N = _positive(args.order, "--order")
    eq = _equation(args)
    res = universal_center_check(eq, N)
    rep = Report("universal-check", EXIT_OK if res.universal else EXIT_NEGATIVE)
    rep.data.update(equation=_equation_data(eq), order_checked=N, universal=res.universal)
    if res.universal:
        rep.data["witness"] = None
        rep.lines.append(f"UNIVERSAL CENTER up to order {N}")
    else:
        t, v = res.witness
        rep.data["witness"] = {"tuple": list(t), "value": format_rational(v)}
        rep.lines.append(f"NOT UNIVERSAL: {t.label()} = {format_rational(v)}")
    return rep


def cmd_composition(args) -> Report:
    eq = _equation(args)
    verdict = composition_condition(eq)
    rep = Report("composition", EXIT_OK if verdict.holds else EXIT_NEGATIVE)
    rep.data.update(equation=_equation_data(eq), holds=verdict.holds, reason=verdict.reason)
    if verdict.holds:
        w = verdict.witness
        rep.data["witness"] = {"w": str(w.w), "p1": w.p1.format("t"), "q1": w.q1.format("t")}
        rep.lines += [
            "HOLDS",
            f"w(x) = {w.w}",
            f"p1(t) = {w.p1.format('t')}",
            f"q1(t) = {w.q1.format('t')}",
        ]
    else:
        rep.data["witness"] = None
        rep.lines.append(f"FAILS ({verdict.reason})")
    return rep


def cmd_moment(args) -> Report:
    if args.i is None or args.j is None:
        raise UsageError("--i and --j are required")
    if args.i < 0 or args.j < 0:
        raise UsageError("--i and --j must be non-negative")
    eq = _equation(args)
    value = moment(eq, args.i, args.j, args.weight)
    rep = Report("moment")
    rep.data.update(
        equation=_equation_data(eq), i=args.i, j=args.j, weight=args.weight,
        value=format_rational(value), float=float(value),
    )
    rep.lines.append(format_rational(value))
    return rep


def cmd_invariant(args) -> Report:
    if args.f is None:
        raise UsageError("--f is required")
    _, F = _curve(args.f)
    if F.is_zero():
        raise UsageError("--f must be a nonzero polynomial")
    eq = _equation(args)
    K = cofactor(eq, F)
    rep = Report("invariant", EXIT_OK if K is not None else EXIT_NEGATIVE)
    rep.data.update(
        equation=_equation_data(eq), curve=str(F), invariant=K is not None,
        cofactor=None if K is None else str(K),
    )
    if K is None:
        rep.lines.append("NOT INVARIANT")
    else:
        rep.lines += ["INVARIANT", f"cofactor K = {K}"]
    return rep


def _parse_curves(text: Optional[str]) -> list[tuple[str, BiPoly, int]]:
    if not text:
        return []
    out = []
    for item in text.split(","):
        if ":" not in item:
            raise UsageError(f"--curves entry {item!r} must look like name:exponent")
        name, exp = item.rsplit(":", 1)
        try:
            m = int(exp)
        except ValueError:
            raise UsageError(f"exponent {exp!r} is not an integer") from None
        label, F = _curve(name)
        if F.is_zero():
            raise UsageError(f"curve {label!r} is zero")
        out.append((label, F, m))
    return out


def cmd_first_integral(args) -> Report:
    curves = _parse_curves(args.curves)
    if args.m0 == 0 and not curves:
        raise UsageError("give --m0 and/or --curves")
    eq = _equation(args)
    cand = DarbouxCandidate(args.m0, tuple((F, m) for _, F, m in curves))
    check = check_first_integral(eq, cand)
    rep = Report("first-integral", EXIT_OK if check.holds else EXIT_NEGATIVE)
    rep.data.update(
        equation=_equation_data(eq),
        m0=args.m0,
        curves=[{"name": n, "curve": str(F), "exponent": m} for n, F, m in curves],
        first_integral=check.holds,
    )
    if check.missing_cofactor is not None:
        bad = curves[check.missing_cofactor][0]
        rep.data["not_invariant"] = bad
        rep.lines.append(f"NOT A FIRST INTEGRAL (curve {bad} is not invariant)")
        return rep
    rep.data["cofactor_sum"] = str(check.identity)
    rep.lines.append("FIRST INTEGRAL" if check.holds else "NOT A FIRST INTEGRAL")
    rep.lines.append(f"m0*(p*y + q*y^2) + sum m_i*K_i = {check.identity}")
    profiles = {}
    for label, x0 in (("a", eq.a), ("b", eq.b)):
        num, den = endpoint_profile(cand, x0)
        profiles[label] = {"x": format_rational(x0), "numerator": num.format("y"),
                           "denominator": den.format("y")}
        rep.lines.append(f"H({format_rational(x0)}, y) = ({num.format('y')}) / ({den.format('y')})")
    rep.data["endpoint_profiles"] = profiles
    return rep


def cmd_numeric_poincare(args) -> Report:
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    if args.y0 is not None:
        grid = [float(args.y0)]
    elif args.grid is not None:
        grid = _floats(args.grid, "--grid")
    else:
        grid = list(DEFAULT_GRID)
    eq = _equation(args)
    rows = []
    for y0 in grid:
        res = integrate_flow(eq, y0, args.tol)
        rows.append((y0, res))
    worst = max(abs(r.y_end - y0) for y0, r in rows)
    rep = Report("numeric-poincare")
    rep.data.update(
        equation=_equation_data(eq), tol=args.tol, max_residual=worst,
        samples=[{"y0": y0, "y_end": r.y_end, "residual": r.y_end - y0,
                  "steps": r.steps, "est_error": r.est_error} for y0, r in rows],
    )
    rep.lines.append(f"max |P(y0) - y0| = {worst:.6e}")
    for y0, r in rows:
        rep.lines.append(
            f"y0 = {y0:+.6g}  P(y0) - y0 = {r.y_end - y0:+.6e}  steps = {r.steps}"
        )
    return rep


def cmd_paper_counterexample(args) -> Report:
    eq = paper_counterexample()
    curves = paper_curves()
    rep = Report("paper-counterexample")
    rep.data.update(
        equation=_equation_data(eq),
        p_tilde=str(eq.tilde("p")),
        q_tilde=str(eq.tilde("q")),
        curves={k: str(v) for k, v in curves.items()},
        first_integral="y^2 * f1^3 / f2^4",
    )
    rep.lines += [
        f"p(x) = {eq.p}",
        f"q(x) = {eq.q}",
        f"[a, b] = [{format_rational(eq.a)}, {format_rational(eq.b)}]",
        f"p~(x) = {eq.tilde('p')}",
        f"q~(x) = {eq.tilde('q')}",
    ]
    rep.lines += [f"{k} = {v}" for k, v in curves.items()]
    rep.lines.append("H = y^2 * f1^3 / f2^4")
    return rep


COMMANDS: dict[str, Callable] = {
    "iterated": cmd_iterated,
    "return-coeff": cmd_return_coeff,
    "center-check": cmd_center_check,
    "universal-check": cmd_universal_check,
    "composition": cmd_composition,
    "moment": cmd_moment,
    "invariant": cmd_invariant,
    "first-integral": cmd_first_integral,
    "numeric-poincare": cmd_numeric_poincare,
    "paper-counterexample": cmd_paper_counterexample,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelcenter",
        description="Exact center, composition and Darboux checks for dy/dx = p y^2 + q y^3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    eq_flags = argparse.ArgumentParser(add_help=False)
    eq_flags.add_argument("--p", help="coefficient of y^2, e.g. '40x^4 - 30x^2 + 2'")
    eq_flags.add_argument("--q", help="coefficient of y^3")
    eq_flags.add_argument("--a", help="left endpoint (integer or num/den)")
    eq_flags.add_argument("--b", help="right endpoint (integer or num/den)")
    eq_flags.add_argument("--paper", action="store_true", help="use the built-in counterexample")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    def add(name, help, with_eq=True):
        parents = [eq_flags, common] if with_eq else [common]
        return sub.add_parser(name, help=help, parents=parents)

    add("iterated", "exact iterated integral").add_argument("--indices")
    add("return-coeff", "exact return-map coefficient c_n").add_argument("--n", type=int)
    add("center-check", "c_1..c_N all zero?").add_argument("--order", type=int, default=8)
    add("universal-check", "all iterated integrals up to order N zero?").add_argument(
        "--order", type=int, default=6)
    add("composition", "decide the composition condition")
    p = add("moment", "int p~^i q~^j w dx")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--weight", choices=("p", "q"), default="p")
    add("invariant", "is a curve invariant? (name f1/f2/f3 or polynomial in x, y)").add_argument("--f")
    p = add("first-integral", "verify y^m0 * prod f_i^m_i")
    p.add_argument("--m0", type=int, default=0)
    p.add_argument("--curves", help="comma-separated name:exponent, e.g. f1:3,f2:-4")
    p = add("numeric-poincare", "floating-point Poincare map residuals")
    p.add_argument("--y0", type=float)
    p.add_argument("--grid", help="comma-separated initial values")
    p.add_argument("--tol", type=float, default=1e-12)
    add("paper-counterexample", "print the built-in counterexample", with_eq=False)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        rep = COMMANDS[args.command](args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (BlowUpError, StepUnderflowError, SingularEndpointError, IllConditionedFitError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_RUNTIME
    if args.json:
        rep.data["exit_code"] = rep.code
        print(json.dumps(rep.data, indent=2), file=out)
    else:
        print(rep.text(), file=out)
    return rep.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
