"""Command-line front end.

Exit codes: 0 confirmed/consistent, 1 a hypothesis or check failed,
2 inconclusive at the horizon, 3 usage or parse errors.  The only
environment override is VANISHLAB_HORIZON.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import cases, density
from .cases import CaseVerdict
from .diffops import vanishing_profile
from .parsing import ParseError, parse_generators, parse_operator, parse_point, parse_poly
from .polytopes import (
    RationalPolytope,
    SeparationCertificate,
    Witness,
    contains_point,
    moveaway_bound,
    orthant_meet,
)

TEXT = "text"
STRUCTURED = "structured"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(3, f"{self.prog}: error: {message}\n")


def _default_horizon():
    value = os.environ.get("VANISHLAB_HORIZON")
    return int(value) if value else 8


def _read_arg(value):
    if value == "-":
        return sys.stdin.read()
    return value


class Emitter:
    def __init__(self, fmt):
        self.fmt = fmt

    def kv(self, key, value):
        if isinstance(value, bool):
            value = "true" if value else "false"
        print(f"{key}={value}")

    def text(self, line=""):
        if self.fmt == TEXT:
            print(line)

    def record(self, key, value):
        if self.fmt == STRUCTURED:
            self.kv(key, value)


def _point_str(point):
    return "(" + ",".join(str(v) for v in point) + ")"


def _split_vars(spec):
    names = [v.strip() for v in spec.split(",") if v.strip()]
    if not names or len(set(names)) != len(names):
        raise ValueError("variable names must be nonempty and unique")
    return names


# ---------------------------------------------------------------------------

def cmd_vanish(args, out):
    names = _split_vars(args.vars)
    op = parse_operator(_read_arg(args.op), names)
    p = parse_poly(_read_arg(args.p), names)
    g = parse_poly(_read_arg(args.g), names) if args.g else None
    profile = vanishing_profile(op, p, g, args.horizon)
    out.record("subcommand", "vanish")
    out.record("horizon", profile.horizon)
    out.text(f"vanishing profile up to M={profile.horizon}")
    for e in profile.entries:
        out.record(f"m{e.m}.pp_zero", e.pp_zero)
        out.record(f"m{e.m}.ppg_zero", e.ppg_zero)
        line = f"  m={e.m}: L^m(P^m)={'0' if e.pp_zero else e.pp_residual.to_string(names)}"
        line += f"  L^m(P^m g)={'0' if e.ppg_zero else e.ppg_residual.to_string(names)}"
        out.text(line)
        if not e.pp_zero:
            out.record(f"m{e.m}.pp_residual", e.pp_residual.to_string(names))
        if not e.ppg_zero:
            out.record(f"m{e.m}.ppg_residual", e.ppg_residual.to_string(names))
    if profile.first_pp_failure is not None:
        out.record("verdict", "hypothesis-fails")
        out.record("first_failure", profile.first_pp_failure)
        out.text(f"hypothesis fails first at m={profile.first_pp_failure}")
        return 1
    if profile.ppg_zero_from is not None:
        out.record("verdict", "verified-up-to-horizon")
        out.record("ppg_zero_from", profile.ppg_zero_from)
        out.text(f"all vanish from m={profile.ppg_zero_from} up to the horizon")
        return 0
    out.record("verdict", "inconclusive")
    out.text("L^m(P^m g) still nonzero at the horizon")
    return 2


def cmd_polytope(args, out):
    gens = parse_generators(args.sigma)
    sigma = RationalPolytope(gens)
    out.record("subcommand", "polytope")
    status = 0
    if args.point is not None:
        w = parse_point(args.point)
        coeffs = contains_point(sigma, w)
        inside = coeffs is not None
        out.record("point", _point_str(w))
        out.record("contains", inside)
        if inside:
            out.record("coefficients", _point_str(coeffs))
        out.text(f"point {_point_str(w)}: "
                 + (f"inside, coefficients {_point_str(coeffs)}" if inside else "outside"))
    meet = orthant_meet(sigma)
    if isinstance(meet, SeparationCertificate):
        out.record("kind", "certificate")
        out.record("c", _point_str(meet.c))
        out.record("delta", meet.delta)
        out.text(f"certificate: c={_point_str(meet.c)}, delta={meet.delta}")
        if args.beta is not None:
            beta = parse_point(args.beta)
            n = moveaway_bound(beta, sigma, meet)
            out.record("beta", _point_str(beta))
            out.record("moveaway_N", n)
            out.text(f"move-away bound for beta={_point_str(beta)}: N={n}")
    else:
        out.record("kind", "witness")
        out.record("witness", _point_str(meet.point))
        out.text(f"witness in the orthant: {_point_str(meet.point)}")
        if args.beta is not None:
            out.record("moveaway_N", "undefined")
            out.text("no move-away bound: the polytope meets the orthant")
            status = 1
    return status


def cmd_density(args, out):
    names = _split_vars(args.vars)
    p = parse_poly(_read_arg(args.p), names)
    u = parse_point(args.u)
    out.record("subcommand", "density")
    out.record("u", _point_str(u))
    if args.homogeneous:
        hits = density.homogeneous_density(p, u, args.horizon)
        out.record("hits", ",".join(str(m) for m in hits))
        out.text(f"m with m*u in Supp(P^m), m <= {args.horizon}: {hits}")
        out.record("verdict", density.FOUND if hits else density.INCONCLUSIVE)
        return 0 if hits else 2
    report = density.ray_hits_support(p, u, args.horizon)
    for m, lam in report.hits:
        out.record(f"hit.m{m}", _point_str(lam))
    out.record("verdict", report.verdict)
    if report.verdict == density.FOUND:
        out.text(f"first hit at m={report.first_hit}; hits: "
                 + ", ".join(f"m={m}:{_point_str(l)}" for m, l in report.hits))
        return 0
    out.text(f"no support point on the ray up to M={report.horizon} (inconclusive)")
    return 2


def cmd_dk(args, out):
    names = _split_vars(args.vars)
    f = parse_poly(_read_arg(args.f), names)
    report = density.dk_check(f, args.horizon)
    out.record("subcommand", "dk")
    for m, c in enumerate(report.constant_terms, start=1):
        out.record(f"constant_term.m{m}", c)
    out.record("zero_in_polytope", report.zero_in_polytope)
    out.record("verdict", report.verdict)
    out.text(f"constant terms of f^m, m <= {report.horizon}: "
             + ", ".join(str(c) for c in report.constant_terms))
    if report.verdict == density.HYPOTHESIS_FAILS:
        out.record("first_nonzero", report.first_nonzero)
        out.text(f"hypothesis fails at m={report.first_nonzero}")
        return 1
    if report.verdict == density.CONSISTENT:
        out.text("all zero and 0 is outside Poly(f): consistent")
        return 0
    out.text("all zero but 0 is inside Poly(f): a nonzero constant term "
             "is predicted beyond the horizon")
    return 2


def _emit_verdict(verdict: CaseVerdict, out):
    out.record("case", verdict.case)
    out.text(f"case {verdict.case}")
    for name, ok in verdict.checks:
        out.record(f"check.{name.replace(' ', '_')}", ok)
        out.text(f"  check: {name}: {'pass' if ok else 'FAIL'}")
    if verdict.bound is not None:
        out.record("bound", verdict.bound)
        out.text(f"  bound B = {verdict.bound}; vanishing verified for B < m <= M")
    if verdict.verified:
        out.record("verified", ",".join(str(m) for m in verdict.verified))
        out.text(f"  verified m: {list(verdict.verified)}")
    for m, residual in sorted(verdict.residuals.items()):
        out.record(f"residual.m{m}", residual)
        out.text(f"  residual at m={m}: {residual}")
    for note in verdict.notes:
        out.record("note", note)
        out.text(f"  note: {note}")
    for anomaly in verdict.anomalies:
        out.record("anomaly", anomaly)
        out.text(f"  ANOMALY: {anomaly}")
    out.record("status", verdict.status)
    out.text(f"  status: {verdict.status} (verified up to horizon only)")
    return {"confirmed": 0, "hypothesis-fails": 1, "failed": 1, "inconclusive": 2}[verdict.status]


def cmd_case(args, out):
    names = _split_vars(args.vars)
    horizon = args.horizon
    if args.which == "one-var":
        if len(names) != 1:
            raise ValueError("the one-variable case needs exactly one variable")
        lam = parse_operator(_read_arg(args.op), names).symbol
        p = parse_poly(_read_arg(args.p), names)
        g = parse_poly(_read_arg(args.g) if args.g else "1", names)
        verdict = cases.one_var_check(lam, p, g, horizon)
    elif args.which == "phi":
        if len(names) != 2:
            raise ValueError("the phi case needs exactly two variables")
        phi = parse_operator(_read_arg(args.phi), [names[1]]).symbol
        f = parse_poly(_read_arg(args.f), names)
        g = parse_poly(_read_arg(args.g) if args.g else "1", names)
        verdict = cases.phi_case_check(phi, f, g, horizon)
    elif args.which == "monomial":
        op = parse_operator(_read_arg(args.op), names)
        p = parse_poly(_read_arg(args.p), names)
        g = parse_poly(_read_arg(args.g) if args.g else "1", names)
        verdict = cases.monomial_case_check(op, p, g, horizon)
    else:  # two-monomial
        op = parse_operator(_read_arg(args.op), names)
        p = parse_poly(_read_arg(args.p), names)
        g = parse_poly(_read_arg(args.g) if args.g else "1", names)
        if len(op.symbol.terms) == 2:
            (alpha, a), (beta, b) = op.symbol.terms.items()
            verdict = cases.two_monomial_check(a, alpha, b, beta, p, g, horizon)
        else:
            verdict = cases.homogeneous_two_monomial_p_check(op, p, g, horizon)
    out.record("subcommand", f"case {args.which}")
    return _emit_verdict(verdict, out)


def cmd_counterexample(args, out):
    if args.which == "ddv":
        report = cases.counterexample_ddv(args.horizon, args.precision)
    else:
        report = cases.counterexample_dk(args.horizon, args.precision)
    out.record("subcommand", f"counterexample {args.which}")
    out.record("horizon", report.horizon)
    out.record("precision", report.precision)
    out.text(f"counterexample {report.name}: M={report.horizon}, D={report.precision}")
    for m, checks in report.rows:
        for name, ok in checks:
            out.record(f"m{m}.{name.replace(' ', '_')}", ok)
        summary = "; ".join(f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in checks)
        out.text(f"  m={m}: {summary}")
    out.record("ok", report.ok)
    out.text("all checks pass" if report.ok else "CHECK FAILURE")
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------

def build_parser():
    parser = _Parser(prog="vanishlab",
                     description="Exact checks for vanishing of powers of "
                                 "constant-coefficient differential operators.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, vars_default=None, precision=False):
        if vars_default is not None:
            p.add_argument("--vars", default=vars_default,
                           help="comma-separated ordered variable names")
        p.add_argument("-M", "--horizon", type=int, default=_default_horizon())
        if precision:
            p.add_argument("-D", "--precision", type=int, default=12)
        p.add_argument("--format", choices=[TEXT, STRUCTURED], default=TEXT)

    p = sub.add_parser("vanish", help="per-m vanishing profile")
    common(p, vars_default="x,y")
    p.add_argument("--op", required=True, help="operator, e.g. 'dx*dy'")
    p.add_argument("--p", required=True, help="polynomial P ('-' reads stdin)")
    p.add_argument("--g", help="multiplier g (default 1)")
    p.set_defaults(func=cmd_vanish)

    p = sub.add_parser("polytope", help="orthant queries on a V-rep polytope")
    common(p)
    p.add_argument("--sigma", required=True, help="generators, e.g. '(-2,1);(1,-2)'")
    p.add_argument("--beta", help="translation point for the move-away bound")
    p.add_argument("--point", help="membership query point")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("density", help="ray search through supports of powers")
    common(p, vars_default="x,y")
    p.add_argument("--p", required=True)
    p.add_argument("--u", required=True, help="rational point, e.g. '(1/2,1/2)'")
    p.add_argument("--homogeneous", action="store_true")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("dk", help="constant-term scan against Poly(f)")
    common(p, vars_default="x,y")
    p.add_argument("--f", required=True)
    p.set_defaults(func=cmd_dk)

    p = sub.add_parser("case", help="proved-case checkers")
    which = p.add_subparsers(dest="which", required=True)
    for name in ("one-var", "phi", "monomial", "two-monomial"):
        q = which.add_parser(name)
        common(q, vars_default="x" if name == "one-var" else "x,y")
        if name == "phi":
            q.add_argument("--phi", required=True, help="Phi as an operator in d<y>")
            q.add_argument("--f", required=True, help="polynomial in the second variable")
        else:
            q.add_argument("--op", required=True)
            q.add_argument("--p", required=True)
        q.add_argument("--g")
        q.set_defaults(func=cmd_case)

    p = sub.add_parser("counterexample", help="series-scale counterexamples")
    which = p.add_subparsers(dest="which", required=True)
    for name in ("ddv", "dk"):
        q = which.add_parser(name)
        common(q, precision=True)
        q.set_defaults(func=cmd_counterexample)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Emitter(args.format)
    try:
        return args.func(args, out)
    except (ParseError, ValueError) as exc:
        print(f"vanishlab: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
