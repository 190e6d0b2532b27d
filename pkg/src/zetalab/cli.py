"""Batch command-line surface.

Subcommands: eval, bounds, map, zeros, jensen, rouche, audit.  Complex
arguments are passed as two positional reals (re, im).  Exit codes:
0 success, 1 FAIL verdicts present in an audit, 2 numerical error,
3 usage error (including a missing config file).
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import claim_audit, quadrature as quad, special_functions as sf
from . import strip_map as smap, zero_analysis as za
from .config import AuditConfig, load_config
from .errors import ZetaLabError

__all__ = ["main", "AuditConfig"]

USAGE_EXIT = 3
NUMERIC_EXIT = 2


class _CliExit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; the contract wants 3
        self.print_usage(sys.stderr)
        raise _CliExit(USAGE_EXIT, f"error: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="zetalab", description=__doc__)
    parser.add_argument("--tol", type=float, default=None, help="quadrature tolerance override")
    parser.add_argument("--budget", type=int, default=None, help="evaluation budget override")
    parser.add_argument("--format", choices=("csv", "doc"), default=None, help="output format")
    parser.add_argument("--config", type=str, default=None, help="key=value config file")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a function at a complex point")
    p_eval.add_argument("function", choices=("zeta", "eta", "gamma", "F", "F_shifted"))
    p_eval.add_argument("re", type=float)
    p_eval.add_argument("im", type=float)

    p_bounds = sub.add_parser("bounds", help="CSV table of bound values over an alpha grid")
    p_bounds.add_argument("--lo", type=float, default=0.5)
    p_bounds.add_argument("--hi", type=float, default=1.0)
    p_bounds.add_argument("--step", type=float, default=0.1)

    p_map = sub.add_parser("map", help="disk-to-strip map diagnostics at one point")
    p_map.add_argument("re", type=float)
    p_map.add_argument("im", type=float)
    p_map.add_argument("b", type=float)

    p_zeros = sub.add_parser("zeros", help="critical-line zeros up to a height")
    p_zeros.add_argument("--tau", type=float, default=None, help="height (default: config tau_max)")
    p_zeros.add_argument("--zero-tol", type=float, default=None, help="default: config zero_tol")

    p_jensen = sub.add_parser("jensen", help="zero-free disk identity for the composed integral")
    p_jensen.add_argument("--b", type=float, default=0.9)
    p_jensen.add_argument("--radius", type=float, default=0.95)
    p_jensen.add_argument("--samples", type=int, default=384)

    p_rouche = sub.add_parser("rouche", help="triangle-margin scan over the K(tau) boundary")
    p_rouche.add_argument("--tau", type=float, required=True)
    p_rouche.add_argument("--lam", type=float, default=None)
    p_rouche.add_argument("--epsilon", type=float, default=0.1)
    p_rouche.add_argument("--nu", type=float, default=0.01)
    p_rouche.add_argument("--theta-abs", type=float, default=1.0)

    p_audit = sub.add_parser("audit", help="run the full claim audit")
    p_audit.add_argument("--out", type=str, default=None, help="report file (default stdout)")

    return parser


def _resolve_config(args) -> AuditConfig:
    if args.config is not None:
        path = Path(args.config)
        if not path.exists():
            raise _CliExit(USAGE_EXIT, f"error: config file not found: {path}")
        cfg = load_config(path)
    else:
        cfg = AuditConfig()
    overrides = {}
    if args.tol is not None:
        overrides["quad_tol"] = args.tol
    if args.budget is not None:
        overrides["eval_budget"] = args.budget
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.format is not None:
        overrides["output_format"] = args.format
    if overrides:
        from dataclasses import replace

        cfg = replace(cfg, **overrides)
    return cfg


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _cmd_eval(args, cfg: AuditConfig) -> int:
    s = complex(args.re, args.im)
    tol = args.tol if args.tol is not None else cfg.quad_tol
    if args.function == "F":
        est = quad.fermi_mellin(s, tol, budget=cfg.eval_budget)
        value, err = est.value, est.abs_error
    elif args.function == "F_shifted":
        est = quad.f_shifted(s, tol, budget=cfg.eval_budget)
        value, err = est.value, est.abs_error
    elif args.function == "gamma":
        value = sf.gamma(s)
        err = abs(value) * 1e-12
    elif args.function == "eta":
        value, err = sf.eta(s), 1e-13
    else:
        value, err = sf.zeta(s), 1e-12
    print(f"value = {_fmt(value.real)} {'+' if value.imag >= 0 else '-'} {_fmt(abs(value.imag))}i")
    print(f"modulus = {_fmt(abs(value))}")
    print(f"abs_error <= {err:.3e}")
    return 0


def _cmd_bounds(args, cfg: AuditConfig) -> int:
    if not (0.0 < args.lo <= args.hi <= 1.0) or args.step <= 0.0:
        raise _CliExit(USAGE_EXIT, "error: bounds grid must sit inside (0, 1]")
    print("alpha,m,m_star,m_star_d1,m_star_d2")
    alpha = args.lo
    while alpha <= args.hi + 1e-12:
        a = min(alpha, 1.0)
        row = quad.BoundsSample(
            alpha=a,
            m=quad.m_bound(a),
            m_star=quad.m_star(a, cfg.quad_tol, budget=cfg.eval_budget),
            m_star_d1=quad.m_star_derivative(a, 1, cfg.quad_tol, budget=cfg.eval_budget),
            m_star_d2=quad.m_star_derivative(a, 2, cfg.quad_tol, budget=cfg.eval_budget),
        )
        print(
            f"{_fmt(row.alpha)},{_fmt(row.m)},{_fmt(row.m_star)},"
            f"{_fmt(row.m_star_d1)},{_fmt(row.m_star_d2)}"
        )
        alpha += args.step
    return 0


def _cmd_map(args, cfg: AuditConfig) -> int:
    z = complex(args.re, args.im)
    t = smap.theta(z, args.b)
    omega = smap.phi(z, args.b)
    back = smap.phi_inverse(omega, args.b)
    print(f"theta  = {t}")
    print(f"omega  = {omega}")
    print(f"H      = {_fmt(smap.disk_modulus_H(t, args.b))}")
    print(f"roundtrip |phi_inverse(phi(z)) - z| = {abs(back - z):.3e}")
    return 0


def _cmd_zeros(args, cfg: AuditConfig) -> int:
    tau = args.tau if args.tau is not None else cfg.tau_max
    zero_tol = args.zero_tol if args.zero_tol is not None else cfg.zero_tol
    zeros = za.critical_line_zeros(tau, zero_tol)
    print(f"zeros up to tau = {_fmt(tau)}: {len(zeros)}")
    for beta in zeros:
        print(f"  beta = {_fmt(beta)}")
    if tau >= 2.0 * math.pi * math.e:
        est = za.riemann_von_mangoldt(tau)
        print(f"counting-formula estimate = {_fmt(est)} (|count - estimate| = {abs(len(zeros) - est):.3f})")
    return 0


def _cmd_jensen(args, cfg: AuditConfig) -> int:
    fn = lambda z: smap.f_on_disk(z, args.b, cfg.quad_tol, budget=cfg.eval_budget)
    lhs, rhs = za.jensen_check(fn, [], args.radius, args.samples)
    print(f"lhs (log|f(0)|)        = {_fmt(lhs)}")
    print(f"rhs (circle average)   = {_fmt(rhs)}")
    print(f"|lhs - rhs|            = {abs(lhs - rhs):.3e}")
    return 0


def _cmd_rouche(args, cfg: AuditConfig) -> int:
    lam = args.lam
    if lam is None:
        lam = za.lambda_choice(args.theta_abs, args.epsilon, args.nu)
    result = za.rouche_scan(
        args.tau,
        lam,
        args.epsilon,
        zero_tol=cfg.zero_tol,
        quad_tol=min(cfg.quad_tol, 1e-10),
        pole_tol=cfg.pole_tol,
        exclusion_tol=cfg.exclusion_tol,
        boundary_min_modulus=cfg.boundary_min_modulus,
        density=cfg.boundary_density,
        budget=cfg.eval_budget,
    )
    print(f"tau (after genericity shift) = {_fmt(result.tau)}")
    print(f"lambda = {_fmt(result.lam)}, epsilon = {_fmt(result.epsilon)}")
    print(f"neutralized zeros = {[round(b, 6) for b in result.zeros]}")
    print(f"boundary samples = {result.boundary_samples}")
    print(f"min_margin = {result.min_margin:.6e} at omega = {result.argmin_omega}")
    print(f"min |f| away from zeros = {result.min_f_abs:.6e} at omega = {result.argmin_f_omega}")
    return 0


def _cmd_audit(args, cfg: AuditConfig) -> int:
    report = claim_audit.run_audit(cfg)
    if cfg.output_format == "csv":
        payload = "\n".join(claim_audit.report_to_lines(report)) + "\n"
    else:
        payload = claim_audit.report_to_json(report) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)
    print(f"\nconfig digest: {report.config_digest[:16]}...", file=sys.stderr)
    print("verdict totals:", file=sys.stderr)
    for verdict in ("PASS", "FAIL", "NOT_NUMERIC", "SKIPPED"):
        print(f"  {verdict:<12} {report.totals.get(verdict, 0)}", file=sys.stderr)
    for r in report.claims:
        if r.verdict == "FAIL":
            print(f"  FAIL {r.id}: {r.note}", file=sys.stderr)
    return 1 if report.totals.get("FAIL", 0) else 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _resolve_config(args)
        handler = {
            "eval": _cmd_eval,
            "bounds": _cmd_bounds,
            "map": _cmd_map,
            "zeros": _cmd_zeros,
            "jensen": _cmd_jensen,
            "rouche": _cmd_rouche,
            "audit": _cmd_audit,
        }[args.command]
        return handler(args, cfg)
    except _CliExit as exc:
        if str(exc):
            print(str(exc), file=sys.stderr)
        return exc.code
    except ZetaLabError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return NUMERIC_EXIT


if __name__ == "__main__":
    sys.exit(main())
