"""Command line entry point ``conehyp``.

Exit codes: 0 certificate pass, 2 certified fail, 3 resample budget
exhausted or inconclusive, 1 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .. import certify
from ..certify import Certificate, assemble_certificate, deterministic_view
from ..elimination import discriminant, sylvester_resultant
from ..numeric import binary_roots_precise
from ..polycore import evaluate, squarefree_part
from . import io
from .generate import DEFAULT_T, GenConfig, build_family, remark_pair
from .remark import remark_structure_report, remark_surface

EXIT_PASS, EXIT_USAGE, EXIT_FAIL, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _cert_exit(cert: Certificate) -> int:
    if cert.overall == "pass":
        return EXIT_PASS
    verdicts = {c.verdict for c in cert.checks}
    return EXIT_INCONCLUSIVE if "inconclusive" in verdicts and "fail" not in verdicts else EXIT_FAIL


def numeric_summaries(fam, cert: Certificate, line_samples: int = 200, fiber_samples: int = 10_000) -> dict:
    """Advisory numeric reports, with float diagnostics stripped for determinism."""
    c = fam.cones
    out = {
        "fiber_sweep_F1": certify.numeric_fiber_sweep(c.f1, samples=fiber_samples, targets=certify.special_fiber_targets(c.f1)),
        "fiber_sweep_F2": certify.numeric_fiber_sweep(c.f2, samples=fiber_samples, targets=certify.special_fiber_targets(c.f2)),
    }
    if cert.overall == "pass":
        gamma = certify.gamma_eliminate(fam)
        targets = binary_roots_precise(squarefree_part(gamma.D1 * gamma.D2))
        out["line_gamma"] = certify.numeric_line_gamma_check(fam, p_samples=line_samples, targets=targets, certificate=cert)
        out["R_roots"] = certify.numeric_root_count(gamma.R)
    return {k: deterministic_view(v) for k, v in out.items()}


def cmd_construct(args) -> int:
    cfg = GenConfig(
        m=args.m, n=args.n, coeff_bound=args.coeff_bound, seed=args.seed, max_resamples=args.max_resamples, t=args.t
    )
    result = build_family(cfg, workers=args.workers)
    cert = result.certificate
    if not args.no_numeric and not result.exhausted:
        cert.numeric = numeric_summaries(result.family, cert)
    out = Path(args.out)
    io.write_family(
        result.family,
        out,
        {"seed": cfg.seed, "coeff_bound": cfg.coeff_bound, "resamples": result.resamples, "exhausted": result.exhausted},
    )
    io.write_certificate(cert, out / "certificate.json")
    status = "exhausted" if result.exhausted else cert.overall
    print(f"{status}: {result.resamples} resamples, certificate at {out / 'certificate.json'}")
    if result.exhausted:
        print(f"last failing check: {cert.first_failure}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    return _cert_exit(cert)


def cmd_verify(args) -> int:
    f1, f2, finf = io.read_form(args.f1), io.read_form(args.f2), io.read_form(args.finf)
    fam = certify.DeformationFamily(certify.ConePair(f1, f2), finf)
    cert = assemble_certificate(fam, seed=args.seed, workers=args.workers)
    if args.numeric:
        cert.numeric = numeric_summaries(fam, cert)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    io.write_certificate(cert, out)
    failure = f" (first failure: {cert.first_failure})" if cert.first_failure else ""
    print(f"{cert.overall}{failure}")
    return _cert_exit(cert)


def cmd_remark(args) -> int:
    if args.f and args.g:
        f, g = io.read_form(args.f), io.read_form(args.g)
    elif args.f or args.g:
        raise UsageError("--f and --g must be given together")
    else:
        f, g = remark_pair(GenConfig(m=args.m, n=args.n, coeff_bound=args.coeff_bound, seed=args.seed, mode="remark"))
    surface = remark_surface(f, g)
    report = remark_structure_report(surface, seed=args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    io.write_form(f, out / "f.poly")
    io.write_form(g, out / "g.poly")
    io.write_form(surface.r, out / "r.poly")
    io.write_json(report, out / "report.json")
    ok = report["multiplicities_ok"] and report["lines_ok"]
    print(
        f"deg r = {report['deg_r']}, singular points at A/B: {report['singular_points_found']}, "
        f"multiplicities {'ok' if report['multiplicities_ok'] else 'MISMATCH'}, lines {'ok' if report['lines_ok'] else 'MISMATCH'}"
    )
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_sample(args) -> int:
    fam = io.read_family(args.family)
    cert_path = Path(args.family) / "certificate.json"
    cert = io.read_certificate(cert_path) if cert_path.exists() else assemble_certificate(fam)
    c = fam.cones
    report = {
        "fiber_sweep_F1": certify.numeric_fiber_sweep(
            c.f1, samples=args.fiber_samples, cluster_eps=args.cluster_eps, targets=certify.special_fiber_targets(c.f1)
        ),
        "fiber_sweep_F2": certify.numeric_fiber_sweep(
            c.f2, samples=args.fiber_samples, cluster_eps=args.cluster_eps, targets=certify.special_fiber_targets(c.f2)
        ),
        "line_gamma": certify.numeric_line_gamma_check(
            fam, p_samples=args.samples, eps=args.eps, cluster_eps=args.cluster_eps, certificate=cert
        ),
    }
    out = Path(args.out) if args.out else Path(args.family) / "sample_report.json"
    io.write_json(report, out)
    mins = [report["fiber_sweep_F1"]["min_distinct"], report["fiber_sweep_F2"]["min_distinct"], report["line_gamma"]["min_count"]]
    print(f"fiber minima {mins[0]}, {mins[1]}; line minimum {mins[2]}; report at {out}")
    return EXIT_PASS if all(v is not None and v >= 3 for v in mins) else EXIT_FAIL


def _point(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad point {text!r}") from None


def _emit_form(form, args, degree=None) -> None:
    if args.out:
        io.write_form(form, args.out, degree)
    else:
        sys.stdout.write(io.format_form(form, degree))


def cmd_poly(args) -> int:
    if args.op == "eval":
        print(evaluate(io.read_form(args.form), args.point))
    elif args.op == "res":
        f, g = io.read_form(args.f), io.read_form(args.g)
        _emit_form(sylvester_resultant(f, g, args.var), args, f.degree * g.degree)
    else:
        f = io.read_form(args.form)
        _emit_form(discriminant(f, args.var), args, 2 * f.degree - 2)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="conehyp", description="Certify deformations of unions of two cones.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="sample a family and certify it, resampling failures")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--seed", type=_seed, required=True)
    c.add_argument("--coeff-bound", type=int, default=10)
    c.add_argument("--t", type=_fraction, nargs="?", const=DEFAULT_T, default=None,
                   help="emit the member at this (uncertified) parameter; bare --t uses 1/1000")
    c.add_argument("--max-resamples", type=int, default=64)
    c.add_argument("--workers", "--threads", type=int, default=1, dest="workers")
    c.add_argument("--no-numeric", action="store_true", help="skip the advisory numeric summaries")
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="certify given polynomial files")
    v.add_argument("--f1", required=True)
    v.add_argument("--f2", required=True)
    v.add_argument("--finf", required=True)
    v.add_argument("--seed", type=_seed, default=0, help="seed for Macaulay coordinate changes")
    v.add_argument("--workers", "--threads", type=int, default=1, dest="workers")
    v.add_argument("--numeric", action="store_true", help="attach numeric summaries")
    v.add_argument("--out", required=True)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("remark", help="resultant projection of two cones in P^4")
    r.add_argument("--f")
    r.add_argument("--g")
    r.add_argument("--m", type=int, default=4)
    r.add_argument("--n", type=int, default=2)
    r.add_argument("--seed", type=_seed, default=0)
    r.add_argument("--coeff-bound", type=int, default=10)
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_remark)

    s = sub.add_parser("sample", help="numeric cross-checks of a family directory")
    s.add_argument("--family", required=True)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--eps", type=float, default=1e-8)
    s.add_argument("--cluster-eps", type=float, default=1e-6)
    s.add_argument("--fiber-samples", type=int, default=10_000)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sample)

    pl = sub.add_parser("poly", help="polynomial utilities")
    ops = pl.add_subparsers(dest="op", required=True)
    e = ops.add_parser("eval")
    e.add_argument("form")
    e.add_argument("--point", type=_point, required=True, help="comma separated rationals")
    rs = ops.add_parser("res")
    rs.add_argument("f")
    rs.add_argument("g")
    rs.add_argument("--var", type=int, required=True)
    rs.add_argument("--out")
    d = ops.add_parser("disc")
    d.add_argument("form")
    d.add_argument("--var", type=int, required=True)
    d.add_argument("--out")
    pl.set_defaults(func=cmd_poly)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except (UsageError, ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
