"""Command-line surface for the exact stability toolkit.

Every subcommand is deterministic: identical flags (and seeds, where
randomness is involved) produce byte-identical output.  Exact rationals
are printed as "numerator/denominator" with no decimal truncation; reals
are printed with 12 significant digits.  Exit codes: 0 success, 1
verification failure, 2 invalid input.  All failures emit a one-line
machine-parsable reason on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import numeric, p_energy, radial_map, stability

SYMBOLIC_COMPONENT_CAP = 1296


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _fmt_rat(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _fmt_real(x: float) -> str:
    return f"{x:.12g}"


def _fail(reason: str) -> None:
    print(f"error: {reason}", file=sys.stderr)


def _verdict_json(k: int, ell: int, m: int, verdict) -> dict:
    obj = {"k": k, "ell": ell, "m": m, "regime": verdict.regime.value}
    if verdict.witness is not None:
        obj["q"] = _fmt_rat(verdict.witness)
    obj["rule"] = verdict.rule
    return obj


def _threshold_json(record) -> dict:
    return {"k": record.k, "ell": record.ell,
            "m_star": record.m_star, "cap": record.scan_cap}


# -- subcommand handlers ----------------------------------------------------

def _cmd_q(args) -> int:
    print(_fmt_rat(stability.q_poly(args.k, args.ell, args.m)))
    return 0


def _cmd_classify(args) -> int:
    verdict = stability.classify_k(args.k, args.ell, args.m)
    if args.format == "json":
        print(json.dumps(_verdict_json(args.k, args.ell, args.m, verdict)))
    else:
        regime = verdict.regime.value.upper()
        if verdict.witness is None:
            print(f"{regime} rule={verdict.rule}")
        else:
            print(f"{regime} Q={_fmt_rat(verdict.witness)} rule={verdict.rule}")
    return 0


def _cmd_threshold(args) -> int:
    record = stability.threshold_m(args.k, args.ell)
    if args.format == "json":
        print(json.dumps(_threshold_json(record)))
    else:
        print(f"k={record.k} ell={record.ell} m_star={record.m_star} cap={record.scan_cap}")
    return 0


def _cmd_table(args) -> int:
    records = stability.table(args.kmax, args.ellmax)
    if args.format == "csv":
        print("k,ell,m_star")
        for rec in records:
            print(f"{rec.k},{rec.ell},{rec.m_star}")
    elif args.format == "json":
        print(json.dumps([_threshold_json(rec) for rec in records], indent=2))
    else:
        width = max(len(str(rec.m_star)) for rec in records) + 1
        header = "k\\ell" + "".join(f"{ell:>{width}}" for ell in range(1, args.ellmax + 1))
        print(header)
        for k in range(1, args.kmax + 1):
            row = records[(k - 1) * args.ellmax:k * args.ellmax]
            print(f"{k:<5}" + "".join(f"{rec.m_star:>{width}}" for rec in row))
    return 0


def _cmd_classify_p(args) -> int:
    params = p_energy.PParams(args.ell, args.m, args.p)
    verdict = p_energy.classify_p(params)
    ratio = _fmt_rat(verdict.witness)
    if args.format == "json":
        print(json.dumps({"ell": args.ell, "m": args.m, "p": _fmt_rat(args.p),
                          "regime": verdict.regime.value, "ratio": ratio,
                          "rule": verdict.rule}))
    else:
        print(f"{verdict.regime.value.upper()} ratio={ratio} rule={verdict.rule}")
    return 0


def _cmd_witness(args) -> int:
    params = p_energy.PParams(args.ell, args.m, args.p)
    witness = p_energy.instability_witness(params)
    lines = ["r,v"]
    lines.extend(f"{_fmt_real(r)},{_fmt_real(v)}" for r, v in witness.samples)
    lines.append(f"# hessian={_fmt_real(witness.hessian_value)} "
                 f"mu={_fmt_real(witness.mu)} eps={_fmt_real(witness.epsilon)} "
                 f"r0={_fmt_real(witness.r0)}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_hardy_check(args) -> int:
    report = p_energy.radial_hardy_check(args.m, args.p, args.trials, args.seed)
    quotient = _fmt_real(report.min_quotient)
    status = "pass" if report.passed else "fail"
    print(f"m={report.m} p={_fmt_rat(report.p)} trials={report.trials} "
          f"seed={report.seed} failures={report.failures} "
          f"min_quotient={quotient} bound={_fmt_real(report.hardy_bound)} "
          f"status={status}")
    if not report.passed:
        _fail(f"hardy-check m={args.m} p={args.p} failures={report.failures}")
        return 1
    return 0


def _cmd_appendix_check(args) -> int:
    report = stability.appendix_verify()
    print(f"expansion_scale={report.scale}")
    print(f"coefficients_match={'yes' if report.coefficients_match else 'no'}")
    print(f"positivity_method={report.positivity_method}")
    print(f"positive={'yes' if report.positive else 'no'}")
    print(f"value_at_(1,1)={_fmt_rat(report.value_at_one_one)}")
    for exps, expected, actual in report.mismatches:
        print(f"mismatch ell^{exps[0]}*s^{exps[1]}: "
              f"expected={_fmt_rat(expected)} actual={_fmt_rat(actual)}")
    if not report.passed:
        _fail("appendix-check coefficients_match="
              f"{report.coefficients_match} positive={report.positive}")
        return 1
    return 0


def _cmd_verify_map(args) -> int:
    components = args.m ** args.ell
    if components > SYMBOLIC_COMPONENT_CAP:
        print(f"warning: {components} components exceed the desk-scale cap "
              f"{SYMBOLIC_COMPONENT_CAP}; this may take a while", file=sys.stderr)
    tensor = radial_map.build_radial_map(args.ell, args.m)
    checks = [
        ("unit_norm", lambda: radial_map.verify_unit_norm(tensor)),
        ("tangency", lambda: radial_map.verify_tangency(tensor)),
        ("energy_density", lambda: radial_map.verify_energy_density(tensor)),
    ]
    for k in range(1, args.kmax + 1):
        checks.append((f"delta_power_k{k}",
                       lambda k=k: radial_map.verify_delta_power(tensor, k)))
        checks.append((f"k_harmonic_k{k}",
                       lambda k=k: radial_map.verify_k_harmonic(tensor, k)))
    checks.extend(_numeric_checks(args.ell, args.m, args.seed))

    failures = 0
    for name, check in checks:
        ok = bool(check())
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            failures += 1
            _fail(f"verify-map check={name} ell={args.ell} m={args.m}")
    print(f"checks={len(checks)} failures={failures}")
    return 1 if failures else 0


def _numeric_checks(ell: int, m: int, seed: int) -> list:
    points = numeric.random_points(m, 20, seed)
    scale = math.sqrt(float(radial_map.build_radial_map(ell, m).scale_sq))
    symbolic = radial_map.build_radial_map(ell, m).components
    lam = ell * (ell + m - 2)

    def norm_check() -> bool:
        return all(abs(float(np.linalg.norm(numeric.eval_map(ell, m, x))) - 1.0) < 1e-10
                   for x in points)

    def agreement_check() -> bool:
        for x in points:
            num = numeric.eval_map(ell, m, x)
            sym = np.array([c.evaluate(x) for c in symbolic]) * scale
            if float(np.max(np.abs(num - sym))) >= 1e-10:
                return False
        return True

    def laplacian_check() -> bool:
        for x in points[:5]:
            r2 = float(np.dot(x, x))
            h = math.sqrt(r2) * 1e-4
            fd = numeric.fd_laplacian(ell, m, x, h)
            exact = -lam / r2 * numeric.eval_map(ell, m, x)
            if float(np.max(np.abs(fd - exact))) >= 1e-5 * lam / r2:
                return False
        return True

    def density_check() -> bool:
        for x in points[:5]:
            r2 = float(np.dot(x, x))
            h = math.sqrt(r2) * 1e-4
            fd = numeric.fd_energy_density(ell, m, x, h)
            if abs(fd - lam / r2) >= 1e-5 * lam / r2:
                return False
        return True

    return [("numeric_norm", norm_check),
            ("numeric_agreement", agreement_check),
            ("numeric_fd_laplacian", laplacian_check),
            ("numeric_fd_energy_density", density_check)]


# -- parser -----------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equator-stability",
        description="Exact stability analysis of generalized equator maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("q", help="print the exact stability quantity Q_k^ell(m)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_cmd_q)

    p = sub.add_parser("classify", help="classify for the order-k energy")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("threshold", help="least stable dimension for (k, ell)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_threshold)

    p = sub.add_parser("table", help="grid of threshold dimensions")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--ellmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "text"), default="text")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("classify-p", help="classify for the p-energy")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=_rat, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_classify_p)

    p = sub.add_parser("witness", help="explicit negative direction for the p-energy")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=_rat, required=True)
    p.add_argument("--out", default=None, help="write the CSV here instead of stdout")
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("hardy-check", help="seeded quadrature check of the radial Hardy inequality")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=_rat, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=_cmd_hardy_check)

    p = sub.add_parser("appendix-check",
                       help="verify the factor-difference expansion and its positivity")
    p.set_defaults(handler=_cmd_appendix_check)

    p = sub.add_parser("verify-map", help="run all symbolic and numeric map checks")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_verify_map)

    return parser


def run(argv) -> int:
    """Dispatch a command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except stability.InternalInconsistencyError as exc:
        _fail(f"internal inconsistency: {exc}")
        return 1
    except radial_map.MapConstructionError as exc:
        _fail(f"construction failure: {exc}")
        return 1
    except ArithmeticError as exc:
        _fail(f"numerical verification failure: {exc}")
        return 1
    except (ValueError, OSError) as exc:
        _fail(str(exc))
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
