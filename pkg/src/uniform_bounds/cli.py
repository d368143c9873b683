"""Command-line interface.

Exit codes are a stable contract:
    0   inconclusive result / valid certificate
    10  nonexistence certified
    11  invalid certificate
    2   usage or input error
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lp as lp_mod
from .report import METHOD_CHOICES, run_check
from .shadow import alpha_i0

# table names duplicated here so `verify` stays import-light (no mpmath)
TABLE_NAMES = (
    "defect12",
    "defect34",
    "asymptotic",
    "shadow3",
    "shadow4",
    "shadow5",
    "improve5",
    "improve4",
)

EXIT_INCONCLUSIVE = 0
EXIT_NONEXISTENT = 10
EXIT_INVALID_CERT = 11
EXIT_USAGE = 2


def _check_text(report) -> str:
    lines = [f"query: n={report.n} k={report.k} q={report.q}", f"best: {report.best}"]
    for e in report.entries:
        verdict = "nonexistent" if e.nonexistent else "inconclusive"
        suffix = f" ({e.reason})" if e.reason else ""
        cert = " [certificate attached]" if e.certificate else ""
        lines.append(f"  {e.method.value:13s} {verdict}{suffix}{cert}")
    return "\n".join(lines) + "\n"


def _check_csv(report) -> str:
    lines = ["method,verdict,reason"]
    for e in report.entries:
        verdict = "nonexistent" if e.nonexistent else "inconclusive"
        reason = (e.reason or "").replace(",", ";")
        lines.append(f"{e.method.value},{verdict},{reason}")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    if args.q < 2 or args.n < 1 or args.k < 0:
        print("invalid input: need q >= 2, n >= 1, k >= 0", file=sys.stderr)
        return EXIT_USAGE
    report = run_check(args.n, args.k, args.q, methods=(args.method,), lp_max_n=args.lp_max_n)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    elif args.format == "csv":
        sys.stdout.write(_check_csv(report))
    else:
        sys.stdout.write(_check_text(report))
    return EXIT_NONEXISTENT if report.best == "nonexistent" else EXIT_INCONCLUSIVE


def cmd_table(args) -> int:
    from .tables import render_table

    text = render_table(args.which, fmt=args.format, m_max=args.m_max)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.certificate, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = lp_mod.verify_certificate_json(doc)
    except lp_mod.CertificateFormatError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if result.ok:
        print("certificate valid")
        return EXIT_INCONCLUSIVE
    print(f"certificate INVALID ({result.failure})")
    return EXIT_INVALID_CERT


def cmd_alpha(args) -> int:
    try:
        value = alpha_i0(args.n, args.q, args.i)
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"{value.numerator}/{value.denominator}")
    return 0


def cmd_theta(args) -> int:
    from .asymptotic import PrecisionExhausted, theta_bound

    if args.q < 2:
        print("invalid input: need q >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        bound = theta_bound(args.q, decimals=args.decimals)
    except (PrecisionExhausted, ValueError) as exc:
        print(f"{exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"theta = {bound.theta_str()}  (certified margin > {float(bound.margin):.3e}, {bound.prec_bits}-bit working precision)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uniform-bounds",
        description="Certified non-existence bounds for k-uniform states in (C^q)^(tensor n)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide one (n, k, q) query")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=METHOD_CHOICES, default="all")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--lp-max-n", type=int, default=lp_mod.DEFAULT_LP_MAX_N,
                   help="size cap for the exact LP (default %(default)s)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", help="regenerate a result table")
    p.add_argument("--which", choices=TABLE_NAMES, required=True)
    p.add_argument("--m-max", type=int, default=None,
                   help="scan depth for the shadow tables (default 200)")
    p.add_argument("--format", choices=("md", "csv"), default="md")
    p.add_argument("--out", default=None, help="write to this file instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="audit a certificate file, solver-free")
    p.add_argument("--certificate", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("alpha", help="print one first-column basis-conversion coefficient")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("theta", help="certified asymptotic rate bound for one q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--decimals", type=int, default=3)
    p.set_defaults(func=cmd_theta)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
