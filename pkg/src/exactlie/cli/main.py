"""``exactlie`` command line.

    exactlie verify <suite> [--seed S] [--trials T] [--format json|text] ...
    exactlie compute <expr>
    exactlie info <algebra-file-or-bundled-name>

Exit codes: 0 pass, 1 fail, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..algebra import center_basis, derived_ideal_basis, verify_lie
from ..library import load_algebra
from ..matrices import Matrix, det, trace
from ..poly import Polynomial, homogeneous_parts
from ..scalars import Padic, Quaternion, UnsupportedOperation, quat_norm_sq
from .parse import ParseError, format_value, parse_expr
from .suites import SUITES, SuiteReport, SuiteSpec, UsageError, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def emit_report(r: SuiteReport, fmt: str = "json", stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(dumps(r.to_json()) + "\n")
        return
    status = "PASS" if r.passed else "FAIL"
    params = ", ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
    lines = [f"{r.suite}: {status} ({params}) in {r.timing:.3f}s"]
    for label, c in sorted(r.checks.items()):
        lines.append(f"  {label}: {c['run'] - c['failed']}/{c['run']} ok")
    if not r.passed:
        for w in sorted(r.witnesses, key=dumps):
            lines.append(f"  witness: {dumps(w)}")
    stream.write("\n".join(lines) + "\n")


def describe(value) -> dict:
    out = {"value": format_value(value)}
    if isinstance(value, Matrix):
        out["type"] = "matrix"
        out["ring"] = str(value.ring)
        out["trace"] = format_value(trace(value))
        try:
            out["det"] = format_value(det(value))
        except UnsupportedOperation as exc:
            out["det"] = f"unsupported: {exc}"
    elif isinstance(value, Padic):
        out["type"] = "padic"
        out["valuation"] = "inf" if value.v is None else value.v
        out["abs"] = str(value.abs())
    elif isinstance(value, Quaternion):
        out["type"] = "quaternion"
        out["norm_sq"] = str(quat_norm_sq(value))
        if value != Quaternion(0):
            out["inverse"] = str(value.inverse())
    elif isinstance(value, Polynomial):
        out["type"] = "polynomial"
        out["degree"] = value.degree
        out["homogeneous"] = {str(k): format_value(v) for k, v in homogeneous_parts(value).items()}
    else:
        out["type"] = "rational"
    return out


def algebra_info(ref: str) -> dict:
    sc = load_algebra(ref)
    rep = verify_lie(sc)
    out = {
        "name": sc.name,
        "field": str(sc.field),
        "dim": sc.dim,
        "basis": list(sc.basis),
        "lie": rep.passed,
    }
    if rep.passed:
        out["center_dim"] = len(center_basis(sc))
        out["derived_dim"] = len(derived_ideal_basis(sc))
    else:
        out["witness"] = rep.witnesses
    return out


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="exactlie", description="Exact Lie-algebra and exponential identity checker.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", help=", ".join(sorted(SUITES)))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--prime", type=int)
    v.add_argument("--precision", type=int)
    v.add_argument("--truncation", type=int)
    v.add_argument("--dim", type=int)
    v.add_argument("--algebra", help="structure-constant file or bundled name")
    v.add_argument("--mode", choices=("float", "series", "padic", "all"), help="det-exp-tr only")

    c = sub.add_parser("compute", help="parse a literal and print its canonical form")
    c.add_argument("expr")
    c.add_argument("--format", choices=("json", "text"), default="json")

    i = sub.add_parser("info", help="summarize a structure-constant file")
    i.add_argument("algebra")
    i.add_argument("--format", choices=("json", "text"), default="json")
    return ap


def _print(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(dumps(obj))
    else:
        for k in sorted(obj):
            print(f"{k}: {obj[k]}")


def _protect_literal(argv: list[str]) -> list[str]:
    # "compute -6/4": argparse would read the literal as an option
    if len(argv) >= 2 and argv[0] == "compute" and argv[1][:1] == "-" and argv[1][1:2].isdigit():
        return [argv[0], *argv[2:], "--", argv[1]]
    return argv


def main(argv=None) -> int:
    ap = _parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = ap.parse_args(_protect_literal(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        if args.command == "verify":
            spec = SuiteSpec(
                args.suite,
                seed=args.seed,
                trials=args.trials,
                dim=args.dim,
                prime=args.prime,
                precision=args.precision,
                truncation=args.truncation,
                algebra=args.algebra,
                mode=args.mode,
            )
            report = run_suite(spec)
            emit_report(report, args.format)
            return EXIT_PASS if report.passed else EXIT_FAIL
        if args.command == "compute":
            _print(describe(parse_expr(args.expr)), args.format)
            return EXIT_PASS
        _print(algebra_info(args.algebra), args.format)
        return EXIT_PASS
    except (UsageError, ParseError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"exactlie: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
