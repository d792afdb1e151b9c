"""Command line interface: expression commands and verification suites.

Every command emits a JSON report (``--text`` switches to aligned
lines) carrying a top-level ``"schema": 1`` field.  Exit codes: 0 on
success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import chern, galois, gluing, hopf, verify
from .exprs import ExprError, evaluate, evaluate_algebra, parse
from .scalars import ParamScalar
from .s3core import AlgElement, mul, winding_decompose

SCHEMA = 1


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") \
            from exc


def _default_seed() -> int:
    env = os.environ.get("QHOPF_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return 7


def _build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", dest="as_json", action="store_true",
                        default=True, help="emit JSON (default)")
    output.add_argument("--text", dest="as_json", action="store_false",
                        help="emit aligned text instead of JSON")
    ap = argparse.ArgumentParser(
        prog="qhopf",
        parents=[output],
        description="Exact symbolic engine for the glued quantum 3-sphere "
                    "and its circle fibration, with a numeric oracle.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, helptext in [
            ("normalize", "normal form of a *-algebra expression"),
            ("star", "adjoint of an expression"),
            ("winding", "split an expression by circle weight"),
            ("coaction", "right coaction applied to an expression"),
            ("gluing-check", "verify the two-chart boundary matching"),
            ("trace", "exact trace of a coinvariant expression")]:
        p = sub.add_parser(name, help=helptext, parents=[output])
        p.add_argument("expression")

    p = sub.add_parser("mul", help="product of two expressions",
                       parents=[output])
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("connection", help="strong connection value on u^k",
                       parents=[output])
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("idempotent", help="line-module idempotent matrix",
                       parents=[output])
    p.add_argument("--mu", type=int, required=True)

    p = sub.add_parser("pairing", help="trace paired with an idempotent",
                       parents=[output])
    p.add_argument("--mu", type=int, required=True)

    p = sub.add_parser("verify", help="run a verification suite",
                       parents=[output])
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2),
                   help="value of p (rational or decimal; default 1/2)")
    p.add_argument("--q", type=_fraction, default=Fraction(1, 3),
                   help="value of q (default 1/3)")
    p.add_argument("--N", type=int, default=300,
                   help="truncation dimension for numeric checks")
    p.add_argument("--seed", type=int, default=None,
                   help="random seed (default: QHOPF_SEED or 7)")
    return ap


def _element_payload(x: AlgElement) -> dict:
    return {"text": x.text(), "terms": x.json_terms()}


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=False))
        return
    for key, value in report.items():
        if key in ("schema",):
            continue
        if key == "reports":
            for suite in value:
                print(f"suite {suite['suite']}: "
                      f"{'PASS' if suite['pass'] else 'FAIL'} "
                      f"({suite['elapsed_s']}s)")
                for c in suite["checks"]:
                    status = "PASS" if c["pass"] else "FAIL"
                    extra = {k: v for k, v in c.items()
                             if k not in ("check_name", "pass")}
                    tail = f"  {extra}" if extra else ""
                    print(f"  {status}  {c['check_name']}{tail}")
        elif isinstance(value, (dict, list)):
            print(f"{key}: {json.dumps(value)}")
        else:
            print(f"{key}: {value}")


def run_command(args: argparse.Namespace) -> tuple[dict, int]:
    """Execute one parsed command; returns (report, exit_code)."""
    cmd = args.command
    report: dict = {"schema": SCHEMA, "command": cmd}

    if cmd == "normalize":
        x = evaluate_algebra(args.expression)
        report["result"] = _element_payload(x)
        return report, 0

    if cmd == "mul":
        x = evaluate_algebra(args.left)
        y = evaluate_algebra(args.right)
        report["result"] = _element_payload(mul(x, y))
        return report, 0

    if cmd == "star":
        val = evaluate(args.expression)
        if isinstance(val, ParamScalar):
            report["result"] = {"text": str(val)}
        elif isinstance(val, AlgElement):
            report["result"] = _element_payload(val.star())
        else:
            report["result"] = {"text": val.star().text(),
                                "terms": val.star().json_terms()}
        return report, 0

    if cmd == "winding":
        x = evaluate_algebra(args.expression)
        report["result"] = {
            str(w): _element_payload(part)
            for w, part in winding_decompose(x).items()}
        return report, 0

    if cmd == "coaction":
        x = evaluate_algebra(args.expression)
        cot = hopf.coaction(x)
        report["result"] = {"text": cot.text(), "terms": cot.json_terms()}
        return report, 0

    if cmd == "gluing-check":
        x = evaluate_algebra(args.expression)
        ok = gluing.gluing_check(x)
        report["pass"] = ok
        return report, 0 if ok else 1

    if cmd == "trace":
        x = evaluate_algebra(args.expression)
        val = chern.trace_functional(x)
        report["result"] = {"value": str(val), "integer": val.is_integer()}
        return report, 0

    if cmd == "connection":
        ell = galois.strong_connection(args.k)
        report["k"] = args.k
        report["result"] = ell.json_terms()
        return report, 0

    if cmd == "idempotent":
        e = chern.idempotent(args.mu)
        report["mu"] = args.mu
        report["size"] = e.shape[0]
        report["entries"] = e.json_entries()
        report["text"] = [[el.text() for el in row] for row in e.entries]
        return report, 0

    if cmd == "pairing":
        val = chern.pairing(args.mu)
        report["mu"] = args.mu
        report["value"] = str(val)
        report["integer"] = val.is_integer()
        return report, 0

    if cmd == "verify":
        seed = args.seed if args.seed is not None else _default_seed()
        p_val, q_val = float(args.p), float(args.q)
        if args.suite == "all":
            reports = verify.suite_all(p_val=p_val, q_val=q_val, N=args.N,
                                       seed=seed)
        elif args.suite == "algebra":
            reports = [verify.suite_algebra(seed=seed)]
        elif args.suite == "gluing":
            reports = [verify.suite_gluing(seed=seed)]
        elif args.suite == "galois":
            reports = [verify.suite_galois()]
        elif args.suite == "chern":
            reports = [verify.suite_chern(p_val=p_val, q_val=q_val, N=args.N,
                                          seed=seed)]
        elif args.suite == "numeric":
            reports = [verify.suite_numeric(p_val=p_val, q_val=q_val,
                                            N=args.N, seed=seed)]
        else:
            reports = [verify.suite_classical(seed=seed)]
        ok = all(r["pass"] for r in reports)
        report["suite"] = args.suite
        report["params"] = {"p": str(args.p), "q": str(args.q), "N": args.N,
                            "seed": seed}
        report["reports"] = reports
        report["pass"] = ok
        if not ok:
            report["failures"] = [
                c["check_name"] for r in reports for c in r["checks"]
                if not c["pass"]]
        return report, 0 if ok else 1

    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    try:
        report, code = run_command(args)
    except (ExprError, ValueError, ZeroDivisionError) as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc)}),
              file=sys.stderr)
        return 2
    _emit(report, args.as_json)
    return code


if __name__ == "__main__":
    sys.exit(main())
