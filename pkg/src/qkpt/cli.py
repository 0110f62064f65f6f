"""Command-line front end.

Exit codes: 0 success, 1 a requested check failed, 2 bad input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize as ser
from .adelic import check_all, representation_failure
from .errors import ExprSyntaxError, InvariantViolation, QKError, UnsupportedDenominator
from .jfun import reconstruct_bigJ, small_j, tau_of_nu
from .localseries import localize, residue_pairing
from .moduli_oracle import equivariant_bigJ_oracle, trace_report
from .parser import parse_input

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("value must be positive")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--deg", type=_positive, default=4, help="truncation degree D of the λ-algebra")
    common.add_argument("--series-order", type=_positive, default=10,
                        help="last exponent kept in local expansions")
    common.add_argument("--max-root-order", type=_positive, default=6,
                        help="largest root-of-unity order allowed in denominators")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = _Parser(prog="qkpt", description="Quantum K-theory of the point, exactly.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("small-j", parents=[common], help="small J-function at nu")
    p.add_argument("--nu", required=True)
    p = sub.add_parser("tau", parents=[common], help="tau(nu) = sum Ψ^k(nu)/k^2")
    p.add_argument("--nu", required=True)
    p = sub.add_parser("reconstruct", parents=[common], help="big J-function value at input t")
    p.add_argument("--t", required=True)
    p.add_argument("--schedule", choices=("all", "lowest"), default="all")
    p = sub.add_parser("check", parents=[common], help="adelic tests on a q-series")
    p.add_argument("--f", required=True, help="expression, JSON file, or - for stdin")
    p = sub.add_parser("oracle", parents=[common], help="fixed-point oracle for inputs t")
    p.add_argument("--t", required=True)
    p.add_argument("--max-n", type=int, choices=(2, 3), default=2)
    p.add_argument("--compare", action="store_true",
                   help="compare with the reconstructed J-function through the same λ-degree")
    p = sub.add_parser("pair", parents=[common], help="residue pairing Ω(f, g)")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p = sub.add_parser("expand", parents=[common], help="Laurent expansion at a root of unity")
    p.add_argument("--f", required=True)
    p.add_argument("--m", type=_positive, default=1)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--vmin", type=int, default=-4)
    return parser


def _read_source(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    path = Path(arg)
    if path.suffix == ".json" or (len(arg) < 4096 and path.is_file()):
        return path.read_text()
    return arg


def _qrat(text: str, args):
    text = text.strip()
    if text.startswith("{"):
        return ser.qrat_from_json(json.loads(text), args.max_root_order)
    return parse_input(text, "qrat", args.deg, args.max_root_order)


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(ser.dumps(payload))
    else:
        print(text)


def _run(args) -> int:
    window = (-4, args.series_order)
    cmd = args.command
    if cmd == "small-j":
        f = small_j(parse_input(args.nu, "sym", args.deg), args.max_root_order)
        _emit(args, ser.qrat_to_json(f), str(f))
    elif cmd == "tau":
        tau = tau_of_nu(parse_input(args.nu, "sym", args.deg))
        _emit(args, ser.sym_to_json(tau), str(tau))
    elif cmd == "reconstruct":
        sol = reconstruct_bigJ(_qrat(_read_source(args.t), args), args.schedule)
        _emit(args, ser.solution_to_json(sol),
              f"nu = {sol.nu}\np = {sol.p}\nf = {sol.f}")
    elif cmd == "check":
        try:
            f = _qrat(_read_source(args.f), args)
        except UnsupportedDenominator as exc:
            report = representation_failure(str(exc))
        else:
            report = check_all(f, args.max_root_order, window)
        lines = [f"test i: {'pass' if report.test_i else 'fail'}"
                 + (f" (tau = {report.tau})" if report.tau is not None else "")]
        lines += [f"test ii at zeta_{m}^{j}: {'pass' if ok else 'fail'}"
                  for (m, j), ok in sorted(report.test_ii.items())]
        lines.append(f"test iii: {'pass' if report.test_iii else 'fail'}")
        lines.append(f"overall: {'pass' if report.overall else 'fail'}")
        lines += [f"  {k}: {v}" for k, v in sorted(report.reasons.items())]
        _emit(args, ser.report_to_json(report), "\n".join(lines))
        return EXIT_OK if report.overall else EXIT_FAIL
    elif cmd == "oracle":
        t = _qrat(_read_source(args.t), args)
        reports = [trace_report(n, t) for n in range(2, args.max_n + 1)]
        payload = {"reports": [ser.trace_to_json(r) for r in reports]}
        oracle = equivariant_bigJ_oracle(t, args.max_n)
        payload["oracle"] = ser.qrat_to_json(oracle)
        lines = [f"n = {r.n}: average {r.average}" for r in reports] + [f"oracle: {oracle}"]
        verdict = True
        if args.compare:
            n = args.max_n
            theorem = reconstruct_bigJ(t).f.truncate(n)
            verdict = oracle.truncate(n) == theorem
            payload["theorem"] = ser.qrat_to_json(theorem)
            payload["equal"] = verdict
            lines += [f"theorem: {theorem}", f"equal: {verdict}"]
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK if verdict else EXIT_FAIL
    elif cmd == "pair":
        val = residue_pairing(_qrat(_read_source(args.f), args), _qrat(_read_source(args.g), args))
        _emit(args, ser.sym_to_json(val), str(val))
    elif cmd == "expand":
        s = localize(_qrat(_read_source(args.f), args), args.m, args.j, (args.vmin, args.series_order))
        _emit(args, ser.series_to_json(s), str(s))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.pos}^", file=sys.stderr)
        return EXIT_INPUT
    except (QKError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
