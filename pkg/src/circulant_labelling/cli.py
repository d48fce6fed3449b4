"""Command-line entry point.

Exit codes: 0 ok, 1 verification false, 2 usage or parse error,
3 internal construction bug, 4 oracle timeout.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .core import CirculantPowerGraph, ConstructionError, DomainError, is_s_exception, s_formula, tvs_formula
from .serialize import DocumentError, dumps, loads, to_document, to_dot
from .strength import construct_s_result
from .tvs import construct_tvs_result
from .verify import OracleBudget, certify, exact_strength, verify

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUG, EXIT_TIMEOUT = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 already; keep the stderr text short
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build(n: int, k: int, mode: str):
    if mode == "tvs":
        res = construct_tvs_result(n, k)
        return res.weighting, res.case, tvs_formula(n, k)
    res = construct_s_result(n, k)
    return res.weighting, res.case, s_formula(n, k)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    w, case, expected = _build(args.n, args.k, args.mode)
    report = verify(w, expected)
    if not report.ok:
        print(f"construction failed verification: {json.dumps(report.to_dict())}", file=sys.stderr)
        return EXIT_BUG
    text = to_dot(w) if args.format == "dot" else dumps(to_document(w, case))
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        print(f"cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        w = loads(text)
    except DocumentError as exc:
        print(f"malformed document: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = verify(w, args.expect_max)
    print(json.dumps(report.to_dict()))
    if not report.matches_expected:
        print(f"max label {report.max_label} != expected {args.expect_max}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_table(args) -> int:
    if args.n_from > args.n_to:
        print("--n-from must not exceed --n-to", file=sys.stderr)
        return EXIT_USAGE
    if args.k < 2 or args.n_from < 2 * args.k + 1:
        print(f"need k >= 2 and n >= 2k+1 = {2 * args.k + 1}", file=sys.stderr)
        return EXIT_USAGE
    modes = ["s", "tvs"] if args.mode == "both" else [args.mode]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "k", "mode", "formula", "max", "verified", "exception"])
    status = EXIT_OK
    for n in range(args.n_from, args.n_to + 1):
        for mode in modes:
            w, _, formula = _build(n, args.k, mode)
            report = verify(w, formula)
            if not report.ok:
                status = EXIT_FALSE
            exception = mode == "s" and is_s_exception(n, args.k)
            writer.writerow([n, args.k, mode, formula, report.max_label,
                             str(report.ok).lower(), str(exception).lower()])
    return status


def _budget(args) -> OracleBudget:
    return OracleBudget(max_nodes=args.max_nodes, time_limit=args.timeout)


def cmd_oracle(args) -> int:
    graph = CirculantPowerGraph(args.n, args.k)
    result = exact_strength(graph, args.mode, _budget(args))
    out = {"n": args.n, "k": args.k, "mode": args.mode, **result.to_dict(), "certificate": "oracle"}
    print(json.dumps(out))
    return EXIT_TIMEOUT if result.timed_out else EXIT_OK


def cmd_certify(args) -> int:
    cert = certify(args.n, args.k, args.mode)
    if cert is None:
        print("construction did not verify; no certificate", file=sys.stderr)
        return EXIT_FALSE
    print(json.dumps(cert))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="circulant-labelling", description="Optimal irregular weightings of powers of cycles.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build and verify a weighting")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["s", "tvs"], required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a JSON weighting document")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--expect-max", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="CSV of formula values against verified constructions")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--mode", choices=["s", "tvs", "both"], default="both")
    p.set_defaults(func=cmd_table)

    for name, func, text in (("oracle", cmd_oracle, "exhaustive strength search"),
                             ("certify", cmd_certify, "optimality certificate")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--mode", choices=["s", "tvs"], required=True)
        p.add_argument("--max-nodes", type=int, default=OracleBudget.max_nodes)
        p.add_argument("--timeout", type=float, default=OracleBudget.time_limit)
        p.set_defaults(func=func)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"internal construction error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
