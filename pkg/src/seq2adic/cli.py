"""Command-line front end.

    seq2adic gen     --p 3 --q 5 [--format bits|hex|plain|json]
    seq2adic analyze --p 3 --q 29 [--format plain|json]
    seq2adic verify  --p 13 --q 3 [--format plain|json]
    seq2adic sweep   --max-n 1200 [--out FILE] [--jobs N] [--format csv|json|plain]

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Any, Optional, Sequence

from .adic import ComplexityReport, analyze
from .numtheory import InvalidPairError, PrimePair
from .sequence import generate, ones_count
from .verify import VerificationCertificate, sweep, verify_pair

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3
JOBS_ENV = "SEQ2ADIC_JOBS"
MIN_SWEEP_N = 15

CSV_HEADER = ["p", "q", "n", "d1", "d2", "d3", "d", "closed_d1", "closed_d2",
              "c2_bits", "is_max", "all_passed"]


class UsageError(Exception):
    pass


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, no whitespace. Reparsing and redumping is
    byte-identical."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _fmt_bits(c2: float) -> str:
    return f"{c2:.12f}"


def _flag(v: bool) -> str:
    return "true" if v else "false"


def report_to_dict(report: ComplexityReport) -> dict[str, Any]:
    out: dict[str, Any] = {
        "n": report.n,
        "s2": str(report.s2),
        "d": str(report.d),
        "c2_bits": round(report.c2_bits, 12),
        "is_max": report.is_max,
    }
    if report.pair is not None:
        out["p"], out["q"] = report.pair.p, report.pair.q
    for key in ("d1", "d2", "d3", "closed_d1", "closed_d2"):
        value = getattr(report, key)
        if value is not None:
            out[key] = str(value)
    return out


def certificate_to_dict(cert: VerificationCertificate) -> dict[str, Any]:
    return {
        "p": cert.pair.p,
        "q": cert.pair.q,
        "all_passed": cert.all_passed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in cert.checks],
    }


def render_sweep(rows: Sequence[tuple[ComplexityReport, VerificationCertificate]], fmt: str) -> str:
    if fmt == "json":
        items = []
        for report, cert in rows:
            item = report_to_dict(report)
            item["all_passed"] = cert.all_passed
            items.append(item)
        return dumps(items) + "\n"
    if fmt == "plain":
        lines = []
        for report, cert in rows:
            lines.append(f"p={report.pair.p} q={report.pair.q} d={report.d} "
                         f"d1={report.d1} d2={report.d2} c2_bits={_fmt_bits(report.c2_bits)} "
                         f"all_passed={_flag(cert.all_passed)}")
        return "".join(line + "\n" for line in lines)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for report, cert in rows:
        writer.writerow([
            report.pair.p, report.pair.q, report.n, report.d1, report.d2, report.d3, report.d,
            report.closed_d1, report.closed_d2, _fmt_bits(report.c2_bits),
            _flag(report.is_max), _flag(cert.all_passed),
        ])
    return buf.getvalue()


def _pair(args: argparse.Namespace) -> PrimePair:
    try:
        return PrimePair(args.p, args.q)
    except InvalidPairError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args: argparse.Namespace, out) -> int:
    pair = _pair(args)
    seq = generate(pair)
    if args.format == "hex":
        out.write(seq.to_hex() + "\n")
    elif args.format == "json":
        out.write(dumps({"p": pair.p, "q": pair.q, "n": seq.n,
                         "bits": seq.to_bitstring(), "hex": seq.to_hex()}) + "\n")
    elif args.format == "plain":
        out.write(f"p: {pair.p}\nq: {pair.q}\nn: {seq.n}\nones: {ones_count(seq)}\n"
                  f"bits: {seq.to_bitstring()}\n")
    else:
        out.write(seq.to_bitstring() + "\n")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace, out) -> int:
    report = analyze(_pair(args))
    if args.format == "json":
        out.write(dumps(report_to_dict(report)) + "\n")
        return EXIT_OK
    lines = [
        ("p", report.pair.p), ("q", report.pair.q), ("n", report.n),
        ("d1", report.d1), ("d2", report.d2), ("d3", report.d3), ("d", report.d),
        ("closed_d1", report.closed_d1), ("closed_d2", report.closed_d2),
        ("c2_bits", _fmt_bits(report.c2_bits)), ("is_max", _flag(report.is_max)),
    ]
    out.write("".join(f"{k}: {v}\n" for k, v in lines))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out) -> int:
    cert = verify_pair(_pair(args))
    if args.format == "json":
        out.write(dumps(certificate_to_dict(cert)) + "\n")
    else:
        for c in cert.checks:
            line = f"{c.name}: {'PASS' if c.passed else 'FAIL'}"
            if not c.passed:
                line += f" ({c.detail})"
            out.write(line + "\n")
    return EXIT_OK if cert.all_passed else EXIT_FAILED


def _jobs(value: Optional[int]) -> int:
    if value is None:
        env = os.environ.get(JOBS_ENV, "1")
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"{JOBS_ENV} must be an integer, got {env!r}") from None
    if value < 1:
        raise UsageError("jobs must be a positive integer")
    return value


def cmd_sweep(args: argparse.Namespace, out) -> int:
    if args.max_n < MIN_SWEEP_N:
        raise UsageError(f"max-n must be at least {MIN_SWEEP_N}")
    jobs = _jobs(args.jobs)
    target = None
    if args.out is not None:
        try:
            target = open(args.out, "w", encoding="utf-8", newline="")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO
    rows = sweep(args.max_n, jobs)
    text = render_sweep(rows, args.format)
    try:
        if target is None:
            out.write(text)
        else:
            with target:
                target.write(text)
    except OSError as exc:
        print(f"error: write failed: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if all(cert.all_passed for _, cert in rows) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seq2adic",
        description="2-adic complexity of generalized binary sequences of order 2 over Z_pq.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_command(name: str, help_: str, formats: list[str]) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--p", type=int, required=True, help="first odd prime")
        sp.add_argument("--q", type=int, required=True, help="second odd prime, distinct from p")
        sp.add_argument("--format", choices=formats, default=formats[0])
        return sp

    pair_command("gen", "print one period of the sequence", ["bits", "hex", "plain", "json"]).set_defaults(func=cmd_gen)
    pair_command("analyze", "compute the complexity report", ["plain", "json"]).set_defaults(func=cmd_analyze)
    pair_command("verify", "check every step of the closed form", ["plain", "json"]).set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="analyze and verify every ordered pair with pq <= max-n")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--out", default=None, help="output file (default: stdout)")
    sp.add_argument("--jobs", type=int, default=None, help=f"worker processes (default: ${JOBS_ENV} or 1)")
    sp.add_argument("--format", choices=["csv", "json", "plain"], default="csv")
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
