"""Batch command-line front-end.

    bkd expand --k 1 --n 100 --format csv --out table.csv
    bkd verify turan3 --k 1 --from 6 --to 5000
    bkd verify theta-mono --k 2 --from 7 --to 5000
    bkd verify bessel --z-grid 1484:10000:50 --prec auto
    bkd verify sandwich --k 1 --from 3512 --to 4000 --prec 384
    bkd scan conjecture --k 1 --r 3 --to 5000

Exit codes: 0 all checks pass, 1 mathematical counterexample found,
2 precision-inconclusive outcome, 3 usage error.

Expanded tables are cached under $BKD_CACHE_DIR (default ~/.cache/bkd),
keyed by k with an integrity hash, and reused for any smaller N.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from typing import Optional

from . import asymptotic, inequalities
from .etaseries import PartitionTable, delta_table
from .report import CheckOutcome, VerificationReport

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise UsageError(message)


# ---------------------------------------------------------------------------
# Table cache
# ---------------------------------------------------------------------------

def _cache_dir() -> str:
    return os.environ.get("BKD_CACHE_DIR") or os.path.join(
        os.path.expanduser("~"), ".cache", "bkd"
    )


def _cache_path(k: int) -> str:
    return os.path.join(_cache_dir(), "delta_k%d.json" % k)


def _coeff_hash(coeffs) -> str:
    h = hashlib.sha256()
    h.update(",".join(str(v) for v in coeffs).encode())
    return h.hexdigest()


def load_table(k: int, N: int) -> PartitionTable:
    """Table of delta_k(0..N), reusing any cached expansion with N' >= N."""
    path = _cache_path(k)
    try:
        with open(path, "r", encoding="utf-8") as fp:
            obj = json.load(fp)
        if obj.get("N", -1) >= N and obj.get("sha256") == _coeff_hash(obj["coeffs"]):
            coeffs = tuple(int(s) for s in obj["coeffs"][: N + 1])
            return PartitionTable(k=k, N=N, coeffs=coeffs)
    except (OSError, ValueError, KeyError):
        pass
    table = delta_table(k, N)
    try:
        os.makedirs(_cache_dir(), exist_ok=True)
        obj = table.to_json_obj()
        obj["sha256"] = _coeff_hash(obj["coeffs"])
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fp:
            json.dump(obj, fp, separators=(",", ":"))
        os.replace(tmp, path)
    except OSError:
        pass  # cache is best effort
    return table


# ---------------------------------------------------------------------------
# Output plumbing
# ---------------------------------------------------------------------------

def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _report_text(obj: dict) -> str:
    lines = ["%s: %s" % (key, obj[key]) for key in obj]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------

def _cmd_expand(args) -> int:
    table = load_table(args.k, args.n)
    if args.format == "csv":
        payload = table.to_csv()
    elif args.format == "json":
        payload = table.to_json() + "\n"
    else:
        payload = "".join(
            "%d %s\n" % (n, v) for n, v in enumerate(table.coeffs)
        )
    checksum = "k=%d N=%d first=%s last=%s sha256=%s" % (
        table.k,
        table.N,
        table.coeffs[0],
        table.coeffs[-1],
        _coeff_hash(table.coeffs),
    )
    if args.out:
        _emit(payload, args.out)
        print(checksum)
    else:
        sys.stdout.write(payload)
        print(checksum, file=sys.stderr)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

EXACT_CHECKS = {
    "logconcave": (inequalities.logconcave_margin, 1),
    "turan3": (inequalities.turan3_margin, 2),
    "theta-mono": (inequalities.theta_monotone_margin, 2),
}
INTERVAL_CHECKS = ("sandwich", "theta-bounds", "bessel", "phi-psi")
ALL_CHECKS = tuple(EXACT_CHECKS) + ("dlog", "jensen") + INTERVAL_CHECKS


def _parse_prec(value: Optional[str]):
    if value in (None, "auto"):
        return None
    try:
        p = int(value)
    except ValueError:
        raise UsageError("--prec must be an integer or 'auto'")
    if p < 64:
        raise UsageError("--prec must be >= 64")
    return p


def _verify_exact(args) -> int:
    margin_fn_base, lookahead = EXACT_CHECKS[args.check]
    table = load_table(args.k, args.to + lookahead)
    report = inequalities.scan_check(
        table,
        args.check,
        lambda n: margin_fn_base(table, n),
        args.from_n,
        args.to,
        workers=args.workers,
        collect_margins=args.margins,
    )
    return _finish_report(args, report)


def _verify_dlog(args) -> int:
    if args.r is None:
        raise UsageError("verify dlog requires --r")
    table = load_table(args.k, args.to + args.r)
    flip = 1 if args.r % 2 == 1 else -1
    report = inequalities.scan_check(
        table,
        "dlog-r%d" % args.r,
        lambda n: flip * inequalities.dlog_sign(table, n, args.r).value,
        args.from_n,
        args.to,
        workers=args.workers,
    )
    report.notes = "sign convention: (-1)^(r-1) D^r log delta > 0"
    return _finish_report(args, report)


def _verify_jensen(args) -> int:
    if args.d is None:
        raise UsageError("verify jensen requires --d")
    table = load_table(args.k, args.to + args.d)
    report = inequalities.scan_check(
        table,
        "jensen-d%d" % args.d,
        lambda n: 1 if inequalities.jensen_hyperbolic(table, args.d, n) else -1,
        args.from_n,
        args.to,
        workers=args.workers,
    )
    return _finish_report(args, report)


def _ratio_csv_rows(k: int, ns, table, prec: int, outcomes) -> str:
    """Per-n dump: exact theta as a rational, every analytic quantity as
    a decimal enclosure with its precision tag, plus the verdict."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "theta_exact", "theta_lo", "theta_hi",
                "lambda_lo", "lambda_hi", "g", "G", "verdict"])
    for n, outcome in zip(ns, outcomes):
        rb = asymptotic.ratio_bounds(k, n, prec)
        g, big_g = asymptotic.tail_factors(k, n, prec)
        th = asymptotic.theta_exact(table, n)
        w.writerow([
            n,
            "%d/%d" % (th.numerator, th.denominator),
            rb.theta_lo.dumps(), rb.theta_hi.dumps(),
            rb.lambda_lo.dumps(), rb.lambda_hi.dumps(),
            g.dumps(), big_g.dumps(),
            outcome.value,
        ])
    return buf.getvalue()


def _verify_interval_range(args) -> int:
    prec = _parse_prec(args.prec) or 384
    table = load_table(args.k, args.to + 1)
    t0 = time.perf_counter()
    failures, inconclusive, skipped = [], [], []
    ns = list(range(args.from_n, args.to + 1))
    outcomes = []
    for n in ns:
        if args.check == "sandwich":
            outcome = asymptotic.sandwich_check(args.k, n, table, prec).outcome
        else:
            outcome = asymptotic.theta_bounds_check(args.k, n, table, prec)
        outcomes.append(outcome)
        if outcome is CheckOutcome.FAIL:
            failures.append(n)
        elif outcome is CheckOutcome.INCONCLUSIVE:
            inconclusive.append(n)
        elif outcome is CheckOutcome.HYPOTHESIS_NOT_MET:
            skipped.append(n)
    report = VerificationReport(
        check_name=args.check,
        k=args.k,
        from_n=args.from_n,
        to_n=args.to,
        failures=failures,
        runtime_ms=int((time.perf_counter() - t0) * 1000),
    )
    if args.format == "csv":
        _emit(_ratio_csv_rows(args.k, ns, table, prec, outcomes), args.out)
        if failures:
            return EXIT_COUNTEREXAMPLE
        return EXIT_INCONCLUSIVE if inconclusive else EXIT_PASS
    extra = {"inconclusive": inconclusive, "skipped_below_validity": skipped,
             "prec": prec}
    return _finish_report(args, report, extra=extra)


def _parse_z_grid(spec: str) -> list[float]:
    try:
        lo_s, hi_s, count_s = spec.split(":")
        lo, hi, count = float(lo_s), float(hi_s), int(count_s)
    except ValueError:
        raise UsageError("--z-grid expects LO:HI:COUNT")
    if not (0 < lo <= hi) or count < 1:
        raise UsageError("bad z grid %r" % spec)
    if count == 1:
        return [lo]
    ratio = (hi / lo) ** (1.0 / (count - 1))
    return [lo * ratio**i for i in range(count)]


def _verify_bessel(args) -> int:
    grid = _parse_z_grid(args.z_grid or "1484:10000:50")
    prec = _parse_prec(args.prec)
    t0 = time.perf_counter()
    failures, inconclusive = [], []
    rows = []
    for i, z in enumerate(grid):
        outcome = asymptotic.bessel_remainder_check(z, prec)
        rows.append((i, z, outcome.value))
        if outcome is CheckOutcome.FAIL:
            failures.append(i)
        elif outcome is CheckOutcome.INCONCLUSIVE:
            inconclusive.append(i)
    report = VerificationReport(
        check_name="bessel",
        k=args.k or 0,
        from_n=int(grid[0]),
        to_n=int(grid[-1]),
        failures=failures,
        runtime_ms=int((time.perf_counter() - t0) * 1000),
        notes="z-grid %s (failures/inconclusive hold grid indices)"
        % (args.z_grid or "1484:10000:50"),
    )
    extra = {"inconclusive": inconclusive,
             "grid": ["%.6f" % z for z in grid]}
    return _finish_report(args, report, extra=extra)


def _verify_phi_psi(args) -> int:
    from fractions import Fraction

    from . import positivity

    t0 = time.perf_counter()
    psi = positivity.psi_poly()
    diff = positivity.phi_poly() - psi
    certs = {}
    failures = []
    for name, poly, threshold in (
        ("psi>=0", psi, Fraction(6)),
        ("phi-psi>=0", diff, Fraction(33, 10)),
    ):
        result = positivity.certify_positive_on_ray(poly, threshold)
        if isinstance(result, positivity.PositivityCertificate) and result.recheck():
            certs[name] = result.to_json_obj()
        else:
            failures.append(name)
    report = VerificationReport(
        check_name="phi-psi",
        k=args.k or 0,
        from_n=0,
        to_n=0,
        failures=[0] if failures else [],
        runtime_ms=int((time.perf_counter() - t0) * 1000),
        notes=("refuted: %s" % ", ".join(failures)) if failures else None,
    )
    return _finish_report(args, report, extra={"certificates": certs})


def _finish_report(args, report: VerificationReport, extra: Optional[dict] = None) -> int:
    obj = report.to_json_obj()
    if extra:
        obj.update(extra)
    if args.format == "json":
        _emit(json.dumps(obj, separators=(",", ":")) + "\n", args.out)
    elif args.format == "csv" and report.margins is not None:
        _emit(report.margins_csv(), args.out)
    else:
        _emit(_report_text(obj), args.out)
    if report.failures:
        return EXIT_COUNTEREXAMPLE
    if extra and extra.get("inconclusive"):
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def _cmd_verify(args) -> int:
    if args.check not in ALL_CHECKS:
        raise UsageError(
            "unknown check %r (choose from %s)" % (args.check, ", ".join(ALL_CHECKS))
        )
    if args.check == "bessel":
        return _verify_bessel(args)
    if args.check == "phi-psi":
        return _verify_phi_psi(args)
    if args.k is None:
        raise UsageError("--k is required for this check")
    if args.to is None:
        raise UsageError("--to is required for this check")
    if args.check in EXACT_CHECKS:
        return _verify_exact(args)
    if args.check == "dlog":
        return _verify_dlog(args)
    if args.check == "jensen":
        return _verify_jensen(args)
    return _verify_interval_range(args)


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def _cmd_scan(args) -> int:
    if args.what != "conjecture":
        raise UsageError("unknown scan %r (only 'conjecture')" % args.what)
    if args.r is None:
        raise UsageError("scan conjecture requires --r")
    table = load_table(args.k, args.to + args.r)
    t0 = time.perf_counter()
    candidate, report = inequalities.conjecture_threshold(
        table, args.r, args.to, workers=args.workers
    )
    obj = {
        "check": "conjecture-scan",
        "k": args.k,
        "r": args.r,
        "to": args.to,
        "candidate": candidate,
        "violations": sorted(report.failures),
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }
    if args.format == "json":
        _emit(json.dumps(obj, separators=(",", ":")) + "\n", args.out)
    else:
        _emit(_report_text(obj), args.out)
    return EXIT_PASS if candidate is not None else EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="bkd", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--format", choices=("csv", "json", "text"), default="text")
        p.add_argument("--out", default=None)
        p.add_argument("--workers", type=int, default=1)

    p_expand = sub.add_parser("expand", help="write a delta_k table")
    p_expand.add_argument("--k", type=int, required=True)
    p_expand.add_argument("--n", type=int, required=True)
    p_expand.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p_expand.add_argument("--out", default=None)
    p_expand.set_defaults(handler=_cmd_expand)

    p_verify = sub.add_parser("verify", help="run a registered check over a range")
    p_verify.add_argument("check")
    common(p_verify)
    p_verify.add_argument("--from", dest="from_n", type=int, default=1)
    p_verify.add_argument("--to", type=int, default=None)
    p_verify.add_argument("--r", type=int, default=None)
    p_verify.add_argument("--d", type=int, default=None)
    p_verify.add_argument("--prec", default=None, help="bits, or 'auto'")
    p_verify.add_argument("--z-grid", dest="z_grid", default=None,
                          help="LO:HI:COUNT logarithmic grid for the bessel check")
    p_verify.add_argument("--margins", action="store_true",
                          help="collect exact per-n margins (csv output)")
    p_verify.set_defaults(handler=_cmd_verify)

    p_scan = sub.add_parser("scan", help="threshold scans")
    p_scan.add_argument("what")
    common(p_scan)
    p_scan.add_argument("--r", type=int, default=None)
    p_scan.add_argument("--to", type=int, required=True)
    p_scan.set_defaults(handler=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be >= 1")
        if getattr(args, "k", None) is not None and args.k < 0:
            raise UsageError("--k must be >= 0")
        return args.handler(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, IndexError) as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
