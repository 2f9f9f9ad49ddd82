"""Command-line entry point: ``kdiamond {coeffs,check,scan,verify-bounds}``.

Exit status is 0 only when every requested check passed and no threshold was
censored by the horizon.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict, dataclass
from typing import Sequence

from . import verify
from .bessel import DEFAULT_PREC, MIN_PREC, Report
from .cache import CacheError, get_table
from .inequalities import (
    FAMILIES,
    FamilySpec,
    HorizonError,
    REFERENCE_THRESHOLDS,
    invariants_ABI,
    laguerre_value,
    predicate_eval,
    reference_threshold,
    scan_tables,
    toeplitz_det,
    turan3_value,
)

log = logging.getLogger("kdiamond")

DEFAULT_SCAN_HORIZON = 10000


@dataclass(frozen=True)
class RunConfig:
    k: int = 1
    horizon: int | None = None
    precision_bits: int = DEFAULT_PREC
    output_format: str = "csv"
    cache_path: str | None = None
    parallelism: int = 1

    def __post_init__(self):
        if self.precision_bits < MIN_PREC:
            raise ValueError(f"--precision must be >= {MIN_PREC}")
        if self.horizon is not None and self.horizon < 0:
            raise ValueError("--horizon must be >= 0")
        if self.parallelism < 1:
            raise ValueError("--jobs must be >= 1")


def _emit(out, config: RunConfig, command: str, header: Sequence[str], rows: list[list], status: str, key="rows"):
    if config.output_format == "json":
        doc = {
            "command": command,
            "config": asdict(config),
            key: [dict(zip(header, r)) for r in rows],
            "status": status,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        out.write(buf.getvalue())


def cmd_coeffs(config: RunConfig, N: int, out=sys.stdout) -> int:
    if N < 0:
        raise ValueError("N must be >= 0")
    table = get_table(config.k, N, config.cache_path)
    rows = [[n, str(c)] for n, c in enumerate(table.coeffs)]
    _emit(out, config, "coeffs", ["n", "delta"], rows, "ok")
    return 0


def _value(spec: FamilySpec, table, n: int) -> int | None:
    fam = spec.family
    if fam == "laguerre":
        return laguerre_value(table, n, spec.order)
    if fam == "toeplitz_det":
        return toeplitz_det(table, n, spec.order)
    if fam == "turan_jensen":
        return turan3_value(table, n) if spec.order == 3 else None
    A, B, I = invariants_ABI(*table[n : n + 5])
    return {"invariant_A": A, "invariant_B": B, "invariant_I": I}[fam]


def cmd_check(config: RunConfig, family: str, order: int, n_from: int, n_to: int, values: bool = False, out=sys.stdout) -> int:
    spec = FamilySpec(family, order, config.k)
    if n_from > n_to:
        raise ValueError(f"empty range {n_from}..{n_to}")
    if n_from < spec.natural_min:
        raise HorizonError(f"{spec.label()} undefined at n={n_from}")
    table = get_table(config.k, spec.reach(n_to), config.cache_path).coeffs
    rows = []
    for n in range(n_from, n_to + 1):
        ok = predicate_eval(spec, table, n)
        row = [n, ok]
        if values:
            v = _value(spec, table, n)
            row.append("" if v is None else str(v))
        rows.append(row)
    header = ["n", "holds"] + (["value"] if values else [])
    all_ok = all(r[1] for r in rows)
    _emit(out, config, "check", header, rows, "ok" if all_ok else "fail", key="checks")
    return 0 if all_ok else 1


def cmd_scan(config: RunConfig, m_max: int, out=sys.stdout) -> int:
    horizon = config.horizon if config.horizon is not None else DEFAULT_SCAN_HORIZON
    expected = [t for (fam, k), row in REFERENCE_THRESHOLDS.items() if k == config.k for t in row[:m_max]]
    if expected and horizon < 2 * max(expected):
        log.warning("horizon %d is below twice the largest expected threshold %d", horizon, max(expected))
    table = get_table(config.k, horizon + 2 * m_max, config.cache_path)
    reports = scan_tables(table, m_max, horizon, jobs=config.parallelism)
    rows = []
    for r in reports:
        ref = reference_threshold(r.spec)
        rows.append(
            [
                r.spec.family,
                r.spec.order,
                "" if r.threshold is None else r.threshold,
                r.horizon,
                len(r.failures),
                r.censored,
                "" if ref is None else ref,
            ]
        )
    header = ["family", "m", "threshold", "horizon", "failures", "censored", "reference"]
    censored = any(r.censored for r in reports)
    _emit(out, config, "scan", header, rows, "censored" if censored else "ok")
    return 1 if censored else 0


SUITES = ("lemmas", "sandwich", "proof-checks", "all")


def run_suite(config: RunConfig, suite: str) -> list[Report]:
    prec = config.precision_bits
    reports = []
    if suite in ("lemmas", "all"):
        reports.append(verify.lemmas_suite(prec))
    if suite in ("sandwich", "all"):
        reports.append(verify.sandwich_suite(lambda k, N: get_table(k, N, config.cache_path).coeffs, prec=prec))
    if suite in ("proof-checks", "all"):
        reports.append(verify.proof_checks_suite(prec))
    return reports


def cmd_verify_bounds(config: RunConfig, suite: str, out=sys.stdout) -> int:
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}")
    reports = run_suite(config, suite)
    rows = []
    for rep in reports:
        for c in rep.checks:
            d = c.as_dict()
            rows.append([rep.title, d["name"], d["point"], d["margin"], d["ok"], d["detail"]])
    passed = all(rep.passed for rep in reports)
    header = ["suite", "check", "point", "margin", "ok", "detail"]
    _emit(out, config, "verify-bounds", header, rows, "ok" if passed else "fail", key="checks")
    for rep in reports:
        for c in rep.failures():
            log.error("%s: %s at %s failed (margin %s)", rep.title, c.name, c.point, c.as_dict()["margin"])
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, choices=(1, 2), default=1)
    common.add_argument("--horizon", type=int, default=None, help="scan horizon (default 10000)")
    common.add_argument("--precision", type=int, default=DEFAULT_PREC, help="working precision in bits")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--cache", default=None, metavar="DIR", help="directory for coefficient caches")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for scans")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="kdiamond", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="emit Delta_k(0..N)")
    p.add_argument("N", type=int)

    p = sub.add_parser("check", parents=[common], help="per-n verdicts for one inequality family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--order", "-m", type=int, default=1)
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--values", action="store_true", help="include exact values")

    p = sub.add_parser("scan", parents=[common], help="threshold tables for laguerre and toeplitz_det")
    p.add_argument("--m-max", type=int, default=14)

    p = sub.add_parser("verify-bounds", parents=[common], help="numeric checks of the analytic bounds")
    p.add_argument("suite", choices=SUITES)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        config = RunConfig(args.k, args.horizon, args.precision, args.format, args.cache, args.jobs)
        if args.command == "coeffs":
            return cmd_coeffs(config, args.N, out)
        if args.command == "check":
            return cmd_check(config, args.family, args.order, args.n_from, args.n_to, args.values, out)
        if args.command == "scan":
            return cmd_scan(config, args.m_max, out)
        return cmd_verify_bounds(config, args.suite, out)
    except (CacheError, HorizonError, ValueError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
