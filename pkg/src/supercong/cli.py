"""Command-line driver: prime sweeps, suite selection, report emission.

    verify --primes LO:HI [--ids ID,ID,...|all] [--r-max N] [--wz-grid N]
           [--identities-n-max N] [--format jsonl|csv|table] [--jobs N|auto]
           [--out PATH] [--no-timing]

Exit codes: 0 all checks pass, 1 any check fails, 2 usage error,
3 I/O or internal arithmetic error.

Congruence rows report both residues at their modulus.  Identity and
grid-certificate rows are exact (no modulus); they report with p = 0, r = 0,
modulus "exact", lhs = number of failing points and rhs = "0".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time
from dataclasses import dataclass

from . import congruences, identities, wz
from .exactnum import is_prime

WZ_IDS = ("wz-pair", "wz-half-sum", "wz-full-sum", "wz-closed-form")


@dataclass(frozen=True)
class RunConfig:
    prime_lo: int
    prime_hi: int
    primes: tuple[int, ...]
    r_max: int
    ids: tuple[str, ...]
    wz_grid: int
    identities_n_max: int
    fmt: str
    jobs: int
    out_path: str | None
    no_timing: bool


@dataclass(frozen=True)
class ExactCheckRecord:
    """Report row for an exact (modulus-free) family: a range-checked identity
    or a grid certificate.  Passing means zero failing points."""

    id: str
    checked: int
    failures: int
    micros: int
    p: int = 0
    r: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, no_timing: bool = False) -> dict:
        return {
            "id": self.id,
            "p": self.p,
            "r": self.r,
            "modulus": "exact",
            "lhs": str(self.failures),
            "rhs": "0",
            "pass": self.passed,
            "micros": 0 if no_timing else self.micros,
        }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Check binomial-sum congruences, identities and telescoping "
        "certificates over a range of primes, in exact arithmetic.",
    )
    parser.add_argument("--primes", required=True, metavar="LO:HI",
                        help="inclusive integer range; composites are skipped")
    parser.add_argument("--ids", default="all",
                        help="comma-separated congruence/identity ids, or 'all'")
    parser.add_argument("--r-max", type=int, default=2, dest="r_max",
                        help="cap on the power index r for p^r-indexed rows (default 2)")
    parser.add_argument("--wz-grid", type=int, default=50, dest="wz_grid",
                        help="depth of the certificate grid checks (default 50)")
    parser.add_argument("--identities-n-max", type=int, default=50, dest="identities_n_max",
                        help="upper n for identity range checks (default 50)")
    parser.add_argument("--format", choices=("jsonl", "csv", "table"), default="jsonl",
                        dest="fmt")
    parser.add_argument("--jobs", default="1", help="worker processes, or 'auto'")
    parser.add_argument("--out", default=None, dest="out_path", metavar="PATH")
    parser.add_argument("--no-timing", action="store_true", dest="no_timing",
                        help="emit micros as 0 so identical runs are byte-identical")
    return parser


def all_known_ids() -> tuple[str, ...]:
    return tuple(congruences.REGISTRY) + tuple(identities.REGISTRY) + WZ_IDS


def parse_args(argv: list[str] | None = None) -> RunConfig:
    """Validated RunConfig; exits with code 2 on usage errors."""
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    if argv and argv[0] == "verify":
        argv = argv[1:]
    parser = _build_parser()
    ns = parser.parse_args(argv)

    match = re.fullmatch(r"(-?\d+):(-?\d+)", ns.primes)
    if not match:
        parser.error(f"--primes expects LO:HI, got {ns.primes!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        parser.error(f"empty prime range {lo}:{hi}")
    primes = []
    for n in range(max(lo, 2), hi + 1):
        if is_prime(n):
            if n <= 3:
                print(f"warning: skipping p = {n} (statements require p > 3)",
                      file=sys.stderr)
            else:
                primes.append(n)

    if ns.ids.strip() == "all":
        ids = all_known_ids()
    else:
        ids = tuple(tok.strip() for tok in ns.ids.split(",") if tok.strip())
        if not ids:
            parser.error("--ids must name at least one id")
        known = set(all_known_ids())
        for cid in ids:
            if cid not in known:
                parser.error(f"unknown id {cid!r}")

    if ns.r_max < 1:
        parser.error(f"--r-max must be positive, got {ns.r_max}")
    if ns.wz_grid < 1:
        parser.error(f"--wz-grid must be positive, got {ns.wz_grid}")
    if ns.identities_n_max < 1:
        parser.error(f"--identities-n-max must be positive, got {ns.identities_n_max}")

    if ns.jobs == "auto":
        jobs = os.cpu_count() or 1
    else:
        try:
            jobs = int(ns.jobs)
        except ValueError:
            parser.error(f"--jobs expects an integer or 'auto', got {ns.jobs!r}")
        if jobs < 1:
            parser.error(f"--jobs must be positive, got {jobs}")

    return RunConfig(
        prime_lo=lo,
        prime_hi=hi,
        primes=tuple(primes),
        r_max=ns.r_max,
        ids=ids,
        wz_grid=ns.wz_grid,
        identities_n_max=ns.identities_n_max,
        fmt=ns.fmt,
        jobs=jobs,
        out_path=ns.out_path,
        no_timing=ns.no_timing,
    )


def _identity_records(ids: list[str], n_max: int) -> list[ExactCheckRecord]:
    out = []
    for iid in ids:
        spec = identities.REGISTRY[iid]
        top = max(n_max, spec.n_min)
        start = time.perf_counter_ns()
        verdict = identities.check_identity_range(iid, top)
        micros = (time.perf_counter_ns() - start) // 1000
        out.append(ExactCheckRecord(iid, top - spec.n_min + 1, len(verdict.failures), micros))
    return out


def _wz_records(ids: list[str], grid: int) -> list[ExactCheckRecord]:
    out = []
    for wid in ids:
        start = time.perf_counter_ns()
        if wid == "wz-pair":
            verdict = wz.check_pair_identity(grid, grid)
            checked, failures = (grid + 1) * grid, len(verdict.failures)
        elif wid == "wz-half-sum":
            failures = sum(1 for m in range(1, grid + 1)
                           if len(set(wz.telescope_half_sum(m))) != 1)
            checked = grid
        elif wid == "wz-full-sum":
            top = max(2, 2 * grid)
            failures = 0
            for big_m in range(2, top + 1):
                f_side, g_side = wz.telescope_full_sum(big_m)
                if f_side != g_side:
                    failures += 1
                elif big_m % 2 and not wz.upper_tail_vanishes(big_m):
                    failures += 1
            checked = top - 1
        else:  # wz-closed-form
            top = min(2 * grid - 1, 99)
            checked = failures = 0
            for p_odd in range(5, top + 1, 2):
                for k in range(1, (p_odd + 1) // 2 + 1):
                    checked += 1
                    if wz.closed_form_g(p_odd, k) != wz.eval_g((p_odd + 1) // 2, k):
                        failures += 1
        micros = (time.perf_counter_ns() - start) // 1000
        out.append(ExactCheckRecord(wid, checked, failures, micros))
    return out


def collect_records(config: RunConfig) -> list:
    """Run every selected family and merge the rows in deterministic
    (id, p, r) order."""
    congruence_ids = [i for i in config.ids if i in congruences.REGISTRY]
    identity_ids = [i for i in config.ids if i in identities.REGISTRY]
    wz_ids = [i for i in config.ids if i in WZ_IDS]

    rows: list = list(congruences.run_suite(_congruence_config(config, congruence_ids)))
    rows.extend(_identity_records(identity_ids, config.identities_n_max))
    rows.extend(_wz_records(wz_ids, config.wz_grid))
    rows.sort(key=lambda rec: (rec.id, rec.p, rec.r))
    return rows


def _congruence_config(config: RunConfig, congruence_ids: list[str]) -> RunConfig:
    return RunConfig(
        prime_lo=config.prime_lo,
        prime_hi=config.prime_hi,
        primes=config.primes,
        r_max=config.r_max,
        ids=tuple(congruence_ids),
        wz_grid=config.wz_grid,
        identities_n_max=config.identities_n_max,
        fmt=config.fmt,
        jobs=config.jobs,
        out_path=config.out_path,
        no_timing=config.no_timing,
    )


def _render(records: list[dict], fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(json.dumps(rec) + "\n" for rec in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = ["id", "p", "r", "modulus", "lhs", "rhs", "pass", "micros"]
        writer.writerow(keys)
        for rec in records:
            writer.writerow(
                ["true" if rec[k] is True else "false" if rec[k] is False else
                 ("" if rec[k] is None else rec[k]) for k in keys]
            )
        return buf.getvalue()
    # table
    keys = ["id", "p", "r", "modulus", "lhs", "rhs", "pass", "micros"]
    cells = [[("ok" if rec[k] is True else "FAIL" if rec[k] is False else
               ("-" if rec[k] is None else str(rec[k]))) for k in keys] for rec in records]
    widths = [max([len(k)] + [len(row[i]) for row in cells]) for i, k in enumerate(keys)]
    lines = ["  ".join(k.ljust(widths[i]) for i, k in enumerate(keys)).rstrip()]
    for row in cells:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def emit_report(rows: list, fmt: str, out_path: str | None = None,
                no_timing: bool = False) -> int:
    """Write one record per check; 0 when everything passed, 1 otherwise.
    I/O failures propagate as OSError (mapped to exit code 3 by main)."""
    records = [row.record(no_timing) for row in rows]
    text = _render(records, fmt)
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0 if all(rec["pass"] for rec in records) else 1


def main(argv: list[str] | None = None) -> int:
    config = parse_args(argv)
    try:
        rows = collect_records(config)
    except Exception as exc:  # internal arithmetic error
        print(f"error: {exc}", file=sys.stderr)
        return 3
    try:
        return emit_report(rows, config.fmt, config.out_path, config.no_timing)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
