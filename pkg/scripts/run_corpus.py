#!/usr/bin/env python3
"""Run verification suites over the corpus and write one JSON report per suite."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from entangle.suites import SUITES, run_suite


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--suite", action="append", choices=SUITES, help="repeatable; default: all")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--exhaustive-n", type=int, default=7)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path, default=Path("reports"))
    args = p.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in args.suite or [s for s in SUITES if s != "all"]:
        report = run_suite(name, args.max_n, args.exhaustive_n, jobs=args.jobs)
        (args.out / f"{name}.json").write_text(json.dumps(report.to_json(timing=True), indent=2, sort_keys=True))
        status = "PASS" if report.passed else "FAIL"
        print(f"{status}  {name:22s} {report.duration_s:8.1f}s", flush=True)
        for c in report.checks:
            print(f"      {c.name:34s} checked={c.checked} skipped={c.skipped}")
        failed += not report.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
