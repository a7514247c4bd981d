"""Verify every catalog entry and write JSON/CSV reports plus a timing summary.

    python3 scripts/run_full_verify.py --out results/

Runs serially so per-group timings are meaningful; use `u3atlas verify --jobs N`
for a parallel pass/fail run.
"""
import argparse
import json
import os
import statistics
import sys
import time

from u3atlas import catalog
from u3atlas.cli import write_reports


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--max-order", type=int, default=2000)
    ap.add_argument("--series", default=None, help="comma-separated series filter")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    series = args.series.split(",") if args.series else None
    entries = catalog.enumerate(args.max_order, series=series)
    os.makedirs(args.out, exist_ok=True)

    t0 = time.perf_counter()
    reports, secs = [], []
    for entry in entries:
        rep = catalog.verify_entry(entry, seed=args.seed)
        reports.append(rep.as_json())
        secs.append(rep.seconds)
        print("%s %-40s %7.3fs" % ("PASS" if rep.passed else "FAIL", entry.spec, rep.seconds), flush=True)
    wall = time.perf_counter() - t0

    for fmt in ("json", "csv"):
        with open(os.path.join(args.out, "catalog." + fmt), "w") as fh:
            write_reports(reports, fmt, fh)

    secs.sort()
    by_series = {}
    for r in reports:
        by_series.setdefault(r["series"], [0, 0])
        by_series[r["series"]][0] += 1
        by_series[r["series"]][1] += r["pass"]
    summary = {
        "entries": len(reports),
        "passed": sum(r["pass"] for r in reports),
        "wall_seconds": round(wall, 1),
        "median_seconds": round(statistics.median(secs), 3) if secs else None,
        "max_seconds": round(secs[-1], 2) if secs else None,
        "by_series": {k: {"entries": v[0], "passed": v[1]} for k, v in sorted(by_series.items())},
    }
    with open(os.path.join(args.out, "summary.json"), "w") as fh:
        json.dump(summary, fh, indent=2)
    print("PASS %d/%d in %.0fs (median %.3fs per group)" % (summary["passed"], summary["entries"], wall,
                                                            summary["median_seconds"] or 0))
    return 0 if summary["passed"] == summary["entries"] else 1


if __name__ == "__main__":
    sys.exit(main())
