"""Command-line front end.

    u3atlas build "Delta6n2j(n=5,j=3)"
    u3atlas verify [--series T,Xi] [--max-order 2000] [--jobs N]
    u3atlas params rk|C [--max-r 217 | --max-order 2000]
    u3atlas classify generators.json
    u3atlas export json|csv PATH

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or input
error, 3 internal computation error.
"""
import argparse
import csv
import hashlib
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import __version__
from . import catalog
from .chardeg import character_degrees, verify_profile
from .engine import (DEFAULT_CAP, CapExceeded, NonUnitaryGenerator, abelian_invariants, closure,
                     det_image_order, fingerprint, has_cyclic_direct_factor, is_subgroup_of_su3,
                     monomial_class)
from .mat3 import from_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    max_order: int = 2000
    jobs: int = os.cpu_count() or 1
    seed: int = 0
    element_cap: int = DEFAULT_CAP
    cache_dir: Optional[str] = None
    output: str = "text"

    def __post_init__(self):
        if self.max_order < 1:
            raise UsageError("max-order must be >= 1")
        if self.jobs < 1:
            raise UsageError("jobs must be >= 1")
        env = os.environ.get("U3ATLAS_CACHE_DIR")
        if env:
            self.cache_dir = env


# -- report cache ----------------------------------------------------------

def _cache_path(cfg, entry):
    if not cfg.cache_dir:
        return None
    # expectations are part of the key so an edited catalog row is re-verified
    expected = (entry.expected_order, entry.expected_id, entry.expected_su3,
                entry.expected_profile.as_json() if entry.expected_profile else None)
    raw = "%s|%r|%s|seed=%d" % (entry.spec, expected, __version__, cfg.seed)
    key = hashlib.sha1(raw.encode()).hexdigest()
    return os.path.join(cfg.cache_dir, key + ".json")


def _verify_one(args):
    entry, cfg = args
    path = _cache_path(cfg, entry)
    if path and os.path.exists(path):
        with open(path) as fh:
            return json.load(fh)
    try:
        out = catalog.verify_entry(entry, seed=cfg.seed, cap=cfg.element_cap).as_json()
    except Exception as exc:  # reported as data; the caller maps it to exit 3
        return {"spec": str(entry.spec), "series": entry.spec.series, "params": entry.spec.values,
                "error": "%s: %s" % (type(exc).__name__, exc), "pass": False, "checks": []}
    if path:
        os.makedirs(cfg.cache_dir, exist_ok=True)
        tmp = path + ".tmp%d" % os.getpid()
        with open(tmp, "w") as fh:
            json.dump(out, fh, sort_keys=True)
        os.replace(tmp, path)
    return out


def run_reports(entries, cfg):
    """Yield report dicts in entry order; workers own whole groups."""
    work = [(e, cfg) for e in entries]
    if cfg.jobs == 1 or len(work) < 2:
        for w in work:
            yield _verify_one(w)
        return
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        yield from pool.map(_verify_one, work, chunksize=1)


# -- formatting --------------------------------------------------------------

def _profile_text(p):
    if not p:
        return "-"
    return "{" + ", ".join("%s:%s" % kv for kv in p.items()) + "}"


def _text_line(rep):
    if "error" in rep:
        return "ERROR %-38s %s" % (rep["spec"], rep["error"])
    c = rep["computed"]
    line = "%s %-38s order=%-5d su3=%-5s profile=%s" % (
        "PASS" if rep["pass"] else "FAIL", rep["spec"], c["order"], str(c["su3"]).lower(),
        _profile_text(c["profile"]))
    bad = [ch for ch in rep["checks"] if not ch["pass"]]
    if bad:
        line += "  " + "; ".join("%s expected %s got %s" % (ch["name"], ch["expected"], ch["got"]) for ch in bad)
    return line


CSV_COLUMNS = ("series", "params", "expected_order", "computed_order", "expected_id", "su3_expected",
               "su3_computed", "profile_expected", "profile_computed", "pass")


def _csv_row(rep):
    exp = rep.get("expected", {})
    comp = rep.get("computed", {})
    return {
        "series": rep["series"],
        "params": ";".join("%s=%s" % kv for kv in rep["params"].items()),
        "expected_order": exp.get("order"),
        "computed_order": comp.get("order"),
        "expected_id": "[%d,%d]" % tuple(exp["id"]) if exp.get("id") else "",
        "su3_expected": exp.get("su3"),
        "su3_computed": comp.get("su3"),
        "profile_expected": _profile_text(exp.get("profile")),
        "profile_computed": _profile_text(comp.get("profile")),
        "pass": rep["pass"],
    }


def write_reports(reports, fmt, out):
    if fmt == "json":
        json.dump(reports, out, indent=1, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for rep in reports:
            w.writerow(_csv_row(rep))
    else:
        for rep in reports:
            out.write(_text_line(rep) + "\n")


def _status(reports):
    if any("error" in r for r in reports):
        return EXIT_INTERNAL
    return EXIT_OK if all(r["pass"] for r in reports) else EXIT_FAIL


# -- commands ----------------------------------------------------------------

def cmd_build(args, cfg):
    spec = catalog.parse_spec(args.spec)
    entry = catalog.entry_for(spec)
    rep = catalog.verify_entry(entry, seed=cfg.seed, cap=cfg.element_cap).as_json()
    if entry.notes:
        rep["notes"] = entry.notes
    write_reports([rep], cfg.output, sys.stdout)
    if entry.notes and cfg.output == "text":
        print("note: %s" % entry.notes)
    return _status([rep])


def _entries(args, cfg):
    series = None
    if args.series:
        series = [s.strip() for s in args.series.split(",") if s.strip()]
    return catalog.enumerate(cfg.max_order, series)


def cmd_verify(args, cfg):
    entries = _entries(args, cfg)
    if args.corrupt:
        # negative control: shift every expected order by one
        entries = [catalog.CatalogEntry(e.spec, e.expected_order + 1, e.expected_id, e.expected_su3,
                                        e.expected_profile, e.expected_shape, e.notes) for e in entries]
    reports = []
    for rep in run_reports(entries, cfg):
        reports.append(rep)
        if cfg.output == "text":
            print(_text_line(rep), flush=True)
    if cfg.output != "text":
        write_reports(reports, cfg.output, sys.stdout)
    passed = sum(1 for r in reports if r["pass"])
    print("PASS %d/%d" % (passed, len(reports)), file=sys.stdout if cfg.output == "text" else sys.stderr)
    return _status(reports)


def cmd_params(args, cfg):
    which = args.which.lower()
    if which == "rk":
        for r, k in catalog.rk_pairs(args.max_r):
            print("r=%d k=%d" % (r, k))
    elif which in ("c", "cnl"):
        for r, k, l in catalog.c_group_parameters(cfg.max_order):
            print("r=%d k=%d l=%d order=%d" % (r, k, l, 3 * r * l * l))
    else:
        raise UsageError("params expects 'rk' or 'C'")
    return EXIT_OK


def classify(mats, seed=0, cap=DEFAULT_CAP):
    """Closure and invariants of an arbitrary unitary generator set."""
    G = closure(mats, cap=cap)
    profile = character_degrees(G, seed=seed)
    fp = fingerprint(G, profile)
    return {
        "order": len(G),
        "su3": is_subgroup_of_su3(G),
        "class_count": G.classes.count,
        "profile": profile.as_json(),
        "sum_rules": verify_profile(profile, G),
        "abelian_invariants": list(abelian_invariants(G)),
        "det_image_order": det_image_order(G),
        "monomial_class": monomial_class(G),
        "cyclic_factor": has_cyclic_direct_factor(G),
        "fingerprint": {
            "center_order": fp.center_order,
            "derived_order": fp.derived_order,
            "element_order_counts": {str(k): v for k, v in fp.element_order_counts},
            "trace_multiset_digest": fp.trace_multiset_digest,
        },
    }


def cmd_classify(args, cfg):
    try:
        with open(args.path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError("cannot read %s: %s" % (args.path, exc)) from None
    if not isinstance(data, list) or not data:
        raise UsageError("generator file must hold a non-empty list of 3x3 matrices")
    try:
        mats = [from_json(m) for m in data]
    except (ValueError, TypeError) as exc:
        raise UsageError("bad matrix: %s" % exc) from None
    try:
        out = classify(mats, seed=cfg.seed, cap=cfg.element_cap)
    except NonUnitaryGenerator as exc:
        raise UsageError(str(exc)) from None
    if cfg.output == "json":
        json.dump(out, sys.stdout, indent=1, sort_keys=True)
        print()
    else:
        for key, val in out.items():
            if key == "profile":
                val = _profile_text(val)
            print("%-19s %s" % (key, json.dumps(val) if isinstance(val, (dict, list)) else val))
    return EXIT_OK


def cmd_export(args, cfg):
    fmt = args.format.lower()
    if fmt not in ("json", "csv"):
        raise UsageError("export format must be json or csv")
    reports = list(run_reports(_entries(args, cfg), cfg))
    buf = io.StringIO()
    write_reports(reports, fmt, buf)
    try:
        with open(args.path, "w", newline="") as fh:
            fh.write(buf.getvalue())
    except OSError as exc:
        raise UsageError("cannot write %s: %s" % (args.path, exc)) from None
    passed = sum(1 for r in reports if r["pass"])
    print("wrote %d entries to %s (PASS %d/%d)" % (len(reports), args.path, passed, len(reports)))
    return _status(reports)


SERIES_HELP = "series names: " + ", ".join(catalog.SERIES) + " (alias C = Cnl)"


def make_parser():
    p = argparse.ArgumentParser(prog="u3atlas", description=__doc__.split("\n")[0],
                                epilog=SERIES_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--seed", type=int, default=0, help="seed for the degree splitter")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap for closures")
    p.add_argument("--format", dest="output", choices=("text", "json", "csv"), default="text")
    p.add_argument("--cache-dir", default=None, help="report cache (U3ATLAS_CACHE_DIR overrides)")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build one group and verify it", epilog=SERIES_HELP)
    b.add_argument("spec", help='e.g. "Delta6n2j(n=5,j=3)"')

    for name in ("verify", "export"):
        v = sub.add_parser(name, help="verify the catalog" if name == "verify" else "write the full report")
        if name == "export":
            v.add_argument("format", help="json or csv")
            v.add_argument("path")
        v.add_argument("--series", help="comma-separated series filter")
        v.add_argument("--max-order", type=int, default=2000)
        v.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
        if name == "verify":
            v.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)

    pa = sub.add_parser("params", help="list (r,k) pairs or C-group parameters")
    pa.add_argument("which", help="rk or C")
    pa.add_argument("--max-r", type=int, default=217)
    pa.add_argument("--max-order", type=int, default=2000)

    c = sub.add_parser("classify", help="analyse a JSON list of generator matrices")
    c.add_argument("path")
    return p


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "params": cmd_params,
            "classify": cmd_classify, "export": cmd_export}


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = RunConfig(max_order=getattr(args, "max_order", 2000), jobs=getattr(args, "jobs", 1),
                        seed=args.seed, element_cap=args.cap, cache_dir=args.cache_dir, output=args.output)
        return COMMANDS[args.command](args, cfg)
    except (UsageError, catalog.InvalidSpec) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:
        print("internal error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
