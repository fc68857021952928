"""Command-line front end: ``geonum {gen,compute,verify,fuzz}``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import exact as ex
from .ehrhart import ehrhart_polynomial, lattice_surface_area, root_sum
from .gallery import RANDOM_KINDS, make, parse_body
from .lattice import Lattice, lattice_from_json
from .minima import successive_minima
from .polytope import PolytopeError, centroid, from_json, surface_area, volume
from .verify import (
    CHECK_IDS,
    DEFAULT_TOLERANCE,
    CheckNotApplicable,
    Context,
    FuzzConfig,
    applicable,
    fuzz_campaign,
    reports_to_csv,
    reports_to_json,
    run_check,
)

QUANTITIES = ("volume", "centroid", "minima", "surface", "lattice-surface", "ehrhart", "root-sum")


class UsageError(Exception):
    pass


def _load_body(args) -> tuple:
    if bool(args.body) == bool(args.input):
        raise UsageError("exactly one of --body or --in is required")
    if args.body:
        try:
            return make(parse_body(args.body)), args.body
        except ValueError as e:
            raise UsageError(str(e)) from None
    try:
        with open(args.input) as fh:
            return from_json(fh.read()), os.path.basename(args.input)
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as e:
        raise UsageError("cannot read %s: %s" % (args.input, e)) from None


def _load_lattice(spec: str | None, n: int) -> Lattice | None:
    """``--lattice`` accepts a JSON file, inline JSON, ``Z`` or ``diag:d1,...,dn``."""
    if spec is None or spec == "Z":
        return None
    try:
        if spec.startswith("diag:"):
            d = [ex.frac(x) for x in spec[5:].split(",")]
            L = Lattice(ex.diag(d))
        elif spec.lstrip().startswith("{"):
            L = lattice_from_json(spec)
        else:
            with open(spec) as fh:
                L = lattice_from_json(fh.read())
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as e:
        raise UsageError("bad lattice %r: %s" % (spec, e)) from None
    if L.dim != n:
        raise UsageError("lattice dimension %d does not match body dimension %d" % (L.dim, n))
    return L


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _split(s: str) -> list:
    return [x for x in (t.strip() for t in s.split(",")) if x]


def _cmd_gen(args) -> int:
    P, _ = _load_body(args)
    _emit(P.dumps(), args.out)
    return 0


def _float(x) -> str:
    return "%.12g" % x


def _compute(what: str, P, L, tol) -> object:
    if what == "volume":
        return ex.fmt(volume(P))
    if what == "centroid":
        return ex.fmt_vec(centroid(P))
    if what == "minima":
        return successive_minima(P, L).to_json()
    if what == "surface":
        return {"value": _float(surface_area(P)), "tolerance": tol}
    if L is not None and not L.is_standard:
        raise UsageError("%s is defined for Z^n only" % what)
    if what == "lattice-surface":
        return ex.fmt(lattice_surface_area(P))
    if what == "ehrhart":
        return ehrhart_polynomial(P).to_json()
    if what == "root-sum":
        return ex.fmt(root_sum(P))
    raise UsageError("unknown quantity %r; choose from %s" % (what, ", ".join(QUANTITIES)))


def _cmd_compute(args) -> int:
    P, label = _load_body(args)
    L = _load_lattice(args.lattice, P.dim)
    whats = _split(args.what or "volume")
    for w in whats:
        if w not in QUANTITIES:
            raise UsageError("unknown quantity %r; choose from %s" % (w, ", ".join(QUANTITIES)))
    results = {w: _compute(w, P, L, args.tolerance) for w in whats}
    if args.format == "json":
        _emit(json.dumps(results, indent=1), args.out)
    elif args.format == "csv":
        lines = ["quantity,value"] + ["%s,%s" % (k, json.dumps(v) if not isinstance(v, str) else v)
                                      for k, v in results.items()]
        _emit("\n".join(lines), args.out)
    else:
        if len(results) == 1:
            (v,) = results.values()
            _emit(v if isinstance(v, str) else json.dumps(v), args.out)
        else:
            _emit("\n".join("%s: %s" % (k, v if isinstance(v, str) else json.dumps(v))
                            for k, v in results.items()), args.out)
    return 0


def _format_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return reports_to_json(reports)
    if fmt == "csv":
        return reports_to_csv(reports).rstrip("\n")
    lines = []
    for r in reports:
        d = r.to_json()
        rel = "<" if r.strict_expected else "<="
        tol = "" if r.tolerance is None else " (tol %g)" % r.tolerance
        lines.append("%-16s %s  %s %s %s  holds=%s equality=%s [%s]%s%s" % (
            r.check_id, r.body, d["lhs"], rel, d["rhs"], r.holds, r.equality, r.status, tol,
            ("  " + r.notes) if r.notes else ""))
    return "\n".join(lines)


def _cmd_verify(args) -> int:
    P, label = _load_body(args)
    L = _load_lattice(args.lattice, P.dim)
    ctx = Context(P, L, label)
    ids = _split(args.checks or "all-applicable")
    if "all-applicable" in ids:
        ids = [c for c in CHECK_IDS if applicable(c, ctx)[0]]
    reports = []
    for cid in ids:
        if cid not in CHECK_IDS:
            raise UsageError("unknown check %r" % cid)
        try:
            reports.append(run_check(cid, ctx, tolerance=args.tolerance))
        except CheckNotApplicable as e:
            raise UsageError(str(e)) from None
    _emit(_format_reports(reports, args.format), args.out)
    return 1 if any(r.violation for r in reports) else 0


def _cmd_fuzz(args) -> int:
    kinds = _split(args.kind or "centered")
    for k in kinds:
        if k not in RANDOM_KINDS:
            raise UsageError("unknown kind %r; choose from %s" % (k, ", ".join(RANDOM_KINDS)))
    try:
        dims = [int(d) for d in _split(args.dim or "2")]
    except ValueError:
        raise UsageError("--dim takes comma separated integers") from None
    if any(d < 1 or d > 5 for d in dims):
        raise UsageError("fuzzing supports 1 <= n <= 5")
    ids = _split(args.checks or "all-applicable")
    for cid in ids:
        if cid != "all-applicable" and cid not in CHECK_IDS:
            raise UsageError("unknown check %r" % cid)
    cfg = FuzzConfig(kinds, dims, args.count, args.seed, ids, tolerance=args.tolerance)
    res = fuzz_campaign(cfg)
    if args.format == "text":
        body = _format_reports(res.violations, "text") if res.violations else ""
        text = json.dumps(res.summary, indent=1) + ("\n" + body if body else "")
    elif args.format == "csv":
        text = reports_to_csv(res.reports).rstrip("\n")
    else:
        text = json.dumps({"summary": res.summary,
                           "reports": [r.to_json() for r in res.reports]}, indent=1)
    _emit(text, args.out)
    return 1 if res.violations else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geonum", description="Exact geometry-of-numbers toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, body=True):
        if body:
            sp.add_argument("--body", help="body spec such as T:3, Kell:3:5, sym-cross:1,1/2")
            sp.add_argument("--in", dest="input", help="polytope JSON file")
            sp.add_argument("--lattice", help="lattice JSON file, inline JSON, Z or diag:d1,...")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
        sp.add_argument("--format", choices=("json", "csv", "text"), default="text")

    g = sub.add_parser("gen", help="write a polytope JSON for a body spec")
    common(g)
    c = sub.add_parser("compute", help="print functionals of a body")
    common(c)
    c.add_argument("--what", help="comma list of: " + ", ".join(QUANTITIES))
    v = sub.add_parser("verify", help="run inequality checks on one body")
    common(v)
    v.add_argument("--checks", help="comma list of check ids or all-applicable")
    f = sub.add_parser("fuzz", help="run checks over seeded random bodies")
    common(f, body=False)
    f.add_argument("--checks", help="comma list of check ids or all-applicable")
    f.add_argument("--kind", help="comma list of: " + ", ".join(RANDOM_KINDS))
    f.add_argument("--dim", help="comma list of dimensions (<= 5)")
    f.add_argument("--count", type=int, default=50)
    f.add_argument("--seed", type=int, default=0)
    return p


COMMANDS = {"gen": _cmd_gen, "compute": _cmd_compute, "verify": _cmd_verify, "fuzz": _cmd_fuzz}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except PolytopeError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
