"""Command line front end: batch verification and small inspection commands."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from importlib import resources

from . import bijections, csp
from .actions import make_action, order_check
from .errors import CspkitError
from .families import CombObject, FamilySpec, enumerate_family
from .qpoly import named_polynomial
from .stats import distribution

SCHEMA = 1


class UsageError(Exception):
    pass


def _tuplify(x):
    if isinstance(x, list):
        return tuple(_tuplify(y) for y in x)
    return x


def obj_to_json(obj: CombObject) -> dict:
    return {"tag": obj.tag, "data": json.loads(json.dumps(obj.data))}


def obj_from_json(d: dict) -> CombObject:
    try:
        return CombObject(d["tag"], _tuplify(d["data"]))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"expected {{\"tag\": ..., \"data\": ...}}: {exc}") from exc


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _params(args, names=("k", "s", "e", "l", "r")) -> dict:
    return {x: getattr(args, x) for x in names if getattr(args, x, None) is not None}


def _spec(args) -> FamilySpec:
    return FamilySpec(args.family, args.n, **_params(args))


def load_manifest(path: str | None = None) -> dict:
    if path:
        with open(path) as fh:
            return json.load(fh)
    return json.loads(resources.files("cspkit").joinpath("manifest.json").read_text())


def parse_range(text: str) -> tuple:
    try:
        if ".." in text:
            a, b = text.split("..")
            return int(a), int(b)
        return int(text), int(text)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}, expected a..b") from exc


# output


def _clean(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "millis"}


def render(reports: list, fmt: str, timings: bool) -> str:
    meta = {"millis": {f"{r['triple']}{_key(r['params'])}": r["millis"] for r in reports}, "threads": csp.threads()}
    if fmt == "json":
        payload = {"schema": SCHEMA, "results": [_clean(r) for r in reports], "pass": all(r["pass"] for r in reports)}
        if timings:
            payload["metadata"] = meta
        return _dump(payload) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["triple", "params", "d", "order", "fixed", "eval", "ok"])
        for r in reports:
            for row in r["rows"]:
                ev = row["eval"] if isinstance(row["eval"], str) else "non-integer"
                w.writerow([r["triple"], _key(r["params"]), row["d"], row["order"], row["fixed"], ev, int(row["ok"])])
        return buf.getvalue()
    lines = []
    for r in reports:
        status = "PASS" if r["pass"] else "FAIL"
        lines.append(f"{status} {r['triple']}{_key(r['params'])} {r['family']} {r['action']} m={r['m']} |X|={r['size']}")
        for row in r["rows"]:
            if not row["ok"]:
                lines.append(f"  d={row['d']} fixed={row['fixed']} eval={row['eval']}")
    passed = sum(r["pass"] for r in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    if timings:
        lines.append(f"# total {sum(r['millis'] for r in reports):.1f} ms")
    return "\n".join(lines) + "\n"


def _key(params: dict) -> str:
    return "(" + ",".join(f"{k}={params[k]}" for k in sorted(params)) + ")"


# commands


def cmd_poly(args) -> int:
    p = named_polynomial(args.id, n=args.n, **_params(args))
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "id": args.id, "params": {"n": args.n, **_params(args)}, "coeffs": p.to_json()}))
    else:
        print(p)
    return 0


def cmd_enumerate(args) -> int:
    objs = enumerate_family(_spec(args))
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "family": str(_spec(args)), "count": len(objs), "objects": [obj_to_json(o) for o in objs]}))
    else:
        for o in objs:
            print(_dump(obj_to_json(o)))
    return 0


def cmd_stat(args) -> int:
    p = distribution(_spec(args), args.stat, args.shift)
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "family": str(_spec(args)), "stat": args.stat, "shift": args.shift, "coeffs": p.to_json()}))
    else:
        print(p)
    return 0


def cmd_biject(args) -> int:
    try:
        obj = obj_from_json(json.loads(sys.stdin.read()))
    except json.JSONDecodeError as exc:
        raise UsageError(f"stdin is not JSON: {exc}") from exc
    kw = {}
    if args.id == "BW_TO_NCM_SYM":
        if args.inverse:
            if args.p is None:
                raise UsageError("--p is required for the inverse of BW_TO_NCM_SYM")
            kw["p"] = args.p
        else:
            if args.n is None:
                raise UsageError("--n is required for BW_TO_NCM_SYM")
            kw["n"] = args.n
    fn = bijections.inverse if args.inverse else bijections.apply
    print(_dump(obj_to_json(fn(args.id, obj, **kw))))
    return 0


def cmd_orbits(args) -> int:
    spec = _spec(args)
    action = make_action(args.action, spec, order=args.order)
    profile = csp.orbit_profile(spec, action)
    rep = order_check(action, spec)
    payload = {
        "schema": SCHEMA,
        "family": str(spec),
        "action": args.action,
        "declared_order": rep.declared,
        "order": rep.order,
        "divides": rep.divides,
        "strict_divisor": rep.strict_divisor,
        "orbits": {str(k): v for k, v in profile.items()},
    }
    if args.format == "json":
        print(_dump(payload))
    else:
        sizes = " ".join(f"{k}x{v}" for k, v in profile.items())
        flag = " (strict divisor)" if rep.strict_divisor else ""
        print(f"{spec} {args.action}: order {rep.order} of declared {rep.declared}{flag}; orbit sizes {sizes}")
    return 0 if rep.divides else 1


def _filter(jobs, args):
    fixed = _params(args, ("k", "e", "l", "r"))
    return [(t, p) for t, p in jobs if all(p.get(k) == v for k, v in fixed.items())]


def _finish(reports, args) -> int:
    out = render(reports, args.format, args.timings)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    ok = all(r["pass"] for r in reports)
    return 0 if ok or not args.strict else 1


def cmd_verify(args) -> int:
    lo, hi = parse_range(args.n_range)
    try:
        csp.get_triple(args.triple)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    jobs = _filter(csp.instances(args.triple, lo, hi), args)
    if not jobs:
        raise UsageError("no instances in range")
    return _finish(csp.verify_many(jobs, args.jobs), args)


def cmd_verify_all(args) -> int:
    manifest = load_manifest(args.manifest)
    jobs = []
    groups = ["triples"] + (["negative_controls"] if args.include_controls else [])
    for group in groups:
        for tid, (lo, hi) in manifest.get(group, {}).items():
            if args.max_n is not None:
                hi = min(hi, args.max_n)
            jobs += csp.instances(tid, lo, hi)
    start = time.perf_counter()
    reports = csp.verify_many(jobs, args.jobs)
    if args.timings:
        sys.stderr.write(f"verify-all: {len(jobs)} instances in {time.perf_counter() - start:.1f} s\n")
    return _finish(reports, args)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cspkit", description="Verify cyclic sieving triples by exhaustive enumeration.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def family_args(p, family=True):
        if family:
            p.add_argument("family")
        p.add_argument("--n", type=int, required=True)
        for x in ("k", "s", "e", "l", "r"):
            p.add_argument(f"--{x}", type=int)
        p.add_argument("--format", choices=["json", "text"], default="text")

    p = sub.add_parser("poly", help="print a named polynomial")
    p.add_argument("id")
    family_args(p, family=False)
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("enumerate", help="list a family")
    family_args(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("stat", help="distribution of a statistic over a family")
    p.add_argument("stat")
    family_args(p)
    p.add_argument("--shift", type=int, default=0)
    p.set_defaults(fn=cmd_stat)

    p = sub.add_parser("biject", help="apply a bijection to a JSON object read from stdin")
    p.add_argument("id")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.set_defaults(fn=cmd_biject)

    p = sub.add_parser("orbits", help="orbit sizes and exact order of an action")
    p.add_argument("action")
    family_args(p)
    p.add_argument("--order", type=int)
    p.set_defaults(fn=cmd_orbits)

    def run_args(p):
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--output")
        p.add_argument("--jobs", type=int, help="worker processes (default: CSPKIT_THREADS or the core count)")
        p.add_argument("--timings", action="store_true", help="add wall-time metadata")
        p.add_argument("--no-strict", dest="strict", action="store_false", help="exit 0 even on mismatches")

    p = sub.add_parser("verify", help="verify one triple over a range of n")
    p.add_argument("triple")
    p.add_argument("--n-range", required=True)
    for x in ("k", "e", "l", "r"):
        p.add_argument(f"--{x}", type=int)
    run_args(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("verify-all", help="verify every triple within the manifest bounds")
    p.add_argument("--max-n", type=int)
    p.add_argument("--manifest")
    p.add_argument("--include-controls", action="store_true", help="also run the negative controls (these fail)")
    run_args(p)
    p.set_defaults(fn=cmd_verify_all)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, CspkitError, KeyError) as exc:
        sys.stderr.write(f"cspkit: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
