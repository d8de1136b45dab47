"""Cyclic sieving checks: fixed-point counts against root-of-unity evaluations."""

from __future__ import annotations

import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Callable

from .actions import Action, cycle_lengths, make_action, permutation
from .families import FamilySpec, cardinality, enumerate_family
from .qpoly import IntPoly, eval_at_root, named_polynomial


def divisors(m: int) -> list:
    return [d for d in range(1, m + 1) if m % d == 0]


def count_fixed(spec: FamilySpec, action: Action, d: int, method: str = "direct") -> int:
    """Objects fixed by the d-th power of the generator.

    "direct" applies the generator d times, "gcd" applies it gcd(d, m) times,
    "cycles" reads the answer off the cycle type.
    """
    objs = enumerate_family(spec)
    if method == "cycles":
        return _fixed_from_cycles(cycle_lengths(permutation(action, objs)), d)
    steps = d if method == "direct" else gcd(d, action.order)
    count = 0
    for x in objs:
        y = x
        for _ in range(steps):
            y = action(y)
        count += y == x
    return count


def _fixed_from_cycles(lengths, d: int) -> int:
    return sum(L for L in lengths if d % L == 0)


def orbit_profile(spec: FamilySpec, action: Action) -> dict:
    """Orbit size -> number of orbits of that size."""
    lengths = cycle_lengths(permutation(action, enumerate_family(spec)))
    return dict(sorted(Counter(lengths).items()))


@dataclass(frozen=True)
class Triple:
    id: str
    params: tuple
    family: Callable
    action: Callable
    poly: Callable
    instances: Callable
    note: str = ""


def _rng(a, b):
    return range(a, b + 1)


def _t(tid, params, family, action, poly, instances, note=""):
    return Triple(tid, params, family, action, poly, instances, note)


F = FamilySpec
P = named_polynomial

TRIPLES = {t.id: t for t in [
    _t("T1", ("n",), lambda n: F("TRI", n), lambda n: ("ROT", n), lambda n: P("CAT", n=n - 2),
       lambda n: [{"n": n}] if n >= 3 else [], "triangulations of an n-gon, rotation"),
    _t("T2", ("n", "k"), lambda n, k: F("TRI_EAR", n, k=k), lambda n, k: ("ROT", n), lambda n, k: P("TRI_EAR", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(2, n // 2)] if n >= 4 else [], "triangulations by ears, rotation"),
    _t("T3", ("n",), lambda n: F("SYT", n), lambda n: ("PROMOTION", 2 * n), lambda n: P("CAT", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "two-row tableaux, promotion"),
    _t("T4", ("n",), lambda n: F("NCM", n), lambda n: ("ROT", 2 * n), lambda n: P("CAT", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "noncrossing matchings, rotation"),
    _t("T5", ("n",), lambda n: F("NCP", n), lambda n: ("KREWERAS", 2 * n), lambda n: P("CAT", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "noncrossing partitions, Kreweras complement"),
    _t("T6", ("n", "k"), lambda n, k: F("NCM_SH", n, k=k), lambda n, k: ("ROT", 2 * n), lambda n, k: P("G_CDES", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(2, n)] if n >= 2 else [], "matchings by short edges, rotation"),
    _t("T7", ("n", "k"), lambda n, k: F("SYT_CDES", n, k=k), lambda n, k: ("PROMOTION", 2 * n), lambda n, k: P("G_CDES", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(2, n)] if n >= 2 else [], "tableaux by cyclic descents, promotion"),
    _t("T8", ("n", "k"), lambda n, k: F("NCP_BLOCKS", n, k=k), lambda n, k: ("ROT", n), lambda n, k: P("NAR", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(1, n)] if n >= 1 else [], "partitions by blocks, rotation"),
    _t("T9", ("n", "k"), lambda n, k: F("NCM_EVEN", n, k=k), lambda n, k: ("ROT", n), lambda n, k: P("NAR", n=n, k=k + 1),
       lambda n: [{"n": n, "k": k} for k in _rng(0, n - 1)] if n >= 1 else [], "matchings by even edges, two-step rotation"),
    _t("T10", ("n",), lambda n: F("NCC", n + 1), lambda n: ("ROT", n), lambda n: P("CAT", n=n + 1),
       lambda n: [{"n": n}] if n >= 1 else [], "loop/edge configurations on n vertices, rotation"),
    _t("T11", ("n", "e", "l"), lambda n, e, l: F("NCC_EL", n + 1, e=e, l=l), lambda n, e, l: ("ROT", n),
       lambda n, e, l: P("QNCC", n=n, e=e, l=l),
       lambda n: [{"n": n, "e": e, "l": l} for e in _rng(0, n // 2) for l in _rng(0, n - 2 * e)] if n >= 1 else [],
       "configurations by edges and loops, rotation"),
    _t("T12", ("n", "k"), lambda n, k: F("NCC_K", n + 1, k=k), lambda n, k: ("ROT", n), lambda n, k: P("NAR", n=n + 1, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(1, n + 1)] if n >= 1 else [], "configurations by size, rotation"),
    _t("T13", ("n", "k"), lambda n, k: F("SSYT", n - 1, k=k), lambda n, k: ("K_PROMOTION", n - 1), lambda n, k: P("NAR", n=n, k=k + 1),
       lambda n: [{"n": n, "k": k} for k in _rng(1, n - 1)] if n >= 2 else [], "two-column tableaux, promotion"),
    _t("T13b", ("n", "k"), lambda n, k: F("SSYT", n - 1, k=k), lambda n, k: ("PHI_SSYT", n), lambda n, k: P("NAR", n=n, k=k + 1),
       lambda n: [{"n": n, "k": k} for k in _rng(1, n - 1)] if n >= 2 else [], "two-column tableaux, partition rotation"),
    _t("T14", ("n",), lambda n: F("NCC", n + 1), lambda n: ("TWIST", 2 * n), lambda n: P("TWIST_CAT", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "configurations, twist"),
    _t("T15", ("n",), lambda n: F("BW", 2 * n, k=n), lambda n: ("SHIFT", 2 * n), lambda n: P("CATB", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "balanced binary words, cyclic shift"),
    _t("T16", ("n",), lambda n: F("SKEW_SYT", n, s=n), lambda n: ("PROMOTION_SKEW", 2 * n), lambda n: P("CATB", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "skew two-row tableaux, promotion"),
    _t("T17", ("n",), lambda n: F("OI", n, s=n), lambda n: ("ROWMOTION", 2 * n), lambda n: P("CATB", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "type B root ideals, rowmotion"),
    _t("T18", ("n",), lambda n: F("NCPB", n), lambda n: ("ROT_B", n), lambda n: P("CATB", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "symmetric noncrossing partitions, rotation"),
    _t("T19", ("n", "k"), lambda n, k: F("BW_CDES", n, k=k), lambda n, k: ("SHIFT", 2 * n), lambda n, k: P("QBW", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(1, n)] if n >= 1 else [], "balanced words by cyclic descents, shift"),
    _t("T20", ("n",), lambda n: F("NCCB", n + 1), lambda n: ("TWIST_SQUARED", n), lambda n: P("CATB", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "marked configurations, squared twist"),
    _t("T21", ("n", "e", "l"), lambda n, e, l: F("NCCB_EL", n + 1, e=e, l=l), lambda n, e, l: ("ROT", n),
       lambda n, e, l: P("QNCCB_TRUE", n=n, e=e, l=l),
       lambda n: [{"n": n, "e": e, "l": l} for e in _rng(0, n // 2) for l in _rng(0, n - 2 * e)] if n >= 1 else [],
       "marked configurations by edges and loops, rotation"),
    _t("T22", ("n", "k"), lambda n, k: F("NCCB_K", n + 1, k=k), lambda n, k: ("ROT", n), lambda n, k: P("U_NK", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(0, n)] if n >= 1 else [], "marked configurations by size, rotation"),
    _t("T23a", ("n", "k"), lambda n, k: F("NCPB_BLOCKS", n, k=k), lambda n, k: ("ROT_B", n), lambda n, k: P("PI_B_COEFF", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(1, 2 * n)] if n >= 1 else [], "symmetric partitions by blocks"),
    _t("T23b", ("n", "k"), lambda n, k: F("NCPB_BLOCKS_PAIR", n, k=k), lambda n, k: ("ROT_B", n),
       lambda n, k: P("NARB_PAIRED", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(0, n)] if n >= 1 else [], "symmetric partitions by paired block counts"),
    _t("T23c", ("n", "k"), lambda n, k: F("NCMB_EVEN", n, k=k - 1), lambda n, k: ("ROT_B", n), lambda n, k: P("PI_B_COEFF", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(1, 2 * n)] if n >= 1 else [], "symmetric matchings by even edges"),
    _t("T23d", ("n", "k"), lambda n, k: F("NCMB_EVEN_PAIR", n, k=k), lambda n, k: ("ROT_B", n),
       lambda n, k: P("NARB_PAIRED", n=n, k=k),
       lambda n: [{"n": n, "k": k} for k in _rng(0, n)] if n >= 1 else [], "symmetric matchings by paired even-edge counts"),
    _t("T24", ("n",), lambda n: F("TRIB", n), lambda n: ("ROT_B", n + 1), lambda n: P("CATB", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "symmetric triangulations, rotation"),
    _t("T25", ("n", "k", "r"), lambda n, k, r: F("MARKED_NCM_EVEN", n, k=k, r=r), lambda n, k, r: ("ROT", n),
       lambda n, k, r: P("MARKED_NCM", n=n, k=k, r=r),
       lambda n: [{"n": n, "k": k, "r": r} for k in _rng(0, n - 1) for r in _rng(0, n + 1)] if n >= 1 else [],
       "matchings with marked regions by even edges, two-step rotation"),
]}

# expected to fail somewhere in range
NEGATIVE_CONTROLS = {t.id: t for t in [
    _t("NC_QNCCB", ("n", "e", "l"), lambda n, e, l: F("NCCB_EL", n + 1, e=e, l=l), lambda n, e, l: ("ROT", n),
       lambda n, e, l: P("QNCCB", n=n, e=e, l=l),
       lambda n: [{"n": n, "e": e, "l": l} for e in _rng(0, n // 2) for l in _rng(0, n - 2 * e)] if n >= 1 else [],
       "candidate refinement for marked configurations"),
    _t("NC_TWIST_B", ("n",), lambda n: F("NCCB", n + 1), lambda n: ("TWIST", 2 * n), lambda n: P("CATB", n=n),
       lambda n: [{"n": n}] if n >= 1 else [], "marked configurations, unsquared twist"),
]}


def get_triple(tid: str) -> Triple:
    if tid in TRIPLES:
        return TRIPLES[tid]
    if tid in NEGATIVE_CONTROLS:
        return NEGATIVE_CONTROLS[tid]
    raise KeyError(f"unknown triple {tid!r}")


def _spot_seed(tid: str, params: dict) -> int:
    key = tid + "".join(f"|{k}={params[k]}" for k in sorted(params))
    return sum((i + 1) * ord(ch) for i, ch in enumerate(key))


def verify_triple(tid: str, params: dict, spot_checks: int = 2) -> dict:
    """Check every divisor row of a triple. Wall time goes in `millis`, outside the deterministic part."""
    t = get_triple(tid)
    start = time.perf_counter()
    args = [params[p] for p in t.params]
    spec = t.family(*args)
    aname, m = t.action(*args)
    action = make_action(aname, spec, order=m)
    poly: IntPoly = t.poly(*args)
    objs = enumerate_family(spec)
    lengths = cycle_lengths(permutation(action, objs))
    rows = []
    for d in divisors(m):
        fixed = _fixed_from_cycles(lengths, d)
        val = eval_at_root(poly, m, d)
        rows.append({"d": d, "order": val.order, "fixed": fixed, "eval": val.to_json(), "ok": val.is_integer and val.value == fixed})
    rng = random.Random(_spot_seed(tid, params))
    spots = []
    for _ in range(spot_checks):
        d = rng.randrange(1, 3 * m + 1)
        g = gcd(d, m)
        same_fixed = _fixed_from_cycles(lengths, d) == _fixed_from_cycles(lengths, g)
        same_eval = eval_at_root(poly, m, d).residue == eval_at_root(poly, m, g).residue
        spots.append({"d": d, "gcd": g, "ok": same_fixed and same_eval})
    card_ok = len(objs) == cardinality(spec) and poly(1) == len(objs)
    ok = all(r["ok"] for r in rows) and all(s["ok"] for s in spots) and card_ok
    return {
        "triple": tid,
        "params": dict(params),
        "family": str(spec),
        "action": aname,
        "m": m,
        "size": len(objs),
        "poly": poly.to_json(),
        "rows": rows,
        "spot_checks": spots,
        "cardinality_ok": card_ok,
        "pass": ok,
        "millis": round((time.perf_counter() - start) * 1000, 3),
    }


def verify_refinement(parent: tuple, children: list) -> dict:
    """Children must partition the parent set, be preserved by its action, and their polynomials must sum to the parent's."""
    pid, pparams = parent
    pt = get_triple(pid)
    pargs = [pparams[p] for p in pt.params]
    pspec = pt.family(*pargs)
    aname, m = pt.action(*pargs)
    action = make_action(aname, pspec, order=m)
    total = IntPoly()
    child_objs = []
    witnesses = []
    preserved = True
    for cid, cparams in children:
        ct = get_triple(cid)
        cargs = [cparams[p] for p in ct.params]
        total = total + ct.poly(*cargs)
        objs = enumerate_family(ct.family(*cargs))
        members = set(objs)
        for x in objs:
            if action(x) not in members:
                preserved = False
                witnesses.append({"child": cid, "params": dict(cparams), "object": repr(x)})
                break
        child_objs += objs
    parent_objs = enumerate_family(pspec)
    poly_ok = total == pt.poly(*pargs)
    union_ok = len(child_objs) == len(set(child_objs)) and set(child_objs) == set(parent_objs)
    if not union_ok:
        extra = set(child_objs) ^ set(parent_objs)
        witnesses.append({"partition_difference": repr(sorted(extra)[:1])})
    return {"parent": pid, "poly_sum_ok": poly_ok, "partition_ok": union_ok, "preserved": preserved,
            "witnesses": witnesses, "pass": poly_ok and union_ok and preserved}


def threads() -> int:
    """Worker count: CSPKIT_THREADS if set to a positive integer, else the number of cores."""
    default = os.cpu_count() or 1
    try:
        return max(1, int(os.environ.get("CSPKIT_THREADS", default)))
    except ValueError:
        return default


def _run(job):
    tid, params = job
    return verify_triple(tid, params)


def verify_many(jobs: list, workers: int | None = None) -> list:
    """Run (triple, params) jobs, possibly in parallel; results come back in job order."""
    workers = workers or threads()
    if workers <= 1 or len(jobs) <= 1:
        return [_run(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run, jobs, chunksize=1))


def instances(tid: str, n_lo: int, n_hi: int) -> list:
    t = get_triple(tid)
    return [(tid, p) for n in range(n_lo, n_hi + 1) for p in t.instances(n)]
