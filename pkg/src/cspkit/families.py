"""Enumeration, closed-form cardinalities and validation for the finite families."""

from __future__ import annotations

from dataclasses import dataclass, fields
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple

from . import combinat as C
from .errors import FamilyMismatch, OutOfDomain

# object type tags
BINARY_WORD = "BinaryWord"
LATTICE_PATH = "LatticePath"
TWO_ROW_SYT = "TwoRowSYT"
SKEW_TWO_ROW_SYT = "SkewTwoRowSYT"
MATCHING = "Matching"
SET_PARTITION = "SetPartition"
NCC_CONFIG = "NCCConfig"
TRIANGULATION = "Triangulation"
SSYT_2COL = "SSYT2Col"
ROOT_IDEAL = "RootIdeal"
MARKED_MATCHING = "MarkedMatching"


class CombObject(NamedTuple):
    """A family-tagged canonical encoding.

    data layouts:
      BinaryWord, LatticePath, RootIdeal: tuple of bits
      TwoRowSYT: first-row entries
      SkewTwoRowSYT: (s, row word)
      Matching: partner tuple
      SetPartition: (size, blocks)
      NCCConfig: (partner tuple, marked edge or ())
      Triangulation: (polygon size, sorted diagonals)
      SSYT2Col: (max entry, s, first column, second column); column one starts s rows lower
      MarkedMatching: (partner tuple, marked regions)
    """

    tag: str
    data: tuple


@dataclass(frozen=True)
class FamilySpec:
    id: str
    n: int
    k: int | None = None
    s: int | None = None
    e: int | None = None
    l: int | None = None
    r: int | None = None

    def params(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "id" and getattr(self, f.name) is not None}

    def __str__(self):
        inner = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.id}({inner})"


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1) if n >= 0 else 0


def narayana(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


def motzkin(n: int) -> int:
    return sum(comb(n, 2 * e) * catalan(e) for e in range(n // 2 + 1))


def _pi_b_count(n: int, k: int) -> int:
    j, odd = divmod(k, 2)
    if k < 0:
        return 0
    if odd:
        return comb(n, j) * comb(n - 1, j) if j <= n else 0
    return comb(n, j) * comb(n - 1, j - 1) if 1 <= j <= n else 0


# raw generators (unsorted payloads)


def _words(length: int, ones: int):
    for pos in combinations(range(1, length + 1), ones):
        yield C.word_from_ones(length, pos)


def _paths(n: int, s: int):
    """Words with n zeros and n ones whose depth is at most s."""
    out = []
    w = []

    def rec(zeros, ones, h):
        if zeros == n and ones == n:
            out.append(tuple(w))
            return
        if zeros < n:
            w.append(0)
            rec(zeros + 1, ones, h - 1)
            w.pop()
        if ones < n and h + 1 <= s:
            w.append(1)
            rec(zeros, ones + 1, h + 1)
            w.pop()

    rec(0, 0, 0)
    return out


def _ballot(length: int):
    """Words of the given length whose prefixes never have more 1s than 0s."""
    out = []
    w = []

    def rec(h):
        if len(w) == length:
            out.append(tuple(w))
            return
        w.append(0)
        rec(h + 1)
        w.pop()
        if h > 0:
            w.append(1)
            rec(h - 1)
            w.pop()

    rec(0)
    return out


@lru_cache(maxsize=None)
def _ncp(L: int) -> tuple:
    """Noncrossing partitions of 1..L as lists of blocks (first block contains 1)."""
    if L == 0:
        return ((),)
    out = []
    for m in range(1, L + 1):
        heads = [((1,),)] if m == 1 else [((p[0] + (m,)),) + p[1:] for p in _ncp(m - 1)]
        for head in heads:
            for tail in _ncp(L - m):
                out.append(head + tuple(tuple(x + m for x in b) for b in tail))
    return tuple(out)


@lru_cache(maxsize=None)
def _ncc(v: int) -> tuple:
    """Loop/edge configurations on 1..v as partner lists."""
    if v == 0:
        return ((),)
    out = []
    for rest in _ncc(v - 1):
        shifted = tuple(p + 1 if p else 0 for p in rest)
        out.append((0,) + shifted)
        out.append((1,) + shifted)
    for j in range(2, v + 1):
        for inner in _ncc(j - 2):
            for rest in _ncc(v - j):
                p = [j]
                p += [x + 1 if x else 0 for x in inner]
                p.append(1)
                p += [x + j if x else 0 for x in rest]
                out.append(tuple(p))
    return tuple(out)


@lru_cache(maxsize=None)
def _triangulations(L: int) -> tuple:
    """Triangulations of a polygon with vertices 0..L-1, as sets of diagonals."""
    if L < 3:
        return (frozenset(),)

    def rec(lo, hi):
        if hi - lo < 2:
            return [frozenset()]
        res = []
        for k in range(lo + 1, hi):
            for a in rec(lo, k):
                for b in rec(k, hi):
                    extra = set()
                    if k - lo > 1:
                        extra.add((lo, k))
                    if hi - k > 1:
                        extra.add((k, hi))
                    res.append(a | b | extra)
        return res

    return tuple(rec(0, L - 1))


def _ssyt_columns(k: int, s: int, N: int):
    for c2 in combinations(range(1, N + 1), k):
        for c1 in combinations(range(1, N + 1), k):
            if all(c1[i] <= c2[i + s] for i in range(k - s)):
                yield c1, c2


def _ncmb(n: int):
    for w in _words(2 * n, n):
        yield C.cyclic_match(w + w)


def _raw(spec: FamilySpec):
    fid = spec.id
    n = spec.n
    if n is None or n < 0:
        raise OutOfDomain(f"{fid} needs n >= 0")
    if fid == "BW":
        return BINARY_WORD, _words(n, _req(spec, "k"))
    if fid == "BW_CDES":
        k = _req(spec, "k")
        return BINARY_WORD, (w for w in _words(2 * n, n) if C.cdes_word(w) == k)
    if fid == "PATHS":
        return LATTICE_PATH, _paths(n, n)
    if fid == "PATHS_S":
        return LATTICE_PATH, _paths(n, _req(spec, "s"))
    if fid == "DYCK":
        return LATTICE_PATH, _paths(n, 0)
    if fid == "DYCK_PEAKS":
        k = _req(spec, "k")
        return LATTICE_PATH, (w for w in _paths(n, 0) if len(C.peaks(w)) == k)
    if fid == "SYT":
        return TWO_ROW_SYT, (C.syt_from_word(w) for w in _paths(n, 0))
    if fid == "SYT_CDES":
        k = _req(spec, "k")
        from .stats import syt_cdes

        return TWO_ROW_SYT, (t for t in (C.syt_from_word(w) for w in _paths(n, 0)) if syt_cdes(t, n) == k)
    if fid == "SKEW_SYT":
        s = _req(spec, "s")
        return SKEW_TWO_ROW_SYT, ((s, w) for w in _paths(n, s))
    if fid == "NCM":
        return MATCHING, (C.stack_match(w) for w in _paths(n, 0))
    if fid == "NCM_EVEN":
        k = _req(spec, "k")
        return MATCHING, (m for m in (C.stack_match(w) for w in _paths(n, 0)) if C.even_edges(m) == k)
    if fid == "NCM_SH":
        k = _req(spec, "k")
        return MATCHING, (m for m in (C.stack_match(w) for w in _paths(n, 0)) if C.short_edges(m) == k)
    if fid == "NCMB":
        return MATCHING, _ncmb(n)
    if fid == "NCMB_EVEN":
        k = _req(spec, "k")
        return MATCHING, (m for m in _ncmb(n) if C.even_edges(m) == k)
    if fid == "NCMB_EVEN_PAIR":
        k = _req(spec, "k")
        return MATCHING, (m for m in _ncmb(n) if 2 * k - 1 <= C.even_edges(m) <= 2 * k)
    if fid == "NCP":
        return SET_PARTITION, ((n, C.canonical_blocks(p)) for p in _ncp(n))
    if fid == "NCP_BLOCKS":
        k = _req(spec, "k")
        return SET_PARTITION, ((n, C.canonical_blocks(p)) for p in _ncp(n) if len(p) == k)
    if fid in ("NCPB", "NCPB_BLOCKS", "NCPB_BLOCKS_PAIR"):
        gen = ((2 * n, C.ncm_to_ncp(m)) for m in _ncmb(n)) if n else iter([(0, ())])
        if fid == "NCPB_BLOCKS":
            k = _req(spec, "k")
            gen = (x for x in gen if len(x[1]) == k)
        elif fid == "NCPB_BLOCKS_PAIR":
            k = _req(spec, "k")
            gen = (x for x in gen if 2 * k <= len(x[1]) <= 2 * k + 1)
        return SET_PARTITION, gen
    if fid in ("NCC", "NCC_K", "NCC_EL", "NCC_BY_LOOPS"):
        if n < 1:
            raise OutOfDomain("NCC(n) needs n >= 1; it lives on n - 1 vertices")
        gen = ((p, ()) for p in _ncc(n - 1))
        if fid == "NCC_K":
            k = _req(spec, "k")
            gen = (x for x in gen if len(C.ncc_edges(x[0])) + C.ncc_loops(x[0]) == k - 1)
        elif fid == "NCC_EL":
            e, l = _req(spec, "e"), _req(spec, "l")
            gen = (x for x in gen if len(C.ncc_edges(x[0])) == e and C.ncc_loops(x[0]) == l)
        elif fid == "NCC_BY_LOOPS":
            l = _req(spec, "l")
            gen = (x for x in gen if C.ncc_loops(x[0]) == l)
        return NCC_CONFIG, gen
    if fid in ("NCCB", "NCCB_EL", "NCCB_K"):
        if n < 1:
            raise OutOfDomain("NCCB(n) needs n >= 1")

        def marked():
            for p in _ncc(n - 1):
                es = C.ncc_edges(p)
                if fid == "NCCB_EL" and (len(es) != spec.e or C.ncc_loops(p) != spec.l):
                    continue
                if fid == "NCCB_K" and len(es) + C.ncc_loops(p) != spec.k:
                    continue
                yield (p, ())
                for edge in es:
                    yield (p, edge)

        if fid == "NCCB_EL":
            _req(spec, "e"), _req(spec, "l")
        if fid == "NCCB_K":
            _req(spec, "k")
        return NCC_CONFIG, marked()
    if fid in ("TRI", "TRI_EAR"):
        if n < 3:
            raise OutOfDomain("TRI(n) needs a polygon with n >= 3 vertices")
        gen = ((n, tuple(sorted((i + 1, j + 1) for i, j in t))) for t in _triangulations(n))
        if fid == "TRI_EAR":
            k = _req(spec, "k")
            gen = (x for x in gen if C.ears(x[1], n) == k)
        return TRIANGULATION, gen
    if fid == "TRIB":
        if n < 1:
            raise OutOfDomain("TRIB(n) needs n >= 1")
        v = 2 * n + 2
        half = n + 1

        def sym():
            for i in range(1, half + 1):
                label = [(i - 1 + t) % v + 1 for t in range(half + 1)]
                for t in _triangulations(half + 1):
                    ds = {(i, i + half)}
                    for a, b in t:
                        x, y = label[a], label[b]
                        for u, w in ((x, y), ((x - 1 + half) % v + 1, (y - 1 + half) % v + 1)):
                            ds.add((min(u, w), max(u, w)))
                    yield (v, tuple(sorted(ds)))

        return TRIANGULATION, sym()
    if fid == "SSYT":
        k = _req(spec, "k")
        return SSYT_2COL, ((n, 0, c1, c2) for c1, c2 in _ssyt_columns(k, 0, n))
    if fid == "SSYT_SKEW":
        k, s = _req(spec, "k"), _req(spec, "s")
        if s > k:
            raise OutOfDomain("SSYT_SKEW needs s <= k")
        return SSYT_2COL, ((n, s, c1, c2) for c1, c2 in _ssyt_columns(k, s, n))
    if fid == "OI":
        s = _req(spec, "s")
        return ROOT_IDEAL, (w for w in _ballot(2 * n) if n - sum(w) <= s)
    if fid in ("MARKED_NCM", "MARKED_NCM_EVEN"):
        r = _req(spec, "r")
        base = (C.stack_match(w) for w in _paths(n, 0))
        if fid == "MARKED_NCM_EVEN":
            k = _req(spec, "k")
            base = (m for m in base if C.even_edges(m) == k)

        def marked_regions():
            for m in base:
                for chosen in combinations(C.regions(m), r):
                    yield (m, tuple(chosen))

        return MARKED_MATCHING, marked_regions()
    raise OutOfDomain(f"unknown family {fid!r}")


def _req(spec: FamilySpec, name: str) -> int:
    v = getattr(spec, name)
    if v is None or v < 0:
        raise OutOfDomain(f"{spec.id} needs a non-negative {name}")
    return v


def enumerate_family(spec: FamilySpec) -> list:
    """All objects of the family, sorted lexicographically by encoding."""
    tag, gen = _raw(spec)
    return [CombObject(tag, d) for d in sorted(set(gen))]


def tag_of(spec: FamilySpec) -> str:
    return _raw(spec)[0]


def cardinality(spec: FamilySpec) -> int:
    fid, n = spec.id, spec.n
    k, s, e, l, r = spec.k, spec.s, spec.e, spec.l, spec.r
    if fid == "BW":
        return comb(n, k)
    if fid == "BW_CDES":
        if n == 0:
            return 1 if k == 0 else 0
        return 2 * comb(n, k) * comb(n - 1, k - 1) if 1 <= k <= n else 0
    if fid == "PATHS":
        return comb(2 * n, n)
    if fid in ("PATHS_S", "SKEW_SYT"):
        return comb(2 * n, n) - (comb(2 * n, n - s - 1) if n - s - 1 >= 0 else 0)
    if fid in ("DYCK", "SYT", "NCM", "NCP"):
        return catalan(n)
    if fid in ("DYCK_PEAKS", "NCP_BLOCKS"):
        return narayana(n, k)
    if fid in ("SYT_CDES", "NCM_SH"):
        if n <= 1 or k <= 1:
            return 1 if (n, k) in ((0, 0), (1, 1)) else 0
        return 2 * comb(n + 1, k) * comb(n - 2, k - 2) // (n + 1)
    if fid == "NCM_EVEN":
        return 1 if (n, k) == (0, 0) else narayana(n, k + 1)
    if fid in ("NCMB", "NCPB", "OI") and (fid != "OI" or s >= n):
        return comb(2 * n, n)
    if fid == "OI":
        return comb(2 * n, n) - (comb(2 * n, n - s - 1) if n - s - 1 >= 0 else 0)
    if fid == "NCPB_BLOCKS":
        return _pi_b_count(n, k)
    if fid == "NCMB_EVEN":
        return _pi_b_count(n, k + 1)
    if fid in ("NCPB_BLOCKS_PAIR", "NCMB_EVEN_PAIR"):
        return comb(n, k) ** 2
    if fid == "NCC":
        return catalan(n)
    if fid == "NCC_K":
        return narayana(n, k)
    m = n - 1
    if fid == "NCC_EL":
        return comb(m, 2 * e) * catalan(e) * comb(m - 2 * e, l) if m >= 2 * e + l else 0
    if fid == "NCC_BY_LOOPS":
        return comb(m, l) * motzkin(m - l) if l <= m else 0
    if fid == "NCCB":
        return comb(2 * m, m)
    if fid == "NCCB_EL":
        return (e + 1) * (comb(m, 2 * e) * catalan(e) * comb(m - 2 * e, l) if m >= 2 * e + l else 0)
    if fid == "NCCB_K":
        return comb(m, k) ** 2
    if fid == "TRI":
        return catalan(n - 2)
    if fid == "TRI_EAR":
        if n == 4:
            return 2 if k == 2 else 0
        if not 2 <= k <= n // 2:
            return 0
        return n * comb(n - 4, 2 * k - 4) * catalan(k - 2) * 2 ** (n - 2 * k) // k
    if fid == "TRIB":
        return comb(2 * n, n)
    if fid == "SSYT":
        return narayana(n + 1, k + 1)
    if fid == "SSYT_SKEW":
        lo = comb(n, k - s - 1) * comb(n, k + s + 1) if k - s - 1 >= 0 else 0
        return comb(n, k) ** 2 - lo
    if fid == "MARKED_NCM":
        return comb(n + 1, r) * catalan(n)
    if fid == "MARKED_NCM_EVEN":
        return (1 if (n, k) == (0, 0) else narayana(n, k + 1)) * comb(n + 1, r)
    raise OutOfDomain(f"unknown family {fid!r}")


def validate(obj: CombObject) -> bool:
    tag, d = obj
    if tag in (BINARY_WORD, LATTICE_PATH, ROOT_IDEAL):
        if not all(b in (0, 1) for b in d):
            return False
        if tag == LATTICE_PATH:
            return 2 * sum(d) == len(d)
        if tag == ROOT_IDEAL:
            return len(d) % 2 == 0 and C.depth(d) == 0
        return True
    if tag == TWO_ROW_SYT:
        n = len(d)
        return list(d) == sorted(set(d)) and all(1 <= x <= 2 * n for x in d) and C.is_dyck(C.syt_word(d, n))
    if tag == SKEW_TWO_ROW_SYT:
        s, w = d
        return 2 * sum(w) == len(w) and C.depth(w) <= s
    if tag == MATCHING:
        v = len(d)
        ok = v % 2 == 0 and all(1 <= p <= v and p != i and d[p - 1] == i for i, p in enumerate(d, 1))
        return ok and C.is_noncrossing(C.edges(d))
    if tag == SET_PARTITION:
        size, blocks = d
        flat = sorted(x for b in blocks for x in b)
        return flat == list(range(1, size + 1)) and blocks == C.canonical_blocks(blocks) and C.partition_is_noncrossing(blocks)
    if tag == NCC_CONFIG:
        p, marked = d
        v = len(p)
        for i, x in enumerate(p, 1):
            if not 0 <= x <= v:
                return False
            if x and x != i and p[x - 1] != i:
                return False
        es = C.ncc_edges(p)
        if marked and tuple(marked) not in es:
            return False
        return C.is_noncrossing(es)
    if tag == TRIANGULATION:
        v, diags = d
        if len(diags) != v - 3 or len(set(diags)) != len(diags):
            return False
        for i, j in diags:
            if not (1 <= i < j <= v) or j - i < 2 or (i == 1 and j == v):
                return False
        return C.is_noncrossing(diags)
    if tag == SSYT_2COL:
        N, s, c1, c2 = d
        k = len(c1)
        inc = all(a < b for a, b in zip(c1, c1[1:])) and all(a < b for a, b in zip(c2, c2[1:]))
        rng = all(1 <= x <= N for x in c1 + c2)
        return len(c2) == k and inc and rng and all(c1[i] <= c2[i + s] for i in range(k - s))
    if tag == MARKED_MATCHING:
        m, marked = d
        if not validate(CombObject(MATCHING, m)):
            return False
        regs = set(C.regions(m))
        return len(regs) == len(m) // 2 + 1 and all(x in regs for x in marked) and list(marked) == sorted(set(marked))
    raise FamilyMismatch(f"unknown object tag {tag!r}")


def member(spec: FamilySpec, obj: CombObject) -> bool:
    return obj in set(enumerate_family(spec))
