"""Explicit bijections between families, each with an inverse."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import combinat as C
from .errors import FamilyMismatch, PreconditionViolated
from .families import (
    BINARY_WORD,
    LATTICE_PATH,
    MATCHING,
    NCC_CONFIG,
    ROOT_IDEAL,
    SET_PARTITION,
    SSYT_2COL,
    TWO_ROW_SYT,
    CombObject,
    FamilySpec,
    enumerate_family,
)
from .stats import statistic


@dataclass(frozen=True)
class Bijection:
    name: str
    src: str
    dst: str
    forward: Callable
    backward: Callable
    # (label, stat on source, stat on image) pairs that must agree
    transports: tuple = ()


# root ideals: move a path of positive depth one step closer to the diagonal


def _heights(word):
    h = [0]
    for b in word:
        h.append(h[-1] + (1 if b else -1))
    return h


def lift_once(word) -> tuple:
    """Turn the east step that first reaches the maximal depth into a north step."""
    h = _heights(word)
    top = max(h)
    if top <= 0:
        raise PreconditionViolated("path already has depth 0")
    p = h.index(top)
    w = list(word)
    w[p - 1] = 0
    return tuple(w)


def lower_once(word) -> tuple:
    """Undo lift_once: the north step right after the last maximum becomes east."""
    h = _heights(word)
    top = max(h)
    p = len(h) - 1 - h[::-1].index(top)
    if p >= len(word) or word[p] != 0:
        raise PreconditionViolated("no north step after the last maximum")
    w = list(word)
    w[p] = 1
    return tuple(w)


def path_to_root_ideal(word) -> tuple:
    if 2 * sum(word) != len(word):
        raise PreconditionViolated("expected a balanced path")
    for _ in range(C.depth(word)):
        word = lift_once(word)
    return word


def root_ideal_to_path(word) -> tuple:
    if C.depth(word) != 0 or len(word) % 2:
        raise PreconditionViolated("expected a boundary path of depth 0")
    d = (len(word) - 2 * sum(word)) // 2
    for _ in range(d):
        word = lower_once(word)
    return word


# two-column tableaux and partitions


def ssyt_to_ncp(N: int, col1, col2):
    n = N + 1
    used: set = set()
    blocks = []
    for x in col2:
        cands = [y for y in col1 if y <= x and y not in used]
        if not cands:
            raise PreconditionViolated("no first-column entry available")
        y = max(cands)
        block = [z for z in range(y, x + 1) if z not in used]
        used.update(block)
        blocks.append(block)
    blocks.append([z for z in range(1, n + 1) if z not in used])
    return C.canonical_blocks(blocks)


def ncp_to_ssyt(blocks, n: int):
    rest = [b for b in blocks if n not in b]
    return tuple(sorted(min(b) for b in rest)), tuple(sorted(max(b) for b in rest))


# symmetric matchings from half patterns


def bw_to_ncm_sym(word, n: int) -> tuple:
    p = len(word)
    if p == 0 or p % 2 or (2 * n) % p or p > n or 2 * sum(word) != p:
        raise PreconditionViolated(f"need a balanced word whose length is even, divides {2 * n} and is at most {n}")
    return C.cyclic_match(tuple(word) * (2 * n // p))


def ncm_sym_to_bw(partner, p: int) -> tuple:
    v = len(partner)
    n = v // 2
    if p == 0 or v % p or p > n or C.rotate_matching(partner, p) != tuple(partner):
        raise PreconditionViolated(f"matching is not invariant under rotation by {p}")
    out = []
    for i in range(1, p + 1):
        t = (partner[i - 1] - i) % v
        if t == n:
            raise PreconditionViolated("matching has a diameter")
        out.append(0 if t < n else 1)
    return tuple(out)


def _tagged(tag, fn):
    def wrapped(obj, **kw):
        if obj.tag != tag:
            raise FamilyMismatch(f"expected {tag}, got {obj.tag}")
        return fn(obj.data, **kw)

    return wrapped


def _syt_data(d):
    return C.syt_word(d, len(d))


def _ncp_data(d):
    return d[0], d[1]


def _dyck_only(w):
    if not C.is_dyck(w):
        raise PreconditionViolated("not a Dyck path")
    return w


def _ssyt_fwd(d):
    N, s, c1, c2 = d
    if s:
        raise PreconditionViolated("needs a rectangular two-column tableau")
    return CombObject(SET_PARTITION, (N + 1, ssyt_to_ncp(N, c1, c2)))


def _ssyt_back(d):
    size, blocks = d
    c1, c2 = ncp_to_ssyt(blocks, size)
    return CombObject(SSYT_2COL, (size - 1, 0, c1, c2))


def _stat(name, offset=0):
    return lambda o: statistic(name, o) + offset


def _edges_and_loops(o):
    return statistic("PROPER_EDGES", o) + statistic("LOOPS", o)


REGISTRY = {
    "NCM_TO_DYCK": Bijection(
        "NCM_TO_DYCK", MATCHING, LATTICE_PATH,
        _tagged(MATCHING, lambda m: CombObject(LATTICE_PATH, C.matching_word(m))),
        _tagged(LATTICE_PATH, lambda w: CombObject(MATCHING, C.stack_match(w))),
    ),
    "BW_TO_NCM_SYM": Bijection(
        "BW_TO_NCM_SYM", BINARY_WORD, MATCHING,
        _tagged(BINARY_WORD, lambda w, n: CombObject(MATCHING, bw_to_ncm_sym(w, n))),
        _tagged(MATCHING, lambda m, p: CombObject(BINARY_WORD, ncm_sym_to_bw(m, p))),
    ),
    "SYT_TO_NCM": Bijection(
        "SYT_TO_NCM", TWO_ROW_SYT, MATCHING,
        _tagged(TWO_ROW_SYT, lambda t: CombObject(MATCHING, C.stack_match(_syt_data(t)))),
        _tagged(MATCHING, lambda m: CombObject(TWO_ROW_SYT, C.syt_from_word(C.matching_word(m)))),
    ),
    "SYT_TO_DYCK": Bijection(
        "SYT_TO_DYCK", TWO_ROW_SYT, LATTICE_PATH,
        _tagged(TWO_ROW_SYT, lambda t: CombObject(LATTICE_PATH, _syt_data(t))),
        _tagged(LATTICE_PATH, lambda w: CombObject(TWO_ROW_SYT, C.syt_from_word(_dyck_only(w)))),
        (("descents to peaks", _stat("DES"), _stat("PEAKS")), ("maj to pmaj", _stat("MAJ_SYT"), _stat("PMAJ"))),
    ),
    "NCP_TO_NCM": Bijection(
        "NCP_TO_NCM", SET_PARTITION, MATCHING,
        _tagged(SET_PARTITION, lambda d: CombObject(MATCHING, C.ncp_to_ncm(d[1], d[0]))),
        _tagged(MATCHING, lambda m: CombObject(SET_PARTITION, (len(m) // 2, C.ncm_to_ncp(m)))),
        (("blocks to even edges + 1", _stat("BLOCKS", -1), _stat("EVEN_EDGES")),),
    ),
    "NCP_TO_DYCK": Bijection(
        "NCP_TO_DYCK", SET_PARTITION, LATTICE_PATH,
        _tagged(SET_PARTITION, lambda d: CombObject(LATTICE_PATH, C.ncp_to_dyck(d[1], d[0]))),
        _tagged(LATTICE_PATH, lambda w: CombObject(SET_PARTITION, (len(w) // 2, C.dyck_to_ncp(w)))),
        (("blocks to peaks", _stat("BLOCKS"), _stat("PEAKS")),),
    ),
    "DYCK_TO_NCC": Bijection(
        "DYCK_TO_NCC", LATTICE_PATH, NCC_CONFIG,
        _tagged(LATTICE_PATH, lambda w: CombObject(NCC_CONFIG, (C.dyck_to_ncc(w), ()))),
        _tagged(NCC_CONFIG, lambda d: CombObject(LATTICE_PATH, C.ncc_to_dyck(d[0]))),
        (("valleys to edges + loops", _stat("VALLEYS"), _edges_and_loops),),
    ),
    "SSYT_TO_NCP": Bijection(
        "SSYT_TO_NCP", SSYT_2COL, SET_PARTITION, _tagged(SSYT_2COL, _ssyt_fwd), _tagged(SET_PARTITION, _ssyt_back),
        (("rows to blocks - 1", lambda o: len(o.data[2]), _stat("BLOCKS", -1)),),
    ),
    "PHI_ROOT_IDEAL": Bijection(
        "PHI_ROOT_IDEAL", LATTICE_PATH, ROOT_IDEAL,
        _tagged(LATTICE_PATH, lambda w: CombObject(ROOT_IDEAL, path_to_root_ideal(w))),
        _tagged(ROOT_IDEAL, lambda w: CombObject(LATTICE_PATH, root_ideal_to_path(w))),
        (("pmaj", _stat("PMAJ"), _stat("PMAJ")),),
    ),
}


def get(name: str) -> Bijection:
    if name not in REGISTRY:
        raise KeyError(f"unknown bijection {name!r}")
    return REGISTRY[name]


def apply(name: str, obj: CombObject, **kw) -> CombObject:
    return get(name).forward(obj, **kw)


def inverse(name: str, obj: CombObject, **kw) -> CombObject:
    return get(name).backward(obj, **kw)


def check_equivariance(name: str, src_action, dst_action, spec: FamilySpec) -> list:
    """Objects x where bij(src(x)) differs from dst(bij(x)); empty means equivariant."""
    bad = []
    for x in enumerate_family(spec):
        left = apply(name, src_action(x))
        right = dst_action(apply(name, x))
        if left != right:
            bad.append((x, left, right))
    return bad


def check_transport(name: str, objs, **kw) -> list:
    """(object, label, source value, image value) for every declared transport that fails."""
    bij = get(name)
    bad = []
    for x in objs:
        y = bij.forward(x, **kw)
        for label, f, g in bij.transports:
            a, b = f(x), g(y)
            if a != b:
                bad.append((x, label, a, b))
    return bad
