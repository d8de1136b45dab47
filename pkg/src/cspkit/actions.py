"""Cyclic group actions on families, with declared orders."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable

from . import combinat as C
from .errors import FamilyMismatch, PreconditionViolated
from .families import (
    BINARY_WORD,
    LATTICE_PATH,
    MARKED_MATCHING,
    MATCHING,
    NCC_CONFIG,
    ROOT_IDEAL,
    SET_PARTITION,
    SKEW_TWO_ROW_SYT,
    SSYT_2COL,
    TRIANGULATION,
    TWO_ROW_SYT,
    CombObject,
    FamilySpec,
    enumerate_family,
    tag_of,
)


@dataclass(frozen=True)
class Action:
    name: str
    order: int
    fn: Callable

    def __call__(self, obj: CombObject) -> CombObject:
        return self.fn(obj)

    def power(self, obj: CombObject, d: int) -> CombObject:
        for _ in range(d % self.order if self.order else d):
            obj = self.fn(obj)
        return obj


def vertex_count(obj: CombObject) -> int:
    tag, d = obj
    if tag == MATCHING:
        return len(d)
    if tag == MARKED_MATCHING:
        return len(d[0])
    if tag == SET_PARTITION:
        return d[0]
    if tag == NCC_CONFIG:
        return len(d[0])
    if tag == TRIANGULATION:
        return d[0]
    raise FamilyMismatch(f"{tag} has no vertices to rotate")


def rotate(obj: CombObject, step: int) -> CombObject:
    tag, d = obj
    if tag == MATCHING:
        return CombObject(tag, C.rotate_matching(d, step))
    if tag == MARKED_MATCHING:
        v = len(d[0])
        marked = tuple(sorted(C.rotate_gaps(g, step, v) for g in d[1]))
        return CombObject(tag, (C.rotate_matching(d[0], step), marked))
    if tag == SET_PARTITION:
        return CombObject(tag, (d[0], C.rotate_blocks(d[1], step, d[0])))
    if tag == NCC_CONFIG:
        v = len(d[0])
        return CombObject(tag, (C.rotate_ncc(d[0], step), C.rotate_edge(d[1], step, v)))
    if tag == TRIANGULATION:
        return CombObject(tag, (d[0], C.rotate_diagonals(d[1], step, d[0])))
    raise FamilyMismatch(f"cannot rotate {tag}")


def shift_word(obj: CombObject) -> CombObject:
    tag, d = obj
    if tag in (BINARY_WORD, LATTICE_PATH):
        return CombObject(tag, d[-1:] + d[:-1])
    if tag == SKEW_TWO_ROW_SYT:
        s, w = d
        w = w[-1:] + w[:-1]
        if C.depth(w) > s:
            raise PreconditionViolated("shifted word leaves the skew shape; use s = n")
        return CombObject(tag, (s, w))
    raise FamilyMismatch(f"cannot shift {tag}")


def promotion(obj: CombObject) -> CombObject:
    """Conjugate of one-step rotation through the tableau-to-matching bijection."""
    if obj.tag != TWO_ROW_SYT:
        raise FamilyMismatch(f"promotion needs a two-row tableau, got {obj.tag}")
    m = C.stack_match(C.syt_word(obj.data, len(obj.data)))
    m = C.rotate_matching(m, 1)
    return CombObject(TWO_ROW_SYT, C.syt_from_word(C.matching_word(m)))


def jdt_promotion(obj: CombObject) -> CombObject:
    """Remove the largest entry, slide the hole to the corner, increment, put 1 in the corner."""
    if obj.tag != TWO_ROW_SYT:
        raise FamilyMismatch(f"promotion needs a two-row tableau, got {obj.tag}")
    n = len(obj.data)
    top, bottom = (list(x) for x in C.syt_rows(obj.data, n))
    rows = [top, bottom]
    r, c = 1, n - 1
    while (r, c) != (0, 0):
        cands = []
        if c > 0:
            cands.append((rows[r][c - 1], r, c - 1))
        if r == 1:
            cands.append((rows[0][c], 0, c))
        val, rr, cc = max(cands)
        rows[r][c] = val
        r, c = rr, cc
    rows[0][0] = 0
    new_top = tuple(x + 1 for x in rows[0])
    return CombObject(TWO_ROW_SYT, new_top)


def kreweras(obj: CombObject) -> CombObject:
    if obj.tag != SET_PARTITION:
        raise FamilyMismatch(f"Kreweras needs a set partition, got {obj.tag}")
    n, blocks = obj.data
    m = C.rotate_matching(C.ncp_to_ncm(blocks, n), 1)
    return CombObject(SET_PARTITION, (n, C.ncm_to_ncp(m)))


def flip(obj: CombObject) -> CombObject:
    if obj.tag != NCC_CONFIG:
        raise FamilyMismatch(f"flip needs a loop/edge configuration, got {obj.tag}")
    p, marked = obj.data
    if not p:
        return obj
    if p[0] in (0, 1):
        p = (1 - p[0],) + p[1:]
    return CombObject(NCC_CONFIG, (p, marked))


def twist(obj: CombObject) -> CombObject:
    return rotate(flip(obj), 1)


# two-column semistandard tableaux


def _cells(d):
    N, s, c1, c2 = d
    cells = {}
    for i, x in enumerate(c1):
        cells[(i + s, 0)] = x
    for i, x in enumerate(c2):
        cells[(i, 1)] = x
    return cells


def _from_cells(d, cells):
    N, s, c1, c2 = d
    k = len(c1)
    return (N, s, tuple(cells[(i + s, 0)] for i in range(k)), tuple(cells[(i, 1)] for i in range(k)))


def bender_knuth(cells: dict, i: int) -> dict:
    out = dict(cells)
    rows = sorted({r for r, _ in cells})
    for r in rows:
        free = []
        for c in (0, 1):
            v = cells.get((r, c))
            if v == i and cells.get((r + 1, c)) == i + 1:
                continue
            if v == i + 1 and cells.get((r - 1, c)) == i:
                continue
            if v in (i, i + 1):
                free.append((c, v))
        a = sum(1 for _, v in free if v == i)
        b = len(free) - a
        for t, (c, _) in enumerate(free):
            out[(r, c)] = i if t < b else i + 1
    return out


def k_promotion(obj: CombObject) -> CombObject:
    if obj.tag != SSYT_2COL:
        raise FamilyMismatch(f"promotion needs a two-column tableau, got {obj.tag}")
    N = obj.data[0]
    cells = _cells(obj.data)
    for i in range(1, N):
        cells = bender_knuth(cells, i)
    return CombObject(SSYT_2COL, _from_cells(obj.data, cells))


def phi_ssyt(obj: CombObject) -> CombObject:
    """Rotation of partitions seen through the tableau-to-partition bijection, computed on the tableau."""
    if obj.tag != SSYT_2COL or obj.data[1]:
        raise FamilyMismatch("phi needs a rectangular two-column tableau")
    N, _, c1, c2 = obj.data
    n = N + 1
    balanced = [j for j in range(1, N + 1) if sum(x >= j for x in c1) == sum(x >= j for x in c2)]
    entries = set(c1) | set(c2)
    free = [j for j in balanced if j not in entries]
    last = max(free) if free else 0
    b = max(balanced)
    c1 = [x + 1 for x in c1]
    c2 = [x + 1 for x in c2]
    if last != N:
        if b + 1 not in c1 or n not in c2:
            raise PreconditionViolated("tableau outside the expected shape")
        c1.remove(b + 1)
        c1.append(1)
        c2.remove(n)
        c2.append(last + 1)
    return CombObject(SSYT_2COL, (N, 0, tuple(sorted(c1)), tuple(sorted(c2))))


# root poset of type B, drawn as rows of sizes 1, 2, .., n, .., 2, 1


def root_poset_cells(n: int):
    return [(r, c) for r in range(1, 2 * n) for c in range(1, min(r, 2 * n - r) + 1)]


def _row_len(r: int, n: int) -> int:
    return min(r, 2 * n - r) if 1 <= r <= 2 * n - 1 else 0


def _lower_covers(cell, n: int):
    r, c = cell
    out = []
    if c + 1 <= _row_len(r, n):
        out.append((r, c + 1))
    if c <= _row_len(r + 1, n):
        out.append((r + 1, c))
    return out


def ideal_from_path(word) -> frozenset:
    """Order ideal bounded by a boundary path of depth 0 (the first half of a symmetric Dyck path)."""
    n = len(word) // 2
    full = tuple(word) + tuple(1 - b for b in reversed(word))
    heights = []
    north = 0
    for b in full:
        if b:
            heights.append(north)
        else:
            north += 1
    cells = set()
    for i, h in enumerate(heights, 1):
        for j in range(i + 1, h + 1):
            if i + j <= 2 * n + 1:
                cells.add((2 * n + 1 - j, i))
    return frozenset(cells)


def path_from_ideal(cells, n: int) -> tuple:
    top = [0] * (2 * n + 1)
    for r, c in cells:
        i, j = c, 2 * n + 1 - r
        for a, b in ((i, j), (2 * n + 1 - j, 2 * n + 1 - i)):
            top[a] = max(top[a], b)
    word = []
    prev = 0
    for i in range(1, 2 * n + 1):
        h = max(top[i], i, prev)
        word += [0] * (h - prev) + [1]
        prev = h
    return tuple(word[: 2 * n])


def rowmotion_cells(cells, n: int) -> frozenset:
    all_cells = root_poset_cells(n)
    minimal = [x for x in all_cells if x not in cells and not any(y not in cells for y in _lower_covers(x, n))]
    out = set()
    stack = list(minimal)
    while stack:
        x = stack.pop()
        if x in out:
            continue
        out.add(x)
        stack.extend(_lower_covers(x, n))
    return frozenset(out)


def rowmotion(obj: CombObject) -> CombObject:
    if obj.tag != ROOT_IDEAL:
        raise FamilyMismatch(f"rowmotion needs a root ideal, got {obj.tag}")
    n = len(obj.data) // 2
    return CombObject(ROOT_IDEAL, path_from_ideal(rowmotion_cells(ideal_from_path(obj.data), n), n))


# registry


def _sample(spec: FamilySpec):
    objs = enumerate_family(spec)
    return objs[0] if objs else None


def make_action(name: str, spec: FamilySpec, order: int | None = None) -> Action:
    """Build an action on a family; order overrides the default declared order where that makes sense."""
    tag = tag_of(spec)
    n = spec.n
    if name == "ROT":
        x = _sample(spec)
        v = vertex_count(x) if x else {MATCHING: 2 * n, SET_PARTITION: n, TRIANGULATION: n}.get(tag, max(n, 1))
        m = order or v
        if v % m:
            raise PreconditionViolated(f"order {m} does not divide {v} vertices")
        step = v // m
        return Action(name, m, lambda o: rotate(o, step))
    if name == "ROT_B":
        x = _sample(spec)
        v = vertex_count(x)
        m = order or v // 2
        if v % (2 * m):
            raise PreconditionViolated(f"order {m} does not fit {v} symmetric vertices")
        step = v // (2 * m)
        return Action(name, m, lambda o: rotate(o, step))
    if name == "SHIFT":
        length = {BINARY_WORD: n, LATTICE_PATH: 2 * n}.get(tag, 2 * n)
        if spec.id in ("BW_CDES",):
            length = 2 * n
        return Action(name, order or length, shift_word)
    if name == "PROMOTION":
        return Action(name, order or 2 * n, promotion)
    if name == "PROMOTION_SKEW":
        return Action(name, order or 2 * n, shift_word)
    if name == "JDT_PROMOTION":
        return Action(name, order or 2 * n, jdt_promotion)
    if name == "KREWERAS":
        return Action(name, order or 2 * n, kreweras)
    if name == "FLIP":
        return Action(name, 2, flip)
    if name in ("TWIST", "TWIST_SQUARED"):
        v = n - 1
        if name == "TWIST":
            return Action(name, order or 2 * v, twist)
        return Action(name, order or v, lambda o: twist(twist(o)))
    if name == "K_PROMOTION":
        return Action(name, order or n, k_promotion)
    if name == "PHI_SSYT":
        return Action(name, order or n + 1, phi_ssyt)
    if name == "ROWMOTION":
        return Action(name, order or 2 * n, rowmotion)
    raise KeyError(f"unknown action {name!r}")


ACTIONS = ("ROT", "ROT_B", "SHIFT", "PROMOTION", "PROMOTION_SKEW", "JDT_PROMOTION", "KREWERAS", "FLIP",
           "TWIST", "TWIST_SQUARED", "K_PROMOTION", "PHI_SSYT", "ROWMOTION")


def permutation(action: Action, objs) -> list:
    index = {x: i for i, x in enumerate(objs)}
    perm = []
    for x in objs:
        y = action(x)
        if y not in index:
            raise PreconditionViolated(f"{action.name} leaves the family: {x} -> {y}")
        perm.append(index[y])
    return perm


def cycle_lengths(perm) -> list:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        L = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            L += 1
        out.append(L)
    return out


@dataclass(frozen=True)
class OrderReport:
    declared: int
    order: int
    divides: bool
    strict_divisor: bool


def order_check(action: Action, spec: FamilySpec) -> OrderReport:
    objs = enumerate_family(spec)
    lengths = cycle_lengths(permutation(action, objs))
    order = lcm(*lengths) if lengths else 1
    divides = action.order % order == 0
    return OrderReport(action.order, order, divides, divides and order != action.order)
