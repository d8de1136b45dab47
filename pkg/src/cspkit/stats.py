"""Integer statistics on family objects and their q-distributions."""

from __future__ import annotations

from . import combinat as C
from .errors import FamilyMismatch, NegativeExponent
from .families import (
    BINARY_WORD,
    LATTICE_PATH,
    MARKED_MATCHING,
    MATCHING,
    NCC_CONFIG,
    ROOT_IDEAL,
    SET_PARTITION,
    SKEW_TWO_ROW_SYT,
    TRIANGULATION,
    TWO_ROW_SYT,
    CombObject,
    FamilySpec,
    enumerate_family,
)
from .qpoly import IntPoly

WORDS = (BINARY_WORD, LATTICE_PATH, ROOT_IDEAL)


def syt_des(first_row, n: int) -> int:
    return len(C.peaks(C.syt_word(first_row, n)))


def syt_maj(first_row, n: int) -> int:
    return C.pmaj(C.syt_word(first_row, n))


def syt_cdes(first_row, n: int) -> int:
    """Cyclic descents: ordinary descents plus 2n when the row word is elevated."""
    w = C.syt_word(first_row, n)
    if n == 1:
        return 1
    return len(C.peaks(w)) + (1 if C.is_elevated(w) else 0)


def _word(obj):
    if obj.tag in WORDS:
        return obj.data
    raise FamilyMismatch(f"statistic needs a word or path, got {obj.tag}")


def _skew_word(obj):
    if obj.tag == SKEW_TWO_ROW_SYT:
        return obj.data[1]
    if obj.tag == TWO_ROW_SYT:
        return C.syt_word(obj.data, len(obj.data))
    raise FamilyMismatch(f"statistic needs a two-row tableau, got {obj.tag}")


def _matching(obj):
    if obj.tag == MATCHING:
        return obj.data
    if obj.tag == MARKED_MATCHING:
        return obj.data[0]
    raise FamilyMismatch(f"statistic needs a matching, got {obj.tag}")


def _only(tag):
    def get(obj):
        if obj.tag != tag:
            raise FamilyMismatch(f"statistic needs {tag}, got {obj.tag}")
        return obj.data

    return get


def _des(obj):
    if obj.tag in (TWO_ROW_SYT, SKEW_TWO_ROW_SYT):
        return len(C.peaks(_skew_word(obj)))
    return C.des(_word(obj))


def _cdes_syt(obj):
    if obj.tag != TWO_ROW_SYT:
        raise FamilyMismatch(f"CDES_SYT needs a two-row tableau, got {obj.tag}")
    return syt_cdes(obj.data, len(obj.data))


def _maj_via_ncp(obj):
    size, blocks = _only(SET_PARTITION)(obj)
    return C.maj(C.ncp_to_dyck(blocks, size))


STATS = {
    "MAJ": lambda o: C.maj(_word(o)),
    "INV": lambda o: C.inv(_word(o)),
    "DES": _des,
    "CDES_WORD": lambda o: C.cdes_word(_only(BINARY_WORD)(o)),
    "CDES_SYT": _cdes_syt,
    "PEAKS": lambda o: len(C.peaks(_word(o))),
    "VALLEYS": lambda o: len(C.valleys(_word(o))),
    "PMAJ": lambda o: C.pmaj(_word(o)),
    "DEPTH": lambda o: C.depth(_word(o)),
    "MODPEAKS": lambda o: C.modpeaks(_word(o)),
    "EVEN_EDGES": lambda o: C.even_edges(_matching(o)),
    "SHORT_EDGES": lambda o: C.short_edges(_matching(o)),
    "BLOCKS": lambda o: len(_only(SET_PARTITION)(o)[1]),
    "EARS": lambda o: C.ears(_only(TRIANGULATION)(o)[1], o.data[0]),
    "LOOPS": lambda o: C.ncc_loops(_only(NCC_CONFIG)(o)[0]),
    "PROPER_EDGES": lambda o: len(C.ncc_edges(_only(NCC_CONFIG)(o)[0])),
    "MAJ_SYT": lambda o: C.pmaj(_skew_word(o)),
    "MAJ_VIA_NCP": _maj_via_ncp,
}


def statistic(stat: str, obj: CombObject) -> int:
    if stat not in STATS:
        raise KeyError(f"unknown statistic {stat!r}")
    return STATS[stat](obj)


def distribution(spec: FamilySpec, stat: str, shift: int = 0) -> IntPoly:
    """Sum of q^(stat + shift) over the family."""
    counts: dict[int, int] = {}
    for obj in enumerate_family(spec):
        x = statistic(stat, obj) + shift
        if x < 0:
            raise NegativeExponent(f"{stat} + {shift} is negative on {obj}")
        counts[x] = counts.get(x, 0) + 1
    if not counts:
        return IntPoly()
    out = [0] * (max(counts) + 1)
    for x, c in counts.items():
        out[x] = c
    return IntPoly(out)


def bivariate_distribution(spec: FamilySpec, t_stat: str, q_stat: str) -> list:
    """Coefficient list in t of sum t^t_stat q^q_stat."""
    rows: dict[int, dict[int, int]] = {}
    for obj in enumerate_family(spec):
        t = statistic(t_stat, obj)
        q = statistic(q_stat, obj)
        row = rows.setdefault(t, {})
        row[q] = row.get(q, 0) + 1
    out = []
    for t in range(max(rows) + 1 if rows else 0):
        row = rows.get(t, {})
        coeffs = [0] * (max(row) + 1) if row else []
        for q, c in row.items():
            coeffs[q] = c
        out.append(IntPoly(coeffs))
    return out
