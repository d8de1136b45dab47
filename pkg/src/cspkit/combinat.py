"""Low-level operations on the canonical encodings, shared by families, stats, bijections and actions.

Conventions: words are tuples of 0/1, positions 1-indexed. For lattice paths 0 is a
north step and 1 an east step. Matchings are partner tuples, partner[i-1] is the
partner of vertex i. Set partitions are tuples of sorted blocks, blocks sorted by
their minimum.
"""

from __future__ import annotations

from .errors import PreconditionViolated

# words and paths


def descents(word):
    return [i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]]


def ascents(word):
    return [i + 1 for i in range(len(word) - 1) if word[i] < word[i + 1]]


def maj(word) -> int:
    return sum(descents(word))


def des(word) -> int:
    return len(descents(word))


def inv(word) -> int:
    ones = 0
    total = 0
    for b in word:
        if b:
            ones += 1
        else:
            total += ones
    return total


def peaks(word):
    """Positions i with a north step followed by an east step."""
    return ascents(word)


def valleys(word):
    return descents(word)


def pmaj(word) -> int:
    return sum(peaks(word))


def cdes_word(word) -> int:
    n = len(word)
    if n == 0:
        return 0
    return sum(1 for i in range(n) if word[i] > word[(i + 1) % n])


def modpeaks(word) -> int:
    return len(peaks(word)) + (1 if word and word[-1] == 0 else 0)


def depth(word) -> int:
    h = best = 0
    for b in word:
        h += 1 if b else -1
        if h > best:
            best = h
    return best


def is_dyck(word) -> bool:
    return depth(word) == 0 and 2 * sum(word) == len(word)


def is_elevated(word) -> bool:
    inner = word[1:-1]
    return len(word) >= 2 and word[0] == 0 and word[-1] == 1 and is_dyck(inner)


def word_from_ones(length: int, ones) -> tuple:
    w = [0] * length
    for i in ones:
        w[i - 1] = 1
    return tuple(w)


def syt_word(first_row, n: int) -> tuple:
    """Row word of a two-row tableau: 0 where the entry sits in the first row."""
    w = [1] * (2 * n)
    for i in first_row:
        w[i - 1] = 0
    return tuple(w)


def syt_from_word(word) -> tuple:
    return tuple(i + 1 for i, b in enumerate(word) if b == 0)


def syt_rows(first_row, n: int):
    top = tuple(first_row)
    bottom = tuple(i for i in range(1, 2 * n + 1) if i not in set(top))
    return top, bottom


# matchings


def stack_match(word) -> tuple:
    """Noncrossing perfect matching of a balanced word, 0 opens and 1 closes."""
    partner = [0] * len(word)
    stack = []
    for i, b in enumerate(word, 1):
        if b == 0:
            stack.append(i)
        else:
            if not stack:
                raise PreconditionViolated("word is not a Dyck word")
            j = stack.pop()
            partner[i - 1] = j
            partner[j - 1] = i
    if stack:
        raise PreconditionViolated("word is not a Dyck word")
    return tuple(partner)


def cyclic_match(word) -> tuple:
    """Stack matching read around the circle; needs as many 0s as 1s."""
    n = len(word)
    if 2 * sum(word) != n:
        raise PreconditionViolated("cyclic matching needs a balanced word")
    partner = [0] * n
    stack = []
    for t in range(2 * n):
        i = t % n
        if partner[i]:
            continue
        if word[i] == 0:
            stack.append(i)
        elif stack:
            j = stack.pop()
            partner[i] = j + 1
            partner[j] = i + 1
    return tuple(partner)


def matching_word(partner) -> tuple:
    return tuple(0 if p > i else 1 for i, p in enumerate(partner, 1))


def edges(partner):
    return [(i, p) for i, p in enumerate(partner, 1) if i < p]


def is_noncrossing(pairs) -> bool:
    pairs = list(pairs)
    for a in range(len(pairs)):
        i, j = pairs[a]
        for b in range(a + 1, len(pairs)):
            k, l = pairs[b]
            if i < k < j < l or k < i < l < j:
                return False
    return True


def even_edges(partner) -> int:
    return sum(1 for i, p in edges(partner) if i % 2 == 0)


def short_edges(partner) -> int:
    v = len(partner)
    return sum(1 for i, p in edges(partner) if p - i == 1 or (i == 1 and p == v))


def rotate_matching(partner, step: int) -> tuple:
    v = len(partner)
    out = [0] * v
    for i, p in enumerate(partner):
        out[(i + step) % v] = (p - 1 + step) % v + 1
    return tuple(out)


def regions(partner) -> tuple:
    """Regions cut out by the chords, each as the sorted tuple of boundary gaps it touches.

    Gap g sits between vertex g and vertex g + 1 (gap 2n closes the circle).
    """
    v = len(partner)
    if v == 0:
        return ((),)
    seen = [False] * (v + 1)
    out = []
    for g in range(1, v + 1):
        if seen[g]:
            continue
        cyc = []
        x = g
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = partner[x % v]
        out.append(tuple(sorted(cyc)))
    return tuple(sorted(out))


def rotate_gaps(gaps, step: int, v: int) -> tuple:
    return tuple(sorted((g - 1 + step) % v + 1 for g in gaps))


# set partitions


def canonical_blocks(blocks) -> tuple:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def rotate_blocks(blocks, step: int, v: int) -> tuple:
    return canonical_blocks([(x - 1 + step) % v + 1 for x in b] for b in blocks)


def partition_is_noncrossing(blocks) -> bool:
    where = {}
    for idx, b in enumerate(blocks):
        for x in b:
            where[x] = idx
    for idx, b in enumerate(blocks):
        for a1, a2 in zip(b, b[1:]):
            # elements strictly between consecutive members may not reach outside
            for x in range(a1 + 1, a2):
                other = blocks[where[x]]
                if any(y < a1 or y > a2 for y in other):
                    return False
    return True


def ncp_to_ncm(blocks, n: int) -> tuple:
    """Push each block's boundary onto primed vertices 1'..2n'.

    Vertex j sits between (2j-2)' and (2j-1)'; the prime after one block element
    is joined to the prime before the next element of the same block.
    """
    v = 2 * n
    partner = [0] * v
    for b in blocks:
        m = len(b)
        for t in range(m):
            a = 2 * b[t] - 1
            nxt = b[(t + 1) % m]
            c = (2 * nxt - 2 - 1) % v + 1
            partner[a - 1] = c
            partner[c - 1] = a
    return tuple(partner)


def ncm_to_ncp(partner) -> tuple:
    v = len(partner)
    if v % 2:
        raise PreconditionViolated("matching on an odd number of vertices")
    n = v // 2
    succ = {}
    for j in range(1, n + 1):
        p = partner[2 * j - 2]
        if p % 2:
            raise PreconditionViolated("matching is not in the image of the block construction")
        succ[j] = p // 2 % n + 1
    seen = set()
    out = []
    for j in range(1, n + 1):
        if j in seen:
            continue
        cyc = []
        x = j
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = succ[x]
        out.append(tuple(sorted(cyc)))
    return canonical_blocks(out)


def ncp_to_dyck(blocks, n: int) -> tuple:
    word = []
    prev = 0
    for b in sorted(blocks, key=max):
        word += [0] * (max(b) - prev) + [1] * len(b)
        prev = max(b)
    return tuple(word)


def dyck_to_ncp(word) -> tuple:
    if not is_dyck(word):
        raise PreconditionViolated("not a Dyck path")
    stack = []
    blocks = []
    x = 0
    i = 0
    L = len(word)
    while i < L:
        while i < L and word[i] == 0:
            x += 1
            stack.append(x)
            i += 1
        size = 0
        while i < L and word[i] == 1:
            size += 1
            i += 1
        top = stack.pop()
        block = [top] + [stack.pop() for _ in range(size - 1)]
        blocks.append(block)
    return canonical_blocks(blocks)


# loop-and-edge configurations (NCC); partner 0 = isolated, partner i = i is a loop


def ncc_edges(partner):
    return [(i, p) for i, p in enumerate(partner, 1) if p > i]


def ncc_loops(partner) -> int:
    return sum(1 for i, p in enumerate(partner, 1) if p == i)


def rotate_ncc(partner, step: int) -> tuple:
    v = len(partner)
    out = [0] * v
    for i, p in enumerate(partner):
        out[(i + step) % v] = 0 if p == 0 else (p - 1 + step) % v + 1
    return tuple(out)


def rotate_edge(edge, step: int, v: int):
    if not edge:
        return ()
    a, b = ((x - 1 + step) % v + 1 for x in edge)
    return (min(a, b), max(a, b))


def dyck_to_ncc(word) -> tuple:
    """Laser construction. Vertices are the east counts 1..n-1; r[b] is the north run after east step b."""
    if not is_dyck(word):
        raise PreconditionViolated("not a Dyck path")
    n = len(word) // 2
    runs = [0] * (n + 1)
    east = 0
    for b in word:
        if b:
            east += 1
        else:
            runs[east] += 1
    partner = [0] * (n - 1)
    for b in range(1, n):
        if runs[b] == 0:
            continue
        f = 0
        delta = 0
        while True:
            f += runs[b + delta] - 1
            delta += 1
            if f <= 0:
                break
        c = b + delta - 1
        partner[b - 1] = c
        partner[c - 1] = b
    return tuple(partner)


def ncc_to_dyck(partner) -> tuple:
    v = len(partner)
    n = v + 1
    runs = [0] * (n + 1)
    for b, p in enumerate(partner, 1):
        if p == b:
            runs[b] = 1
        elif p > b:
            depth_here = 0
            iso = 0
            for x in range(b + 1, p):
                q = partner[x - 1]
                if depth_here == 0 and q == 0:
                    iso += 1
                if q > x:
                    depth_here += 1
                elif 0 < q < x:
                    depth_here -= 1
            runs[b] = 2 + iso
    runs[0] = n - sum(runs)
    if runs[0] < 1:
        raise PreconditionViolated("configuration does not come from a Dyck path")
    word = []
    for b in range(n + 1):
        word += [0] * runs[b]
        if b < n:
            word.append(1)
    return tuple(word)


# triangulations


def rotate_diagonals(diags, step: int, v: int) -> tuple:
    out = []
    for i, j in diags:
        a, b = (i - 1 + step) % v + 1, (j - 1 + step) % v + 1
        out.append((min(a, b), max(a, b)))
    return tuple(sorted(out))


def ears(diags, v: int) -> int:
    if v == 3:
        return 3
    ds = set(diags)
    count = 0
    for i in range(1, v + 1):
        a, b = i, (i + 1) % v + 1
        if (min(a, b), max(a, b)) in ds:
            count += 1
    return count
