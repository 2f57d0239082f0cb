"""Brute-force oracles and hypothesis strategies shared by the test modules.

The oracles follow the definitions directly (filter the power set, enumerate
every pattern) and stay independent of the library's pruned/bitmap paths.
"""

from fractions import Fraction

from hypothesis import strategies as st

from shatterlab import SetFamily, SpernerSystem


# -- definitional oracles -------------------------------------------------------

def brute_trace(masks, s):
    return {m & s for m in masks}


def brute_is_shattered(masks, n, s):
    traces = brute_trace(masks, s)
    sub = s
    while True:
        if sub not in traces:
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & s


def brute_shattered(masks, n):
    return {s for s in range(1 << n) if brute_is_shattered(masks, n, s)}


def brute_is_extremal(masks, n):
    if not masks:
        return True
    return len(brute_shattered(masks, n)) == len(masks)


def brute_cube(n, support, pattern):
    return {f for f in range(1 << n) if f & support == pattern}


def brute_up_closure(n, supports):
    return {f for f in range(1 << n) if any(f & s == s for s in supports)}


def brute_family(n, pairs):
    return {f for f in range(1 << n) if all(f & s != h for s, h in pairs)}


def brute_missing(masks, n, s):
    traces = brute_trace(masks, s)
    out = set()
    sub = s
    while True:
        if sub not in traces:
            out.add(sub)
        if sub == 0:
            return out
        sub = (sub - 1) & s


def brute_minimal(masks):
    return {m for m in masks if not any(g & m == g and g != m for g in masks)}


def brute_addable(masks, n):
    present = set(masks)
    return [f for f in range(1 << n) if f not in present
            and brute_is_extremal(tuple(sorted(present | {f})), n)]


def brute_removable(masks, n):
    return [f for f in masks if brute_is_extremal(tuple(m for m in masks if m != f), n)]


def brute_witnesses(n, pairs):
    """All (index, mask) with the mask in cube index but in no other cube."""
    out = []
    for i, (si, hi) in enumerate(pairs):
        for f in sorted(brute_cube(n, si, hi)):
            if all(f & sj != hj for j, (sj, hj) in enumerate(pairs) if j != i):
                out.append((i, f))
    return out


def fraction_rank(matrix):
    """Plain Gaussian elimination over stdlib fractions (rank oracle)."""
    m = [[Fraction(x) for x in row] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(rows):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def minimalize(masks):
    mins = []
    for m in sorted(set(masks)):
        if not any(g & m == g for g in mins):
            mins.append(m)
    return tuple(mins)


# -- strategies ------------------------------------------------------------------

@st.composite
def families(draw, min_n=0, max_n=6, allow_empty=True):
    n = draw(st.integers(min_n, max_n))
    min_size = 0 if allow_empty else 1
    masks = draw(st.frozensets(st.integers(0, (1 << n) - 1), min_size=min_size))
    return SetFamily.of(n, masks)


@st.composite
def antichains(draw, min_n=1, max_n=6, max_members=4):
    """(n, antichain masks): minimal elements of a drawn mask list."""
    n = draw(st.integers(min_n, max_n))
    raw = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=max_members))
    return n, minimalize(raw)


@st.composite
def systems(draw, min_n=1, max_n=6, max_members=4):
    n, supports = draw(antichains(min_n=min_n, max_n=max_n, max_members=max_members))
    pairs = [(s, s & draw(st.integers(0, (1 << n) - 1))) for s in supports]
    return SpernerSystem.of(n, pairs)


@st.composite
def anchored_systems(draw, min_n=1, max_n=6, max_members=4):
    """(n, antichain, anchor) triples."""
    n, supports = draw(antichains(min_n=min_n, max_n=max_n, max_members=max_members))
    anchor = draw(st.integers(0, (1 << n) - 1))
    return n, supports, anchor


def all_small_antichains(n, max_members):
    """Every antichain of 2^[n] with 1..max_members members (supports only)."""
    from itertools import combinations
    out = []
    all_masks = range(1 << n)
    for size in range(1, max_members + 1):
        for combo in combinations(all_masks, size):
            if all(a & b != a and a & b != b
                   for i, a in enumerate(combo) for b in combo[i + 1:]):
                out.append(combo)
    return out


def all_pattern_assignments(supports):
    """Every pattern tuple for the given supports (cartesian product of submasks)."""
    from itertools import product
    choice_lists = []
    for s in supports:
        subs = []
        sub = s
        while True:
            subs.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & s
        choice_lists.append(subs)
    return product(*choice_lists)
