"""Independent brute-force oracles used to check the fast paths.

Everything here enumerates the full space (all subfamilies, all subsets,
all permutations); nothing is shared with the solver or the core search
routines beyond basic mask plumbing.
"""

from __future__ import annotations

import itertools

from shadowfam.core import SetFamily, elements_of


def oracle_matching_number(fam: SetFamily) -> int:
    """Max pairwise-disjoint subcollection by full subset enumeration."""
    ms = fam.members
    best = 0
    for size in range(len(ms), 0, -1):
        if size <= best:
            break
        for combo in itertools.combinations(ms, size):
            union = 0
            ok = True
            for m in combo:
                if union & m:
                    ok = False
                    break
                union |= m
            if ok:
                best = size
                break
    return best


def oracle_transversal_number(fam: SetFamily) -> int:
    """Min hitting set by full subset enumeration over [n]."""
    if not fam.members:
        return 0
    best = fam.n
    for size in range(0, fam.n + 1):
        for combo in itertools.combinations(range(1, fam.n + 1), size):
            tm = 0
            for e in combo:
                tm |= 1 << (e - 1)
            if all(tm & m for m in fam.members):
                return size
    return best


def oracle_shadow_degree(fam: SetFamily) -> int:
    """Min positive co-degree by enumerating all (k-1)-subsets of [n]."""
    k = fam.k
    best = None
    for combo in itertools.combinations(range(1, fam.n + 1), k - 1):
        em = 0
        for e in combo:
            em |= 1 << (e - 1)
        deg = sum(1 for m in fam.members if m & em == em)
        if deg > 0 and (best is None or deg < best):
            best = deg
    return best if best is not None else len(fam.members)


def oracle_max_family_sizes(n: int, k: int) -> dict[int, int]:
    """f(n, k, r) for every r >= 1 at once, by enumerating all 2^C(n,k)
    subfamilies of the k-subsets of [n].

    Returns {r: optimum} for r in 1..k (0 when no non-empty intersecting
    family reaches shadow degree r).  Intersecting subfamilies are
    recognized with a 1-byte-per-subset DP over the enumeration order.
    """
    univ = [c for c in itertools.combinations(range(1, n + 1), k)]
    masks = []
    for c in univ:
        m = 0
        for e in c:
            m |= 1 << (e - 1)
        masks.append(m)
    u = len(masks)
    disj = [0] * u
    for i in range(u):
        for j in range(u):
            if i != j and masks[i] & masks[j] == 0:
                disj[i] |= 1 << j

    intersecting = bytearray(1 << u)
    intersecting[0] = 1
    best = {r: 0 for r in range(1, k + 1)}
    for s in range(1, 1 << u):
        low = s & -s
        i = low.bit_length() - 1
        rest = s ^ low
        if not intersecting[rest] or disj[i] & rest:
            continue
        intersecting[s] = 1
        # shadow degree of this subfamily
        counts: dict[int, int] = {}
        t = s
        while t:
            lo = t & -t
            t ^= lo
            fm = masks[lo.bit_length() - 1]
            mm = fm
            while mm:
                b = mm & -mm
                counts[fm ^ b] = counts.get(fm ^ b, 0) + 1
                mm ^= b
        delta = min(counts.values()) if counts else s.bit_count()
        size = s.bit_count()
        for r in range(1, min(delta, k) + 1):
            if size > best[r]:
                best[r] = size
    return best


def oracle_is_design_2_6_3_2(sets: tuple[tuple[int, ...], ...]) -> bool:
    """Every pair of [6] covered exactly twice by the given triples."""
    counts: dict[tuple[int, int], int] = {}
    for s in sets:
        for p in itertools.combinations(s, 2):
            counts[p] = counts.get(p, 0) + 1
    return len(counts) == 15 and all(v == 2 for v in counts.values())


def oracle_separating_permutations(n: int, g_set: tuple[int, ...], h_set: tuple[int, ...]) -> int:
    """Count separating permutations by full enumeration of all n!."""
    inter = set(g_set) & set(h_set)
    assert len(inter) == 1
    i = next(iter(inter))
    gs, hs = set(g_set), set(h_set)
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        j = perm.index(i)
        before = set(perm[: j + 1])
        after = set(perm[j:])
        if (gs <= before and hs <= after) or (hs <= before and gs <= after):
            count += 1
    return count


def all_sunflowers_3_1(fam: SetFamily) -> list[tuple[tuple[int, ...], ...]]:
    """Every 3-petal sunflower with singleton kernel, by full enumeration."""
    out = []
    for combo in itertools.combinations(fam.members, 3):
        inters = {a & b for a, b in itertools.combinations(combo, 2)}
        if len(inters) == 1 and next(iter(inters)).bit_count() == 1:
            out.append(tuple(elements_of(m) for m in combo))
    return out
