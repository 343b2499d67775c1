"""Deterministic generators for the named extremal families.

All generators emit canonical member order, so serialized fixtures are
byte-stable, and every output is intersecting by construction.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

from .core import DomainError, SetFamily, mask_of


def star(n: int, k: int, x: int) -> SetFamily:
    """All k-subsets of [n] through the anchor element x."""
    if not 1 <= x <= n:
        raise DomainError(f"anchor {x} outside [1, {n}]")
    if not 1 <= k <= n:
        raise DomainError(f"k={k} outside [1, n={n}]")
    rest = [e for e in range(1, n + 1) if e != x]
    sets = [sorted((x,) + c) for c in itertools.combinations(rest, k - 1)]
    return SetFamily.from_sets(n, sets, k=k)


def hilton_milner(n: int, k: int) -> SetFamily:
    """Sets through 1 that meet [2, k+1], plus [2, k+1] itself.

    The largest intersecting k-uniform family that is not a star, of size
    C(n-1, k-1) - C(n-k-1, k-1) + 1.
    """
    if n < k + 1 or k < 1:
        raise DomainError(f"hilton_milner needs 1 <= k < n, got n={n}, k={k}")
    block = mask_of(range(2, k + 2), n)
    sets = [block]
    for c in itertools.combinations(range(2, n + 1), k - 1):
        m = mask_of(c, n) | 1
        if m & block:
            sets.append(m)
    return SetFamily(n, k, tuple(set(sets)))


def ell_family_on(n: int, k: int, base: Iterable[int]) -> SetFamily:
    """All k-subsets of [n] meeting the odd-sized base Y in at least
    (|Y|+1)/2 points."""
    ym = mask_of(base, n)
    y = ym.bit_count()
    if y % 2 == 0:
        raise DomainError(f"base must have odd size, got {y}")
    r = (y + 1) // 2
    if not r <= k <= n:
        raise DomainError(f"k={k} must satisfy {r} <= k <= {n}")
    sets = []
    for c in itertools.combinations(range(1, n + 1), k):
        m = mask_of(c, n)
        if (m & ym).bit_count() >= r:
            sets.append(m)
    return SetFamily(n, k, tuple(sets))


def ell_family(n: int, k: int, r: int) -> SetFamily:
    """All k-subsets of [n] meeting [2r-1] in at least r points.

    Intersecting with shadow degree exactly r; the extremal family for
    prescribed shadow degree r once n is large enough.
    """
    if not 1 <= r <= k:
        raise DomainError(f"need 1 <= r <= k, got r={r}, k={k}")
    if n < 2 * k:
        raise DomainError(f"need n >= 2k, got n={n}, k={k}")
    return ell_family_on(n, k, range(1, 2 * r))


def complete_on(base: Iterable[int], k: int, n: Optional[int] = None) -> SetFamily:
    """All k-subsets of the base set, on ground set [n] (default max(base))."""
    base = sorted(set(base))
    if n is None:
        n = base[-1] if base else 1
    if len(base) < k:
        raise DomainError(f"base of size {len(base)} has no {k}-subsets")
    sets = list(itertools.combinations(base, k))
    return SetFamily.from_sets(n, sets, k=k)


# The unique (up to relabeling) 10-block triple system on [6] in which every
# pair of points lies in exactly two blocks.  Computed once by exhaustive
# search over all 10-subsets of the 20 triples of [6] (12 labeled copies, one
# isomorphism class) and frozen here; tests regenerate it from scratch.
_DESIGN_2_6_3_2_BLOCKS = (
    (1, 2, 3),
    (1, 2, 4),
    (1, 3, 5),
    (1, 4, 6),
    (1, 5, 6),
    (2, 3, 6),
    (2, 4, 5),
    (2, 5, 6),
    (3, 4, 5),
    (3, 4, 6),
)


def design_2_6_3_2() -> SetFamily:
    """The 10-block 2-design on [6]: every pair in exactly two blocks.

    Canonical representative of its unique isomorphism class; intersecting,
    3-uniform, shadow degree 2, and not isomorphic to either of the other
    two extremal systems at n = 6.
    """
    return SetFamily.from_sets(6, _DESIGN_2_6_3_2_BLOCKS, k=3)
