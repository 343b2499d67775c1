"""Seeded random generators of intersecting families for property suites.

All generators take an explicit ``random.Random`` (or a seed) and are fully
deterministic given it.  Families are built by rejection: a candidate set
joins only if it meets every member already chosen, so outputs are
intersecting by construction.
"""

from __future__ import annotations

import itertools
import random
from typing import Optional, Union

from .core import SetFamily, mask_of, transversal_number

RngLike = Union[int, random.Random]


def _rng(seed: RngLike) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_intersecting_uniform(n: int, k: int, seed: RngLike,
                                max_members: Optional[int] = None) -> SetFamily:
    """A non-empty intersecting k-uniform family on [n]."""
    rng = _rng(seed)
    pool = [mask_of(c, n) for c in itertools.combinations(range(1, n + 1), k)]
    rng.shuffle(pool)
    target = max_members if max_members is not None else rng.randint(1, len(pool))
    chosen: list[int] = []
    for m in pool:
        if all(m & c for c in chosen):
            chosen.append(m)
            if len(chosen) >= target:
                break
    return SetFamily(n, k, tuple(chosen))


def random_intersecting_mixed(n: int, max_size: int, seed: RngLike,
                              rounds: Optional[int] = None) -> SetFamily:
    """A non-empty intersecting family with member sizes in [1, max_size]."""
    rng = _rng(seed)
    first_size = rng.randint(1, max_size)
    first = mask_of(rng.sample(range(1, n + 1), first_size), n)
    chosen = [first]
    for _ in range(rounds if rounds is not None else rng.randint(1, 4 * n)):
        size = rng.randint(1, max_size)
        m = mask_of(rng.sample(range(1, n + 1), size), n)
        if m not in chosen and all(m & c for c in chosen):
            chosen.append(m)
    return SetFamily(n, 0, tuple(chosen))


def random_family_with_tough_min_level(n: int, r: int, seed: RngLike,
                                       max_size: Optional[int] = None) -> SetFamily:
    """An intersecting family (possibly mixed sizes) whose minimum-size
    level has transversal number at least r.

    Seeded with all p-subsets of a (2p-1)-point core for a random p >= r
    (that level alone has transversal number p), then fattened with random
    larger sets that keep the family intersecting.
    """
    rng = _rng(seed)
    p_max = (n + 1) // 2
    if r > p_max:
        raise ValueError(f"need r <= (n+1)//2 to host a core, got r={r}, n={n}")
    p = rng.randint(r, p_max)
    core_pts = rng.sample(range(1, n + 1), 2 * p - 1)
    chosen = [mask_of(c, n) for c in itertools.combinations(sorted(core_pts), p)]
    top = max_size if max_size is not None else n
    for _ in range(rng.randint(0, 3 * n)):
        size = rng.randint(p, max(p, top))
        m = mask_of(rng.sample(range(1, n + 1), min(size, n)), n)
        if m not in chosen and all(m & c for c in chosen):
            chosen.append(m)
    fam = SetFamily(n, 0, tuple(chosen))
    min_level = [m for m in fam.members if m.bit_count() == p]
    assert transversal_number(SetFamily(n, p, tuple(min_level))) >= r
    return fam


def random_intersecting_bounded_rank(n: int, max_rank: int, seed: RngLike) -> SetFamily:
    """A non-empty intersecting family with all member sizes <= max_rank."""
    return random_intersecting_mixed(n, max_rank, seed)
