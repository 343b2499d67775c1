"""Ground-set and set-family primitives.

Sets over a ground set [n] = {1, ..., n} are stored as bitmasks (element i
on bit i-1).  A :class:`SetFamily` is an immutable, duplicate-free,
canonically ordered collection of such masks together with its ground-set
parameters.  Every operation in this module is a pure function.

Canonical member order is lexicographic on the increasing element tuples,
e.g. {1,4} sorts before {2,3}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MAX_GROUND_SET = 64  # documented capacity; masks are plain ints, so this is a policy cap


class FamilyError(ValueError):
    """Base class for invalid set-family inputs."""


class UniformityError(FamilyError):
    """Operation requires a k-uniform family."""


class DomainError(FamilyError):
    """Input is outside the mathematical domain of the operation."""


class CapacityError(FamilyError):
    """Input exceeds a documented size limit."""


# ---------------------------------------------------------------------------
# masks


def mask_of(elements: Iterable[int], n: int) -> int:
    """Bitmask of a set given as 1-based elements, validated against [n]."""
    m = 0
    for e in elements:
        if not 1 <= e <= n:
            raise DomainError(f"element {e} outside ground set [1, {n}]")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Increasing 1-based elements of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _member_key(mask: int) -> tuple[int, ...]:
    return elements_of(mask)


def sort_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Masks in canonical (element-tuple lexicographic) order."""
    return tuple(sorted(masks, key=_member_key))


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class SetFamily:
    """A finite family of subsets of [n].

    ``k > 0`` marks a k-uniform family (all members of size k, possibly
    empty-as-in-no-members); ``k == 0`` marks a family with no uniformity
    promise.  ``members`` are bitmasks in canonical order.
    """

    n: int
    k: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND_SET:
            raise CapacityError(f"ground set size {self.n} outside [1, {MAX_GROUND_SET}]")
        if self.k < 0 or self.k > self.n:
            raise DomainError(f"uniformity k={self.k} outside [0, n={self.n}]")
        full = (1 << self.n) - 1
        seen = set()
        for m in self.members:
            if m & ~full:
                raise DomainError("member has elements outside the ground set")
            if m in seen:
                raise FamilyError("duplicate member")
            seen.add(m)
            if self.k and m.bit_count() != self.k:
                raise UniformityError(
                    f"member of size {m.bit_count()} in a {self.k}-uniform family"
                )
        object.__setattr__(self, "members", sort_masks(self.members))

    # construction helpers -------------------------------------------------

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]], k: Optional[int] = None) -> "SetFamily":
        """Build a family from element iterables.

        ``k`` defaults to the common member size when all sizes agree
        (0, i.e. no promise, otherwise).  Duplicate sets are an error.
        """
        masks = [mask_of(s, n) for s in sets]
        if k is None:
            sizes = {m.bit_count() for m in masks}
            k = sizes.pop() if len(sizes) == 1 else 0
        return cls(n, k, tuple(masks))

    @classmethod
    def _from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "SetFamily":
        """Internal: dedupe deliberately (set semantics of derived families)."""
        return cls(n, k, tuple(set(masks)))

    # views ----------------------------------------------------------------

    def sets(self) -> tuple[tuple[int, ...], ...]:
        """Members as increasing 1-based element tuples, canonical order."""
        return tuple(elements_of(m) for m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    @property
    def is_uniform(self) -> bool:
        return self.k > 0

    def union_mask(self) -> int:
        m = 0
        for x in self.members:
            m |= x
        return m

    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)


def _coerce_mask(fam_or_n, e: Iterable[int]) -> int:
    n = fam_or_n.n if isinstance(fam_or_n, SetFamily) else fam_or_n
    return mask_of(e, n)


# ---------------------------------------------------------------------------
# shadow and co-degree


def _submasks_one_removed(mask: int):
    m = mask
    while m:
        low = m & -m
        yield mask ^ low
        m ^= low


def shadow(fam: SetFamily) -> SetFamily:
    """All (k-1)-sets contained in some member of a k-uniform family."""
    if not fam.is_uniform:
        raise UniformityError("shadow requires a k-uniform family")
    out = set()
    for m in fam.members:
        out.update(_submasks_one_removed(m))
    return SetFamily._from_masks(fam.n, fam.k - 1 if fam.k > 1 else 0, out)


def codegree(fam: SetFamily, e: Iterable[int]) -> int:
    """Number of members of a k-uniform family containing the (k-1)-set e."""
    if not fam.is_uniform:
        raise UniformityError("codegree requires a k-uniform family")
    em = _coerce_mask(fam, e)
    if em.bit_count() != fam.k - 1:
        raise FamilyError(f"codegree argument must have size k-1 = {fam.k - 1}")
    return sum(1 for m in fam.members if em & m == em)


def shadow_degree(fam: SetFamily) -> int:
    """Minimum co-degree over the shadow of a non-empty k-uniform family."""
    if not fam.is_uniform:
        raise UniformityError("shadow degree requires a k-uniform family")
    if not fam.members:
        raise DomainError("shadow degree of an empty family is undefined")
    counts: dict[int, int] = {}
    for m in fam.members:
        for sub in _submasks_one_removed(m):
            counts[sub] = counts.get(sub, 0) + 1
    if not counts:
        # 1-uniform family: the shadow is {empty set}, contained in every member
        return len(fam.members)
    return min(counts.values())


# ---------------------------------------------------------------------------
# intersecting / matching / transversal


def is_intersecting(fam: SetFamily) -> bool:
    """True iff every two members (a member with itself included) intersect."""
    ms = fam.members
    for i, a in enumerate(ms):
        if a == 0:
            return False
        for b in ms[i + 1:]:
            if a & b == 0:
                return False
    return True


def matching_number(fam: SetFamily) -> int:
    """Maximum number of pairwise disjoint members, by exhaustive DFS."""
    ms = fam.members
    best = 0

    def extend(start: int, used: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if size + (len(ms) - start) <= best:
            return
        for i in range(start, len(ms)):
            if ms[i] & used == 0:
                extend(i + 1, used | ms[i], size + 1)

    extend(0, 0, 0)
    return best


def transversal_number(fam: SetFamily) -> int:
    """Minimum size of a set meeting every member, by increasing-size search."""
    if not fam.members:
        return 0
    if 0 in fam.members:
        raise DomainError("a family containing the empty set has no transversal")
    universe = elements_of(fam.union_mask())
    for t in range(0, len(universe) + 1):
        for combo in itertools.combinations(universe, t):
            tm = 0
            for e in combo:
                tm |= 1 << (e - 1)
            if all(tm & m for m in fam.members):
                return t
    raise AssertionError("unreachable: the full union is always a transversal")


# ---------------------------------------------------------------------------
# link / trace / support / levels


def link(fam: SetFamily, e: Iterable[int]) -> SetFamily:
    """The family {F \\ e : e subset of F in fam} on the same ground set."""
    em = _coerce_mask(fam, e)
    out = {m ^ em for m in fam.members if m & em == em}
    k = fam.k - em.bit_count() if fam.is_uniform and em.bit_count() < fam.k else 0
    return SetFamily._from_masks(fam.n, max(k, 0), out)


def trace(fam: SetFamily, x: Iterable[int]) -> SetFamily:
    """The family {F & x : F in fam}, with duplicates collapsed."""
    xm = _coerce_mask(fam, x)
    return SetFamily._from_masks(fam.n, 0, {m & xm for m in fam.members})


def is_support(fam: SetFamily, x: Iterable[int]) -> bool:
    """True iff the trace on x is intersecting and free of the empty set."""
    t = trace(fam, x)
    if 0 in t.members:
        return False
    return is_intersecting(t)


def level(fam: SetFamily, i: int) -> SetFamily:
    """The slice of members of size exactly i."""
    picked = [m for m in fam.members if m.bit_count() == i]
    return SetFamily._from_masks(fam.n, i if 0 < i <= fam.n else 0, picked)


def min_member_size(fam: SetFamily) -> int:
    if not fam.members:
        raise DomainError("minimum member size of an empty family is undefined")
    return min(m.bit_count() for m in fam.members)


def rank(fam: SetFamily) -> int:
    """Maximum member size (0 for the empty family)."""
    return max((m.bit_count() for m in fam.members), default=0)


# ---------------------------------------------------------------------------
# sunflowers


@dataclass(frozen=True)
class SunflowerWitness:
    """Petals whose pairwise intersections all equal the kernel."""

    petals: tuple[tuple[int, ...], ...]
    kernel: tuple[int, ...]


def find_sunflower(fam: SetFamily, size: int, kernel_size: int) -> Optional[SunflowerWitness]:
    """Lexicographically first sunflower with `size` petals and the given
    kernel size, or None.

    Petals are members of the family; every pairwise intersection must equal
    one common kernel.  Deterministic: member combinations are scanned in
    canonical order.
    """
    if size < 2:
        raise DomainError("a sunflower needs at least 2 petals")
    ms = fam.members
    if len(ms) < size:
        return None
    for combo in itertools.combinations(ms, size):
        kernel = combo[0] & combo[1]
        if kernel.bit_count() != kernel_size:
            continue
        ok = True
        for a, b in itertools.combinations(combo, 2):
            if a & b != kernel:
                ok = False
                break
        if ok:
            return SunflowerWitness(
                petals=tuple(elements_of(m) for m in combo),
                kernel=elements_of(kernel),
            )
    return None
