"""Executable verifications of the structural facts behind the size bounds.

Each ``verify_*`` function returns a :class:`CheckReport`: failures carry a
concrete counterexample instead of raising, while inputs outside a check's
mathematical domain raise :class:`DomainError`.  The branching process and
the permutation-separation counts are run literally, element by element, so
their outcomes double as independent confirmations of the closed formulas.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional

from . import bounds
from .core import (
    CapacityError,
    DomainError,
    SetFamily,
    elements_of,
    find_sunflower,
    is_intersecting,
    is_support,
    level,
    link,
    mask_of,
    min_member_size,
    rank,
    shadow_degree,
    trace,
    transversal_number,
)

SEPARATION_MAX_N = 9
SUPPORT_MAX_UNION = 16


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named verification."""

    check: str
    passed: bool
    details: dict = field(default_factory=dict)
    counterexample: Optional[dict] = None


# ---------------------------------------------------------------------------
# branching process


@dataclass(frozen=True)
class BranchingNode:
    sequence: tuple[int, ...]
    blocking_set: Optional[tuple[int, ...]]  # the member avoiding the sequence; None on leaves


@dataclass(frozen=True)
class BranchingRun:
    base_family: SetFamily
    r: int
    tree: tuple[BranchingNode, ...]
    leaves: tuple[tuple[int, ...], ...]


def run_branching(base: SetFamily, r: int, *, choice: str = "lex",
                  seed: int = 0) -> BranchingRun:
    """Run the sequence-branching process on a uniform intersecting family.

    Stage one picks a member H1 and opens one single-element sequence per
    element of H1.  Each later stage takes a sequence S shorter than r,
    picks a member disjoint from S, and extends S by each of its elements.
    With p = member size and transversal number at least r this terminates
    with exactly p^r sequences of length r.

    ``choice='lex'`` always takes the first member in canonical order;
    ``choice='random'`` draws the blocking member uniformly from the valid
    ones under the given seed (the covering claim must hold either way).
    """
    if choice not in ("lex", "random"):
        raise DomainError(f"choice must be 'lex' or 'random', got {choice!r}")
    if not base.is_uniform or not base.members:
        raise DomainError("branching needs a non-empty uniform family")
    if not is_intersecting(base):
        raise DomainError("branching needs an intersecting family")
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    if transversal_number(base) < r:
        raise DomainError(
            f"transversal number {transversal_number(base)} below r={r}: "
            "some sequence would admit no blocking set")

    rng = random.Random(seed)

    def pick(avoid_mask: int) -> int:
        valid = [m for m in base.members if m & avoid_mask == 0]
        if not valid:
            raise DomainError("no member avoids the current sequence")
        if choice == "lex":
            return valid[0]
        return valid[rng.randrange(len(valid))]

    h1 = pick(0)
    nodes: list[BranchingNode] = [BranchingNode((), elements_of(h1))]
    queue: list[tuple[int, ...]] = [(x,) for x in elements_of(h1)]
    leaves: list[tuple[int, ...]] = []
    qi = 0
    while qi < len(queue):
        seq = queue[qi]
        qi += 1
        if len(seq) == r:
            nodes.append(BranchingNode(seq, None))
            leaves.append(seq)
            continue
        hs = pick(mask_of(seq, base.n))
        nodes.append(BranchingNode(seq, elements_of(hs)))
        for y in elements_of(hs):
            queue.append(seq + (y,))
    return BranchingRun(base, r, tuple(nodes), tuple(leaves))


def verify_branching_cover(run: BranchingRun, fam: SetFamily) -> CheckReport:
    """Check that every member of fam contains the underlying set of some
    generated sequence, and that each level obeys the p^r C(|X|-r, i-r)
    size bound."""
    n = fam.n
    seq_masks = [mask_of(node.sequence, n) for node in run.tree if node.sequence]
    p = min_member_size(run.base_family) if run.base_family.members else 0
    for m in fam.members:
        if not any(sm & m == sm for sm in seq_masks):
            return CheckReport(
                "branching-cover", False,
                {"p": p, "r": run.r, "leaves": len(run.leaves)},
                {"uncovered_member": elements_of(m)})
    x_size = fam.union_mask().bit_count()
    cap = p ** run.r
    for i in sorted({m.bit_count() for m in fam.members}):
        size = len(level(fam, i))
        bound = cap * bounds.binomial(x_size - run.r, i - run.r)
        if size > bound:
            return CheckReport(
                "branching-cover", False,
                {"p": p, "r": run.r, "level": i},
                {"level_size": size, "level_bound": bound})
    return CheckReport(
        "branching-cover", True,
        {"p": p, "r": run.r, "leaves": len(run.leaves), "union_size": x_size})


# ---------------------------------------------------------------------------
# critical families


def _shrunk(fam: SetFamily, member: int, x_bit: int) -> SetFamily:
    others = [m for m in fam.members if m != member]
    new = member ^ x_bit
    if new not in others:
        others.append(new)
    return SetFamily(fam.n, 0, tuple(others))


def is_critical(fam: SetFamily) -> bool:
    """True iff removing any single element from any member breaks the
    intersecting property of the modified family."""
    if not is_intersecting(fam):
        raise DomainError("criticality is defined for intersecting families")
    for member in fam.members:
        m = member
        while m:
            bit = m & -m
            m ^= bit
            if is_intersecting(_shrunk(fam, member, bit)):
                return False
    return True


def reduce_to_critical(fam: SetFamily) -> SetFamily:
    """Shrink an intersecting family to a critical fixpoint.

    Repeatedly drops members that strictly contain another member, then
    applies the first legal single-element shrink in canonical order; stops
    when no shrink keeps the family intersecting.
    """
    if not is_intersecting(fam):
        raise DomainError("reduction is defined for intersecting families")
    current = fam
    while True:
        minimal = [m for m in current.members
                   if not any(o != m and o & m == o for o in current.members)]
        if len(minimal) != len(current.members):
            current = SetFamily(current.n, 0, tuple(minimal))
        applied = False
        for member in current.members:
            for e in elements_of(member):
                candidate = _shrunk(current, member, 1 << (e - 1))
                if is_intersecting(candidate):
                    current = candidate
                    applied = True
                    break
            if applied:
                break
        if not applied:
            return current


def audit_union_bounds(fam: SetFamily) -> CheckReport:
    """Check both union-size bounds for a critical intersecting family of
    rank k: C(2k-1, k-1) + C(2k-4, k-2), and C(2k-3, k-1)(2k-1).

    A bound that degenerates to 0 under the binomial 0-convention (rank 1)
    is recorded as skipped rather than failed.
    """
    if not is_critical(fam):
        raise DomainError("union bounds apply to critical intersecting families")
    k = rank(fam)
    union = fam.union_mask().bit_count()
    tz = bounds.tuza_bound(k)
    ka = bounds.katona_style_bound(k)
    details = {"rank": k, "union_size": union, "tuza_bound": tz, "katona_bound": ka}
    for name, value in (("tuza_bound", tz), ("katona_bound", ka)):
        if value == 0:
            details[f"{name}_skipped"] = "degenerate"
            continue
        if union > value:
            return CheckReport("critical-bounds", False, details,
                               {"union_size": union, "violated": name})
    return CheckReport("critical-bounds", True, details)


# ---------------------------------------------------------------------------
# permutation separation


@dataclass(frozen=True)
class SeparationInstance:
    """Pairs (G_i, H_i) from one family, each intersecting exactly in {i}."""

    n: int
    pairs: tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]

    def __post_init__(self):
        for g, h, i in self.pairs:
            if set(g) & set(h) != {i}:
                raise DomainError(f"pair ({g}, {h}) does not intersect exactly in {{{i}}}")
            if not 1 <= i <= self.n:
                raise DomainError(f"pivot {i} outside [1, {self.n}]")


def _separates(perm: tuple[int, ...], g: frozenset, h: frozenset, i: int) -> bool:
    j = perm.index(i)
    before = set(perm[: j + 1])
    after = set(perm[j:])
    return (g <= before and h <= after) or (h <= before and g <= after)


def separating_permutations(inst: SeparationInstance, pair_index: int) -> int:
    """Count the permutations of [n] separating one recorded pair, by full
    enumeration of all n! permutations."""
    if inst.n > SEPARATION_MAX_N:
        raise CapacityError(f"permutation enumeration capped at n={SEPARATION_MAX_N}")
    g, h, i = inst.pairs[pair_index]
    gs, hs = frozenset(g), frozenset(h)
    return sum(1 for perm in itertools.permutations(range(1, inst.n + 1))
               if _separates(perm, gs, hs, i))


def verify_no_double_separation(inst: SeparationInstance) -> CheckReport:
    """Check that no permutation separates two distinct recorded pairs, and
    that #pairs times the minimum separation count stays within n!."""
    if inst.n > SEPARATION_MAX_N - 1:
        raise CapacityError(f"double-separation check capped at n={SEPARATION_MAX_N - 1}")
    prepared = [(frozenset(g), frozenset(h), i) for g, h, i in inst.pairs]
    counts = [0] * len(prepared)
    total = 0
    for perm in itertools.permutations(range(1, inst.n + 1)):
        total += 1
        hit = []
        for idx, (gs, hs, i) in enumerate(prepared):
            if _separates(perm, gs, hs, i):
                hit.append(idx)
                if len(hit) > 1:
                    return CheckReport(
                        "double-separation", False, {"pairs": len(prepared)},
                        {"permutation": perm,
                         "separated_pairs": [inst.pairs[j] for j in hit]})
        for idx in hit:
            counts[idx] += 1
    min_count = min(counts) if counts else 0
    ok = len(prepared) * min_count <= total
    details = {"pairs": len(prepared), "min_count": min_count,
               "factorial": total, "counting_bound_holds": ok}
    return CheckReport("double-separation", ok, details,
                       None if ok else {"counts": counts})


def separation_instance_from_family(fam: SetFamily) -> SeparationInstance:
    """For each ground element i, record the first member pair meeting
    exactly in {i}, when one exists."""
    pairs = []
    for i in range(1, fam.n + 1):
        bit = 1 << (i - 1)
        found = None
        for a, b in itertools.combinations(fam.members, 2):
            if a & b == bit:
                found = (elements_of(a), elements_of(b), i)
                break
        if found:
            pairs.append(found)
    return SeparationInstance(fam.n, tuple(pairs))


# ---------------------------------------------------------------------------
# supports


def minimal_support(fam: SetFamily) -> tuple[int, ...]:
    """Lexicographically least minimum-size support: a set whose trace is
    intersecting and free of the empty set.

    Also re-checks, on the trace, that every support element is the exact
    intersection of two trace members (the minimality fact the size bound
    |X| >= 2r+1 rests on).
    """
    if not is_intersecting(fam):
        raise DomainError("supports are defined for intersecting families")
    union = elements_of(fam.union_mask())
    if len(union) > SUPPORT_MAX_UNION:
        raise CapacityError(f"support search capped at union size {SUPPORT_MAX_UNION}")
    for size in range(0, len(union) + 1):
        for combo in itertools.combinations(union, size):
            if is_support(fam, combo):
                _check_support_minimality_fact(fam, combo)
                return combo
    raise AssertionError("unreachable: the full union is a support of an "
                         "intersecting family without empty members")


def _check_support_minimality_fact(fam: SetFamily, x: tuple[int, ...]) -> None:
    tr = trace(fam, x)
    for e in x:
        bit = 1 << (e - 1)
        if not any(a & b == bit for a, b in
                   itertools.combinations_with_replacement(tr.members, 2)):
            raise AssertionError(
                f"support element {e} is not the exact intersection of two "
                "trace members; the returned set cannot be minimal")


# ---------------------------------------------------------------------------
# named verifications


def verify_tau_ge_delta(fam: SetFamily) -> CheckReport:
    """Transversal number at least the shadow degree, on a non-empty
    intersecting uniform family."""
    if not fam.is_uniform or not fam.members:
        raise DomainError("check needs a non-empty uniform family")
    if not is_intersecting(fam):
        raise DomainError("check needs an intersecting family")
    tau = transversal_number(fam)
    delta = shadow_degree(fam)
    ok = tau >= delta
    return CheckReport("tau-ge-delta", ok,
                       {"transversal_number": tau, "shadow_degree": delta},
                       None if ok else {"family": fam.sets()})


def verify_link_degree(fam: SetFamily, r: int) -> CheckReport:
    """Shadow degree at least r survives taking the link at any point."""
    if not fam.is_uniform or fam.k < 2 or not fam.members:
        raise DomainError("check needs a non-empty uniform family with k >= 2")
    if shadow_degree(fam) < r:
        raise DomainError(f"family has shadow degree below r={r}")
    for x in range(1, fam.n + 1):
        lk = link(fam, (x,))
        if not lk.members:
            continue
        d = shadow_degree(lk)
        if d < r:
            return CheckReport("link-degree", False,
                               {"r": r, "point": x},
                               {"point": x, "link_shadow_degree": d,
                                "link": lk.sets()})
    return CheckReport("link-degree", True, {"r": r})


def verify_no_sunflower_3_1(fam: SetFamily) -> CheckReport:
    """No sunflower with three petals and a singleton kernel, in an
    intersecting uniform family of shadow degree at least 2."""
    if not fam.is_uniform or not fam.members:
        raise DomainError("check needs a non-empty uniform family")
    if not is_intersecting(fam):
        raise DomainError("check needs an intersecting family")
    if shadow_degree(fam) < 2:
        raise DomainError("check needs shadow degree at least 2")
    witness = find_sunflower(fam, 3, 1)
    if witness is None:
        return CheckReport("no-sunflower", True, {"size": 3, "kernel_size": 1})
    return CheckReport("no-sunflower", False, {"size": 3, "kernel_size": 1},
                       {"petals": witness.petals, "kernel": witness.kernel})


def verify_delta_k_classification(n: int, k: int) -> CheckReport:
    """Every non-empty intersecting k-uniform family on [n] with shadow
    degree >= k consists of all k-subsets of some (2k-1)-point set.

    Exhaustive over intersecting subfamilies of the k-subsets of [n]
    (depth-first, each intersecting family visited once).
    """
    import math
    if math.comb(n, k) > 20:
        raise CapacityError(f"classification check needs C(n,k) <= 20, got C({n},{k})")
    univ = []
    for c in itertools.combinations(range(1, n + 1), k):
        m = 0
        for e in c:
            m |= 1 << (e - 1)
        univ.append(m)
    u = len(univ)
    adj = [0] * u
    for i in range(u):
        for j in range(u):
            if i != j and univ[i] & univ[j]:
                adj[i] |= 1 << j

    checked = 0
    bad: Optional[dict] = None

    def qualifies(chosen: list[int]) -> bool:
        counts: dict[int, int] = {}
        for idx in chosen:
            fm = univ[idx]
            mm = fm
            while mm:
                b = mm & -mm
                counts[fm ^ b] = counts.get(fm ^ b, 0) + 1
                mm ^= b
        return min(counts.values()) >= k if counts else len(chosen) >= k

    def is_complete_on_union(chosen: list[int]) -> bool:
        union = 0
        for idx in chosen:
            union |= univ[idx]
        if union.bit_count() != 2 * k - 1:
            return False
        members = {univ[idx] for idx in chosen}
        want = len(members) == (len(chosen))
        expected = itertools.combinations(elements_of(union), k)
        exp_masks = set()
        for c in expected:
            m = 0
            for e in c:
                m |= 1 << (e - 1)
            exp_masks.add(m)
        return want and members == exp_masks

    chosen: list[int] = []

    def dfs(cand: int):
        nonlocal checked, bad
        if bad is not None:
            return
        if chosen and qualifies(chosen):
            checked += 1
            if not is_complete_on_union(chosen):
                bad = {"family": [elements_of(univ[i]) for i in chosen]}
                return
        c = cand
        while c:
            low = c & -c
            c ^= low
            i = low.bit_length() - 1
            chosen.append(i)
            dfs(c & adj[i])
            chosen.pop()

    dfs((1 << u) - 1)
    passed = bad is None
    return CheckReport("classification", passed,
                       {"n": n, "k": k, "qualifying_families": checked},
                       bad)
