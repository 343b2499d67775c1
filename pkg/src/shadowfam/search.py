"""Exact computation of the maximum intersecting family with prescribed
shadow degree, enumeration of the extremal families up to isomorphism, and
canonical forms.

The solver is a depth-first branch and bound over the k-subsets of [n] in
lexicographic order.  A partial family is only ever extended by sets meeting
all chosen members, so every node is an intersecting family; the shadow
degree constraint is not hereditary (new members create new shadow
elements), so feasibility is tracked incrementally and read off at every
node rather than assumed along branches.  The first chosen set is pinned to
[k]; the objective is invariant under relabeling, so this loses nothing.
All tie-breaking is lexicographic and runs are deterministic.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Optional

from . import constructions
from .core import (
    CapacityError,
    DomainError,
    SetFamily,
    elements_of,
    is_intersecting,
    shadow_degree,
    sort_masks,
)

CANONICAL_MAX_N = 9  # exhaustive relabeling; 9! permutations is the ceiling we accept


@dataclass(frozen=True)
class SearchProblem:
    n: int
    k: int
    r: int
    enumerate_extremal: bool = False
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None

    def __post_init__(self):
        if not 1 <= self.r:
            raise DomainError(f"need r >= 1, got r={self.r}")
        if not 1 <= self.k <= self.n:
            raise DomainError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class SearchReport:
    problem: SearchProblem
    optimum: int
    feasible: bool
    proven: bool
    witness: Optional[SetFamily]
    extremal_classes: Optional[tuple[SetFamily, ...]]
    nodes_expanded: int


class _BudgetExceeded(Exception):
    pass


class _Solver:
    """Shared machinery for the optimum pass and the collection pass."""

    MAX_UNIVERSE = 4096

    def __init__(self, n: int, k: int, r: int,
                 node_budget: Optional[int], time_budget: Optional[float]):
        self.n, self.k, self.r = n, k, r
        self.node_budget = node_budget
        self.deadline = time.monotonic() + time_budget if time_budget else None
        self.nodes = 0

        if math.comb(n, k) > self.MAX_UNIVERSE:
            raise CapacityError(
                f"search universe C({n},{k}) exceeds the supported {self.MAX_UNIVERSE} sets")
        self.univ = [self._mask(c) for c in itertools.combinations(range(1, n + 1), k)]
        m = len(self.univ)
        self.adj = [0] * m          # j intersecting i, any j
        self.disj = [0] * m         # j disjoint from i, any j
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                if self.univ[i] & self.univ[j]:
                    self.adj[i] |= 1 << j
                else:
                    self.disj[i] |= 1 << j
        # supply masks: which universe sets contain a given (k-1)-subset
        self.cover: dict[int, int] = {}
        for i, s in enumerate(self.univ):
            for e in self._one_removed(s):
                self.cover[e] = self.cover.get(e, 0) | (1 << i)

        self.counts: dict[int, int] = {}
        self.deficient: set[int] = set()
        self.chosen: list[int] = []

    @staticmethod
    def _mask(elems) -> int:
        m = 0
        for e in elems:
            m |= 1 << (e - 1)
        return m

    @staticmethod
    def _one_removed(mask: int):
        m = mask
        while m:
            low = m & -m
            yield mask ^ low
            m ^= low

    # incremental shadow-degree bookkeeping ---------------------------------

    def _include(self, i: int):
        r = self.r
        for e in self._one_removed(self.univ[i]):
            before = self.counts.get(e, 0)
            self.counts[e] = before + 1
            if before == 0:
                if r > 1:
                    self.deficient.add(e)
            elif before == r - 1:
                self.deficient.discard(e)
        self.chosen.append(i)

    def _exclude(self, i: int):
        r = self.r
        for e in self._one_removed(self.univ[i]):
            after = self.counts[e] - 1
            if after == 0:
                del self.counts[e]
                if r > 1:
                    self.deficient.discard(e)
            else:
                self.counts[e] = after
                if after == r - 1:
                    self.deficient.add(e)
        self.chosen.pop()

    def _tick(self):
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _BudgetExceeded
        if self.deadline is not None and not self.nodes % 1024 and \
                time.monotonic() > self.deadline:
            raise _BudgetExceeded

    # admissible pruning -----------------------------------------------------

    def _matching_slack(self, cand: int) -> int:
        """Greedy count of vertex-disjoint candidate pairs that are disjoint
        as sets; any intersecting subfamily drops one set per pair."""
        matched = 0
        rem = cand
        while rem:
            low = rem & -rem
            rem ^= low
            partners = self.disj[low.bit_length() - 1] & rem
            if partners:
                rem ^= partners & -partners
                matched += 1
        return matched

    def _supply_blocked(self, cand: int) -> bool:
        """True when some already-deficient shadow element can no longer
        reach codegree r using the remaining candidates."""
        r = self.r
        for e in self.deficient:
            if (self.cover.get(e, 0) & cand).bit_count() < r - self.counts[e]:
                return True
        return False

    def family(self) -> SetFamily:
        return SetFamily(self.n, self.k, tuple(self.univ[i] for i in self.chosen))


def _optimum_pass(sv: _Solver, seed: Optional[SetFamily]) -> tuple[int, Optional[SetFamily], bool]:
    """DFS maximizing family size; returns (best, witness, proven)."""
    best = 0
    witness: Optional[SetFamily] = None
    if seed is not None:
        best = len(seed)
        witness = seed

    def dfs(cand: int):
        nonlocal best, witness
        sv._tick()
        depth = len(sv.chosen)
        if depth > best and not sv.deficient:
            best = depth
            witness = sv.family()
        if depth + cand.bit_count() <= best:
            return
        if depth + cand.bit_count() - sv._matching_slack(cand) <= best:
            return
        if sv._supply_blocked(cand):
            return
        c = cand
        while c:
            if depth + c.bit_count() <= best:
                break
            low = c & -c
            c ^= low
            i = low.bit_length() - 1
            sv._include(i)
            dfs(c & sv.adj[i])
            sv._exclude(i)

    try:
        sv._include(0)
        dfs(sv.adj[0] & ~1)
        sv._exclude(0)
        return best, witness, True
    except _BudgetExceeded:
        sv.chosen.clear()
        sv.counts.clear()
        sv.deficient.clear()
        return best, witness, False


def _collect_pass(sv: _Solver, target: int) -> tuple[list[SetFamily], bool]:
    """DFS collecting every feasible family of size exactly `target` whose
    first member is [k]."""
    out: list[SetFamily] = []

    def dfs(cand: int):
        sv._tick()
        depth = len(sv.chosen)
        if depth == target:
            if not sv.deficient:
                out.append(sv.family())
            return
        if depth + cand.bit_count() < target:
            return
        if depth + cand.bit_count() - sv._matching_slack(cand) < target:
            return
        if sv._supply_blocked(cand):
            return
        c = cand
        while c:
            if depth + c.bit_count() < target:
                break
            low = c & -c
            c ^= low
            i = low.bit_length() - 1
            sv._include(i)
            dfs(c & sv.adj[i])
            sv._exclude(i)

    try:
        sv._include(0)
        dfs(sv.adj[0] & ~1)
        sv._exclude(0)
        return out, True
    except _BudgetExceeded:
        return out, False


def _warm_start(n: int, k: int, r: int) -> Optional[SetFamily]:
    """Best verified-feasible construction, used as the initial lower bound.

    Candidates are checked through the core operations before use, so a
    wrong guess can never corrupt the optimum."""
    candidates = []
    if r == 1:
        candidates.append(constructions.star(n, k, 1))
    m = min(2 * k - 1, n)
    if m >= k:
        candidates.append(constructions.complete_on(range(1, m + 1), k, n=n))
    if n >= 2 * k and r <= k:
        candidates.append(constructions.ell_family(n, k, r))
    best = None
    for fam in candidates:
        if not fam.members or not is_intersecting(fam):
            continue
        if shadow_degree(fam) < r:
            continue
        if best is None or len(fam) > len(best):
            best = fam
    return best


def solve(problem: SearchProblem) -> SearchReport:
    """Exact optimum (and, on request, all extremal isomorphism classes)."""
    n, k, r = problem.n, problem.k, problem.r
    if r > k:
        # a non-empty intersecting family with shadow degree >= r forces
        # r <= k; confirmed by the exhaustive oracle tests at small scale
        return SearchReport(problem, 0, False, True, None,
                            () if problem.enumerate_extremal else None, 0)

    sv = _Solver(n, k, r, problem.node_budget, problem.time_budget)
    best, witness, proven = _optimum_pass(sv, _warm_start(n, k, r))
    feasible = best > 0
    classes: Optional[tuple[SetFamily, ...]] = None

    if problem.enumerate_extremal:
        classes = ()
        if feasible and proven:
            collected, done = _collect_pass(sv, best)
            proven = proven and done
            canon: dict[tuple, SetFamily] = {}
            for fam in collected:
                cf = canonical_form(fam).family
                canon.setdefault(cf.sets(), cf)
            classes = tuple(canon[key] for key in sorted(canon))

    return SearchReport(problem, best, feasible, proven,
                        witness if feasible else None, classes, sv.nodes)


def max_family_size(n: int, k: int, r: int, *, node_budget: Optional[int] = None,
                    time_budget: Optional[float] = None) -> SearchReport:
    return solve(SearchProblem(n, k, r, False, node_budget, time_budget))


def enumerate_extremal(n: int, k: int, r: int, *, node_budget: Optional[int] = None,
                       time_budget: Optional[float] = None) -> SearchReport:
    return solve(SearchProblem(n, k, r, True, node_budget, time_budget))


# ---------------------------------------------------------------------------
# canonical forms


@dataclass(frozen=True)
class CanonicalForm:
    """A family relabeled to its lexicographically least form, along with
    the relabeling used (element i maps to permutation[i-1])."""

    family: SetFamily
    permutation: tuple[int, ...]


def _relabel_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << (perm[low.bit_length() - 1] - 1)
        mask ^= low
    return out


def relabel(fam: SetFamily, perm: tuple[int, ...]) -> SetFamily:
    """Apply a permutation of [n] (element i -> perm[i-1]) to a family."""
    if sorted(perm) != list(range(1, fam.n + 1)):
        raise DomainError("permutation must rearrange 1..n")
    return SetFamily(fam.n, fam.k, tuple(_relabel_mask(m, perm) for m in fam.members))


def canonical_form(fam: SetFamily) -> CanonicalForm:
    """Lexicographically least relabeling over all n! permutations of [n].

    Exhaustive by design; idempotent, and equal canonical member lists
    characterize isomorphic families.
    """
    if fam.n > CANONICAL_MAX_N:
        raise CapacityError(
            f"canonical form is exhaustive over n! relabelings; n={fam.n} exceeds "
            f"the supported limit {CANONICAL_MAX_N}")
    best_key = None
    best_perm = None
    for perm in itertools.permutations(range(1, fam.n + 1)):
        key = sorted(tuple(sorted(perm[e - 1] for e in elements_of(m)))
                     for m in fam.members)
        if best_key is None or key < best_key:
            best_key = key
            best_perm = perm
    masks = tuple(_Solver._mask(s) for s in best_key)
    return CanonicalForm(SetFamily(fam.n, fam.k, sort_masks(masks)), best_perm)


def is_isomorphic(a: SetFamily, b: SetFamily) -> bool:
    """True iff some relabeling of [n] maps one family onto the other."""
    if a.n != b.n:
        raise DomainError(f"families live on different ground sets ({a.n} vs {b.n})")
    if len(a) != len(b):
        return False
    if sorted(m.bit_count() for m in a.members) != sorted(m.bit_count() for m in b.members):
        return False
    return canonical_form(a).family.members == canonical_form(b).family.members
