"""Exact evaluation of the closed-form bounds, sizes, and thresholds.

Everything here is integer or rational arithmetic; no floating point.
Thresholds stated as real-valued lower bounds on n are returned as exact
ceilings, since "n >= x" and "n >= ceil(x)" agree for integer n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import DomainError

# Threshold of the form C * k^(2(r+1)k) with an unspecified constant; exposed
# symbolically only, never evaluated.
FW2024_THRESHOLD_FORMULA = "C * k**(2*(r+1)*k)  (C an unspecified absolute constant)"


def binomial(a: int, b: int) -> int:
    """C(a, b) with the 0-convention for b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def ekr_bound(n: int, k: int) -> int:
    """Maximum size of an intersecting k-uniform family on [n], n >= 2k."""
    if not 0 < 2 * k <= n:
        raise DomainError(f"ekr_bound needs n >= 2k > 0, got n={n}, k={k}")
    return binomial(n - 1, k - 1)


def hm_bound(n: int, k: int) -> int:
    """Maximum size of a non-star intersecting k-uniform family, n > 2k >= 4."""
    if not (n > 2 * k >= 4):
        raise DomainError(f"hm_bound needs n > 2k >= 4, got n={n}, k={k}")
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1


def ell_size(n: int, k: int, r: int) -> int:
    """Number of k-subsets of [n] meeting [2r-1] in at least r points."""
    if not 1 <= r <= k:
        raise DomainError(f"need 1 <= r <= k, got r={r}, k={k}")
    if n < 2 * k:
        raise DomainError(f"need n >= 2k, got n={n}, k={k}")
    return sum(
        binomial(2 * r - 1, i) * binomial(n - 2 * r + 1, k - i)
        for i in range(r, 2 * r)
    )


def blp_threshold(k: int, r: int) -> int:
    """Doubly exponential sufficiency threshold for shadow degree r, exact ceiling.

    k^4/3 for r = 2, 2k^5 for r = 3, and
    ((k+1) k^r 2^k)^(2^k) (2k-2r)^(k-r) / C(2r-1, r) for r >= 4.
    """
    if not 2 <= r <= k:
        raise DomainError(f"blp_threshold needs 2 <= r <= k, got k={k}, r={r}")
    if r == 2:
        return _ceil(Fraction(k**4, 3))
    if r == 3:
        return 2 * k**5
    base = (k + 1) * k**r * 2**k
    return _ceil(Fraction(base ** (2**k) * (2 * k - 2 * r) ** (k - r), binomial(2 * r - 1, r)))


def main_threshold(k: int, r: int) -> int:
    """Sharper sufficiency threshold 2 (r+1)^r k C(2k-1, k) / C(2r-1, r),
    exact ceiling, for 4 <= r <= k-1."""
    if not 4 <= r <= k - 1:
        raise DomainError(f"main_threshold needs 4 <= r <= k-1, got k={k}, r={r}")
    num = 2 * (r + 1) ** r * k * binomial(2 * k - 1, k)
    return _ceil(Fraction(num, binomial(2 * r - 1, r)))


def tuza_bound(k: int) -> int:
    """Union-size bound C(2k-1, k-1) + C(2k-4, k-2) for critical intersecting
    families of rank k."""
    if k < 1:
        raise DomainError(f"tuza_bound needs k >= 1, got {k}")
    return binomial(2 * k - 1, k - 1) + binomial(2 * k - 4, k - 2)


def katona_style_bound(k: int) -> int:
    """Weaker union-size bound C(2k-3, k-1) (2k-1) from the permutation-
    separation count."""
    if k < 1:
        raise DomainError(f"katona_style_bound needs k >= 1, got {k}")
    return binomial(2 * k - 3, k - 1) * (2 * k - 1)


def separation_count(n: int, g: int, h: int) -> int:
    """Number of permutations of [n] separating a fixed pair (G, H) with
    |G| = g, |H| = h, |G & H| = 1: exactly 2 n! (g-1)! (h-1)! / (g+h-1)!.

    The degenerate case g = h = 1 (G = H a singleton) is rejected; the
    formula would exceed n! there.
    """
    if g < 1 or h < 1:
        raise DomainError(f"need g, h >= 1, got g={g}, h={h}")
    if g + h - 1 < 2:
        raise DomainError("degenerate pair g = h = 1 is not separable")
    if g + h - 1 > n:
        raise DomainError(f"need g+h-1 <= n, got g={g}, h={h}, n={n}")
    num = 2 * math.factorial(n) * math.factorial(g - 1) * math.factorial(h - 1)
    den = math.factorial(g + h - 1)
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# inequality-chain audit


@dataclass(frozen=True)
class ChainStep:
    """One audited inequality: name, support size, optional level p, both
    exact sides, and whether lhs <relation> rhs holds."""

    name: str
    support_size: int
    p: Optional[int]
    lhs: int
    rhs: int
    relation: str
    holds: bool


@dataclass(frozen=True)
class ChainAuditReport:
    n: int
    k: int
    r: int
    support_range: tuple[int, int]
    steps: tuple[ChainStep, ...] = field(repr=False)

    @property
    def verdict(self) -> bool:
        return all(s.holds for s in self.steps)

    def failures(self) -> tuple[ChainStep, ...]:
        return tuple(s for s in self.steps if not s.holds)


def _chain_term(X: int, n: int, k: int, r: int, i: int) -> int:
    return binomial(X - r, i - r) * binomial(n - X, k - i)


def audit_inequality_chain(n: int, k: int, r: int) -> ChainAuditReport:
    """Audit, in exact arithmetic, the closing size-bound chain for every
    admissible support size.

    For each support size X in [2r+1, tuza_bound(k)] and each minimum level
    p in [r+1, min(k, X)] the audit records:

    * ``ratio_gt_2``      -- the consecutive-term ratio at i = r+1 exceeds 2
      (cross-multiplied; skipped when k = r+1, where the sum has one term),
    * ``geometric``       -- sum_{i=p..k} C(X-r, i-r) C(n-X, k-i)
      < 2 C(X-r, p-r) C(n-X, k-p),
    * ``level_decreasing``-- p^r C(X-r, p-r) C(n-X, k-p) is non-increasing
      in p on [r+1, min(k, X)],
    * ``ratio_scaled_gt_1`` -- the same ratio scaled by (r/(r+1))^r (the
      exact stand-in for the 1/e factor) still exceeds 1,
    * ``peak_bound``      -- 2 p^r C(X-r, p-r) C(n-X, k-p)
      <= 2 (r+1)^r (X-r) C(n-X, k-r-1),
    * ``widen_support``   -- C(n-X, k-r-1) <= C(n-2r, k-r-1),
    * ``threshold_step``  -- 2 (r+1)^r (X-r) C(n-2r, k-r-1)
      <= C(2r-1, r) C(n-2r+1, k-r),
    * ``beats_extremal``  -- C(2r-1, r) C(n-2r+1, k-r) < ell_size(n, k, r),
    * ``end_to_end``      -- p^r sum_{i=p..k} C(X-r, i-r) C(n-X, k-i)
      < ell_size(n, k, r).

    The verdict is pass iff every recorded step holds.  Running below the
    proven threshold is allowed; steps may then fail (informational runs).
    """
    if not 4 <= r <= k - 1:
        raise DomainError(f"audit needs 4 <= r <= k-1, got k={k}, r={r}")
    if n < 2 * k:
        raise DomainError(f"audit needs n >= 2k, got n={n}, k={k}")

    upper = tuza_bound(k)
    ell = ell_size(n, k, r)
    steps: list[ChainStep] = []

    for X in range(2 * r + 1, upper + 1):
        if k >= r + 2:
            # ratio of consecutive terms at i = r+1, cross-multiplied:
            # 2/(X-r-1) * (n-X-k+r+2)/(k-r-1) > 2
            lhs = 2 * (n - X - k + r + 2)
            rhs = 2 * (X - r - 1) * (k - r - 1)
            steps.append(ChainStep("ratio_gt_2", X, None, lhs, rhs, ">", lhs > rhs))
            scaled_lhs = 2 * r**r * (n - X - k + r + 2)
            scaled_rhs = (r + 1) ** r * (X - r - 1) * (k - r - 1)
            steps.append(
                ChainStep("ratio_scaled_gt_1", X, None, scaled_lhs, scaled_rhs, ">",
                          scaled_lhs > scaled_rhs)
            )

        p_hi = min(k, X)
        peak = 2 * (r + 1) ** r * (X - r) * binomial(n - X, k - r - 1)
        for p in range(r + 1, p_hi + 1):
            total = sum(_chain_term(X, n, k, r, i) for i in range(p, k + 1))
            first = _chain_term(X, n, k, r, p)
            steps.append(
                ChainStep("geometric", X, p, total, 2 * first, "<", total < 2 * first)
            )
            if p + 1 <= p_hi:
                lhs = p**r * _chain_term(X, n, k, r, p)
                rhs = (p + 1) ** r * _chain_term(X, n, k, r, p + 1)
                steps.append(
                    ChainStep("level_decreasing", X, p, lhs, rhs, ">=", lhs >= rhs)
                )
            lhs = 2 * p**r * first
            steps.append(ChainStep("peak_bound", X, p, lhs, peak, "<=", lhs <= peak))
            lhs = p**r * total
            steps.append(ChainStep("end_to_end", X, p, lhs, ell, "<", lhs < ell))

        lhs = binomial(n - X, k - r - 1)
        rhs = binomial(n - 2 * r, k - r - 1)
        steps.append(ChainStep("widen_support", X, None, lhs, rhs, "<=", lhs <= rhs))
        lhs = 2 * (r + 1) ** r * (X - r) * binomial(n - 2 * r, k - r - 1)
        rhs = binomial(2 * r - 1, r) * binomial(n - 2 * r + 1, k - r)
        steps.append(ChainStep("threshold_step", X, None, lhs, rhs, "<=", lhs <= rhs))

    lhs = binomial(2 * r - 1, r) * binomial(n - 2 * r + 1, k - r)
    steps.append(ChainStep("beats_extremal", 0, None, lhs, ell, "<", lhs < ell))

    return ChainAuditReport(n, k, r, (2 * r + 1, upper), tuple(steps))


# ---------------------------------------------------------------------------
# formula registry (CLI threshold reporting)


@dataclass(frozen=True)
class BoundValue:
    """An exactly evaluated formula, tagged for reporting."""

    formula_id: str
    params: dict
    value: int


_FORMULAS = {
    "binomial": (binomial, ("a", "b")),
    "ekr": (ekr_bound, ("n", "k")),
    "hm": (hm_bound, ("n", "k")),
    "ell-size": (ell_size, ("n", "k", "r")),
    "blp": (blp_threshold, ("k", "r")),
    "main": (main_threshold, ("k", "r")),
    "tuza": (tuza_bound, ("k",)),
    "katona": (katona_style_bound, ("k",)),
    "separation-count": (separation_count, ("n", "g", "h")),
}


def formula_ids() -> tuple[str, ...]:
    return tuple(_FORMULAS)


def evaluate_formula(formula_id: str, **params) -> BoundValue:
    """Evaluate a registered formula by id with keyword parameters."""
    if formula_id not in _FORMULAS:
        raise DomainError(f"unknown formula {formula_id!r}; known: {', '.join(_FORMULAS)}")
    fn, names = _FORMULAS[formula_id]
    missing = [a for a in names if params.get(a) is None]
    if missing:
        raise DomainError(f"formula {formula_id!r} needs parameters: {', '.join(missing)}")
    args = {a: params[a] for a in names}
    return BoundValue(formula_id, args, fn(**args))
