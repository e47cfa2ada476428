"""Closed forms and bounds for the burning number of combs.

Everything here is integer arithmetic; square roots go through
:func:`math.isqrt` so nothing is off by one at perfect squares.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .greedy import greedy_succeeds, t_greedy_spine_closed, t_greedy_tooth_fast


def ceil_sqrt(x: int) -> int:
    if x < 0:
        raise ValueError("square root of a negative number")
    s = isqrt(x)
    return s if s * s == x else s + 1


def ceil_sqrt_half(x: int) -> int:
    """``ceil(sqrt(x / 2))``: least ``t`` with ``2 t**2 >= x``."""
    if x < 0:
        raise ValueError("square root of a negative number")
    t = isqrt(x // 2)
    while 2 * t * t < x:
        t += 1
    return t


def _check_dims(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise ValueError(f"comb dimensions must be positive, got n={n}, m={m}")


def bnc_bound(n: int, m: int) -> int:
    """``ceil(sqrt(n m))``, the conjectured bound for a graph on ``n m`` vertices."""
    _check_dims(n, m)
    return ceil_sqrt(n * m)


def b_exact_spine(n: int, m: int) -> int:
    """Burning number of ``C(n, m)`` when ``n >= m``: ``m - 1 + ceil(sqrt(n - m + 1))``."""
    _check_dims(n, m)
    return t_greedy_spine_closed(n, m)


# ------------------------------------------------------------- uniform covers

def _cover_split(m: int, r: int) -> tuple[int, int]:
    a = m // (2 * r + 1)
    return a, m - a * (2 * r + 1)


def hat_b_r(n: int, m: int, r: int) -> int:
    """Fewest balls of radius ``r`` covering ``C(n, m)``.

    Each tooth loses ``A = m // (2r+1)`` disjoint in-tooth balls from the
    bottom, leaving a top part of ``L`` levels on every tooth.  Those tops are
    covered by spine balls, each reaching ``2(r - L + 1) + 1`` consecutive
    teeth when ``L <= r + 1``; otherwise every tooth needs its own ball.
    """
    _check_dims(n, m)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    a, left = _cover_split(m, r)
    if left == 0:
        b = 0
    elif left <= r + 1:
        b = -(-n // (2 * (r - left + 1) + 1))
    else:
        b = n
    return a * n + b


def hat_b_r_stated(n: int, m: int, r: int) -> int:
    """The cover-count expression with the remainder rule ``B = n if L >= r``.

    Kept for comparison only: it overcounts whenever ``L = 0`` (for example
    every ``r = 0``) or ``L = r``.  Use :func:`hat_b_r` for real values.
    """
    _check_dims(n, m)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    a, left = _cover_split(m, r)
    b = n if left >= r else -(-n // (2 * (r - left + 1) + 1))
    return a * n + b


def hat_b(n: int, m: int) -> int:
    """Least ``r`` such that ``r`` balls of radius ``r - 1`` cover ``C(n, m)``.

    ``hat_b_r`` does not increase with the radius, so the predicate is
    monotone and a binary search over ``[1, n m]`` finds the threshold.
    """
    _check_dims(n, m)
    lo, hi = 1, n * m
    while lo < hi:
        mid = (lo + hi) // 2
        if hat_b_r(n, m, mid - 1) <= mid:
            hi = mid
        else:
            lo = mid + 1
    return lo


def lower_bound_tilde(n: int, m: int) -> int:
    """``ceil((sqrt(8mn + (2n-1)**2) + 2n + 1) / 4)``, computed exactly.

    This is the threshold for the relaxed count ``nm/(2r-1) + n``, which
    bounds ``hat_b_r`` from above, so the value bounds ``hat_b`` from above
    too.  It is not a lower bound on ``b``: ``(4, 7)`` gives 7 while
    ``b(C(4, 7)) = 6``.  :func:`bounds` does not use it.
    """
    _check_dims(n, m)
    if n > m:
        raise ValueError(f"requires n <= m, got n={n}, m={m}")
    disc = 8 * m * n + (2 * n - 1) ** 2
    return -(-(ceil_sqrt(disc) + 2 * n + 1) // 4)


def tooth_capacity_lower(n: int, m: int) -> int:
    """Least ``k`` with ``k**2 >= n (m - k + 1)``.

    With ``k`` fires every vertex at height ``>= k`` can only be reached
    by a fire on its own tooth, and a fire of radius ``k - i`` covers at
    most ``2(k - i) + 1`` vertices of its tooth; the radii sum to ``k**2``.
    """
    _check_dims(n, m)
    lo, hi = 1, m + 1
    while lo < hi:
        k = (lo + hi) // 2
        if k * k >= n * (m - k + 1):
            hi = k
        else:
            lo = k + 1
    return lo


# ------------------------------------------------------------------ regimes

class Regime(str, enum.Enum):
    SPINE_SQRT = "spine_sqrt"  # m <= sqrt(n): b grows like sqrt(n)
    SPINE_LINEAR = "spine_linear"  # sqrt(n) <= m <= n: b grows like m
    TOOTH = "tooth"  # n <= m: b grows like sqrt(nm)


def regime(n: int, m: int) -> Regime:
    """Growth regime of ``b(C(n, m))``; ties go to the slower-growing side."""
    _check_dims(n, m)
    if m * m <= n:
        return Regime.SPINE_SQRT
    if m <= n:
        return Regime.SPINE_LINEAR
    return Regime.TOOTH


# ----------------------------------------------------------------- tightness

BNC_TIGHT_EXCEPTIONS = frozenset({(7, 2), (8, 3), (9, 4), (8, 2), (11, 2), (12, 3), (12, 2), (18, 2)})


def _require_spine(n: int, m: int) -> None:
    _check_dims(n, m)
    if n < m:
        raise ValueError(f"requires n >= m, got n={n}, m={m}")


def is_bnc_tight_spine_direct(n: int, m: int) -> bool:
    _require_spine(n, m)
    return b_exact_spine(n, m) == bnc_bound(n, m)


def is_bnc_tight_spine_rule(n: int, m: int) -> bool:
    """Tightness from the classification alone, without evaluating either side."""
    _require_spine(n, m)
    return m == 1 or n == m or n - m in (1, 2, 4) or (n, m) in BNC_TIGHT_EXCEPTIONS


def is_bnc_tight_spine(n: int, m: int) -> bool:
    direct = is_bnc_tight_spine_direct(n, m)
    rule = is_bnc_tight_spine_rule(n, m)
    if direct != rule:
        raise AssertionError(f"tightness rule disagrees with closed forms at ({n}, {m})")
    return direct


# -------------------------------------------------------------------- bounds

@dataclass(frozen=True)
class BurnBounds:
    lower: int
    upper: int
    exact: int | None = None

    def __post_init__(self):
        if not 1 <= self.lower <= self.upper:
            raise ValueError(f"bad bracket [{self.lower}, {self.upper}]")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(f"exact value {self.exact} outside [{self.lower}, {self.upper}]")


def _tooth_exact(n: int, m: int) -> int | None:
    if n <= 2:
        return ceil_sqrt(n * m)  # C(1, m) and C(2, m) are paths
    c = m - n
    if c in (1, 2):
        return n + 1
    if 3 <= c <= 6:
        return n + 2
    return None


OFFSET_SEARCH_MAX_N = 64


def tooth_lower_bound(n: int, m: int) -> int:
    """Oracle-free lower bound on ``b(C(n, m))``.

    The best of ``min(n, m)``, ``hat_b``, ``ceil(sqrt(nm/2))`` and the
    per-tooth capacity count.
    """
    _check_dims(n, m)
    return max(min(n, m), hat_b(n, m), ceil_sqrt_half(n * m), tooth_capacity_lower(n, m))


def bounds(n: int, m: int) -> BurnBounds:
    """Bracket on ``b(C(n, m))``, with the exact value wherever it is known.

    For ``n < m`` the lower end combines ``min(n, m)``, the uniform-cover
    parameter ``hat_b``, ``ceil(sqrt(nm/2))`` and the per-tooth capacity
    count.  The upper end is the greedy time, improved by other final-fire
    offsets when ``n`` is small.  A bracket that closes is reported as exact.
    """
    _check_dims(n, m)
    if n >= m:
        b = b_exact_spine(n, m)
        return BurnBounds(b, b, b)
    lower = tooth_lower_bound(n, m)
    upper = t_greedy_tooth_fast(n, m)
    if n <= OFFSET_SEARCH_MAX_N:
        for s in range(2, n + 1):
            while upper > lower and greedy_succeeds(upper - 1, n, m, s):
                upper -= 1
    exact = _tooth_exact(n, m)
    if exact is None and lower == upper:
        exact = lower
    return BurnBounds(lower, upper, exact)
