"""Greedy burning of path forests and combs, and the greedy completion time.

``greedy_path_forest`` always fires into the longest remaining segment,
``greedy_comb`` first clears the spine region and then hands the leftover
vertical segments to ``greedy_path_forest``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt

from .burn import BurningSequence

PathForest = list[int]


@dataclass(frozen=True)
class GreedyOutcome:
    success: bool
    sequence: BurningSequence
    burned_layers: int  # top levels of the comb fully burned when the run stops

    def to_json(self) -> dict:
        out = self.sequence.to_json()
        out["success"] = self.success
        out["burned_layers"] = self.burned_layers
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _ceil_sqrt(x: int) -> int:
    s = isqrt(x)
    return s if s * s == x else s + 1


def _forest_run(T: int, lengths: list[int], stop_early: bool = False):
    """Core of the path-forest greedy.

    Returns ``(success, fires, remaining)`` where ``fires`` lists
    ``(segment, depth)`` pairs with ``depth`` 0-based from the segment's
    original top, and ``remaining[i]`` is what is left of segment ``i``
    (always a bottom piece, since every fire clears a top piece).
    """
    top = [0] * len(lengths)
    left = list(lengths)
    alive = [i for i, x in enumerate(left) if x > 0]
    fires = []
    total = sum(left[i] for i in alive)
    for k in range(1, T + 1):
        if not alive:
            return True, fires, left
        rounds_left = T - k + 1
        if stop_early and total > rounds_left * rounds_left:
            return False, fires, left
        radius = T - k
        best = alive[0]
        for i in alive:
            if left[i] > left[best]:
                best = i
        if left[best] >= radius + 1:
            depth = top[best] + radius
            burned = min(2 * radius + 1, left[best])
        else:
            depth = top[best] + left[best] - 1
            burned = left[best]
        fires.append((best, depth))
        top[best] += burned
        left[best] -= burned
        total -= burned
        if left[best] == 0:
            alive.remove(best)
    return not alive, fires, left


def greedy_path_forest(T: int, forest: PathForest) -> GreedyOutcome:
    """Run the path-forest greedy for ``T`` rounds.

    Centers are ``(segment, depth)`` with both indices 0-based; ties among
    equally long segments go to the first one in list order.
    """
    if T < 1:
        raise ValueError("T must be positive")
    if any(x < 1 for x in forest):
        raise ValueError("segment lengths must be positive")
    ok, fires, left = _forest_run(T, list(forest))
    # a "layer" here is a depth fully cleared in every segment
    layers = min((x - r for x, r in zip(forest, left)), default=0)
    return GreedyOutcome(ok, BurningSequence(T, fires), layers)


def _comb_run(T: int, n: int, m: int, S: int, stop_early: bool = False):
    if T < 1:
        raise ValueError("T must be positive")
    if n < 1 or m < 1:
        raise ValueError("comb dimensions must be positive")
    if not 1 <= S <= n:
        raise ValueError(f"offset S={S} outside [1, {n}]")

    if n == 1:
        # C(1, m) is the path P_m: greedy from its top end
        ok, fires, left = _forest_run(T, [m], stop_early)
        return ok, [(1, d + 1) for _, d in fires], [m - left[0]]

    burned = [0] * (n + 1)  # burned[t]: heights 1..burned[t] of tooth t are burned; index 0 unused
    centers: list[tuple[int, int]] = []

    def spine_fire(c: int, radius: int) -> None:
        lo, hi = max(1, c - radius), min(n, c + radius)
        for t in range(lo, hi + 1):
            h = min(m, radius - abs(t - c) + 1)
            if h > burned[t]:
                burned[t] = h
        centers.append((c, 1))

    def first_unburned_leaf(start: int = 1) -> int | None:
        for t in range(start, n + 1):
            if burned[t] < m:
                return t
        return None

    k = 1
    scan = 1
    if n >= m:
        while k <= T - m:
            radius = T - k
            leaf = first_unburned_leaf(scan)
            if leaf is None:
                c = n
            else:
                scan = leaf
                c = min(n, leaf + max(0, radius - (m - 1)))
            spine_fire(c, radius)
            k += 1
        if first_unburned_leaf(scan) is None:
            return True, centers, burned[1:]

    if k <= T:
        open_leaves = [t for t in range(1, n + 1) if burned[t] < m]
        c = open_leaves[S - 1] if len(open_leaves) >= S else n
        spine_fire(c, T - k)
        k += 1
        if first_unburned_leaf() is None:
            return True, centers, burned[1:]

    if k > T:
        return False, centers, burned[1:]

    teeth = [t for t in range(1, n + 1) if burned[t] < m]
    ok, fires, left = _forest_run(T - k + 1, [m - burned[t] for t in teeth], stop_early)
    for seg, depth in fires:
        t = teeth[seg]
        centers.append((t, burned[t] + 1 + depth))
    for seg, t in enumerate(teeth):
        burned[t] = m - left[seg]
    return ok, centers, burned[1:]


def greedy_comb(T: int, n: int, m: int, S: int = 1) -> GreedyOutcome:
    """Greedy burning of ``C(n, m)`` in ``T`` rounds with final spine-fire offset ``S``.

    Spine phase (only when ``n >= m``): fire ``k`` goes on the spine
    ``(T - k) - (m - 1)`` teeth right of the leftmost tooth whose leaf is
    still unburned, so that leaf sits exactly at distance ``T - k``; it is
    clamped to the last spine vertex.  Then one spine fire above the S-th
    leftmost unburned leaf, then the path-forest greedy on what is left.

    For ``n = 1`` the comb is the path ``P_m`` and the path greedy is run
    directly from its top end.
    """
    ok, centers, heights = _comb_run(T, n, m, S)
    return GreedyOutcome(ok, BurningSequence(T, centers), min(heights))


def greedy_succeeds(T: int, n: int, m: int, S: int = 1) -> bool:
    return _comb_run(T, n, m, S, stop_early=True)[0]


def t_greedy(n: int, m: int, S: int = 1, start: int | None = None) -> int:
    """Smallest ``T`` for which :func:`greedy_comb` succeeds, by simulation.

    Any successful greedy run is a valid burning sequence and
    ``b(C(n, m)) >= min(n, m)``, so the scan starts there unless told otherwise.
    """
    if n < 1 or m < 1:
        raise ValueError("comb dimensions must be positive")
    T = max(1, min(n, m)) if start is None else max(1, start)
    while not greedy_succeeds(T, n, m, S):
        T += 1
    return T


def t_greedy_spine_closed(n: int, m: int) -> int:
    if not n >= m >= 1:
        raise ValueError(f"requires n >= m >= 1, got n={n}, m={m}")
    return m - 1 + _ceil_sqrt(n - m + 1)


def burned_layers_numerator(T: int, n: int) -> int:
    """``n * M(T)``: vertices in fully burned levels of the infinite comb of width ``n``.

    Width 1 is a ray burned by the plain path greedy, which clears ``T**2`` vertices.
    """
    if n == 1:
        return T * T
    r = (T - 1) % n
    return T * T + (n - 2) * T + 1 + r * (n - r) - n * (n - 1)


def burned_layers_closed(T: int, n: int) -> int:
    """Fully burned levels ``M(T)`` of the infinite comb after ``T`` greedy rounds (``T >= n``)."""
    if n < 1:
        raise ValueError("n must be positive")
    if T < n:
        raise ValueError(f"requires T >= n, got T={T}, n={n}")
    num = burned_layers_numerator(T, n)
    q, rem = divmod(num, n)
    assert rem == 0, (T, n, num)
    return q


def t_greedy_tooth_fast(n: int, m: int) -> int:
    """Smallest ``T`` with ``M(T) >= m`` by binary search, for ``1 <= n <= m``.

    The search window is ``[ceil(sqrt(nm)) - ceil(n/2), ceil(sqrt(nm))]``
    (clipped below at ``n``).  Works with arbitrarily large integers.
    """
    if not 1 <= n <= m:
        raise ValueError(f"requires 1 <= n <= m, got n={n}, m={m}")
    top = _ceil_sqrt(n * m)
    if n == 1:
        return top
    target = n * m
    lo = max(n, top - (n + 1) // 2)
    hi = top
    while lo < hi:
        mid = (lo + hi) // 2
        if burned_layers_numerator(mid, n) >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def infinite_comb_layers(T: int, n: int) -> int:
    """Fully burned levels of ``C(n, inf)`` after ``T`` greedy rounds, by simulation."""
    deep = T * T + n * T + 1  # deeper than any fire can reach
    return greedy_comb(T, n, max(deep, n), 1).burned_layers
