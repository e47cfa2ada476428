"""Log-scale limits for combs and path products with ``2^u`` by ``2^(k-u)`` shape.

For a comb ``C(X, Y)`` with ``X = 2^u`` and ``Y = 2^(k-u)`` the quantity
``log2(b) / k`` approaches ``f(u/k)``; ``g`` is the better of the two
orientations and ``h`` the limit for Cartesian and strong grids.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .formulas import b_exact_spine, ceil_sqrt
from .greedy import t_greedy_tooth_fast

MAX_K = 60
CSV_HEADER = ("k", "u", "x_exp", "comb_exponent", "limit_f", "abs_dev")


def _unit(x: float) -> float:
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    return x


def f(x: float) -> float:
    x = _unit(x)
    if x <= 1 / 2:
        return 0.5
    if x <= 2 / 3:
        return 1 - x
    return x / 2


def g(x: float) -> float:
    x = _unit(x)
    return min(f(x), f(1 - x))


def h(x: float) -> float:
    x = _unit(x)
    if x <= 1 / 3:
        return (1 - x) / 2
    if x <= 2 / 3:
        return 1 / 3
    return x / 2


@dataclass(frozen=True)
class ExponentSample:
    k: int
    u: int
    exponent: float  # log2(b or its proxy) / k
    limit: float  # f(u / k)

    @property
    def x_exp(self) -> float:
        return self.u / self.k

    @property
    def abs_dev(self) -> float:
        return abs(self.exponent - self.limit)

    def row(self) -> tuple:
        return (self.k, self.u, self.x_exp, self.exponent, self.limit, self.abs_dev)


def _check_ku(k: int, u: int) -> None:
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be in [1, {MAX_K}], got {k}")
    if not 0 <= u <= k:
        raise ValueError(f"u must be in [0, {k}], got {u}")


def comb_value(n: int, m: int) -> int:
    """Exact ``b`` when ``n >= m``, the greedy time (within a factor about sqrt 2) otherwise."""
    if n >= m:
        return b_exact_spine(n, m)
    return t_greedy_tooth_fast(n, m)


def sample_comb_exponent(k: int, u: int) -> ExponentSample:
    _check_ku(k, u)
    value = comb_value(2 ** u, 2 ** (k - u))
    return ExponentSample(k, u, math.log2(value) / k, f(u / k))


def _product_log2(k: int, u: int, constant: float) -> float:
    a, b = max(u, k - u), min(u, k - u)  # long side 2^a, short side 2^b
    if 2 * b <= a:  # short side at most sqrt(long side)
        return a / 2
    # leading term (constant * mn)^(1/3), with lower-order terms dropped
    return (math.log2(constant) + k) / 3


def grid_exponent(k: int, u: int) -> float:
    """``log2 b(P_X [] P_Y) / k`` from the Cartesian grid leading term."""
    _check_ku(k, u)
    return _product_log2(k, u, 1.5) / k


def strong_exponent(k: int, u: int) -> float:
    """``log2 b(P_X [x] P_Y) / k`` from the strong-product leading term."""
    _check_ku(k, u)
    return _product_log2(k, u, 0.75) / k


def min_orientation_exponent(k: int, u: int) -> float:
    _check_ku(k, u)
    x, y = 2 ** u, 2 ** (k - u)
    return math.log2(min(comb_value(x, y), comb_value(y, x))) / k


@dataclass(frozen=True)
class LimitSummary:
    max_dev: float
    mean_dev: float
    samples: tuple[ExponentSample, ...]


def empirical_limit(k: int, trials: int, seed: int) -> LimitSummary:
    """Draw ``u`` uniformly from ``{0..k}`` and compare the comb exponent with ``f(u/k)``."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    us = rng.integers(0, k + 1, size=trials)
    cache: dict[int, ExponentSample] = {}
    samples = []
    for u in us.tolist():
        if u not in cache:
            cache[u] = sample_comb_exponent(k, u)
        samples.append(cache[u])
    devs = [s.abs_dev for s in samples]
    return LimitSummary(max(devs), sum(devs) / len(devs), tuple(samples))


def samples_csv(samples) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for s in samples:
        w.writerow(s.row())
    return buf.getvalue()


def path_exponent(k: int) -> float:
    """``log2 ceil(sqrt(2^k)) / k``, the single-tooth baseline."""
    _check_ku(k, 0)
    return math.log2(ceil_sqrt(2 ** k)) / k
