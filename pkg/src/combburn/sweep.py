"""Vectorized greedy-time sweep over a rectangle of comb shapes.

Each row (fixed ``n``) is computed with numpy in one pass: the closed form
for ``m <= n`` and a lock-step binary search on ``n * M(T) >= n * m`` for
``m > n``.  Rows are independent, so they can be farmed out to a pool and
reassembled in row order.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

SWEEP_HEADER = ("n", "m", "t_greedy", "bnc", "gap")


def isqrt_array(x: np.ndarray) -> np.ndarray:
    """Elementwise floor square root of nonnegative int64 values, exact."""
    x = np.asarray(x, dtype=np.int64)
    s = np.floor(np.sqrt(x.astype(np.float64))).astype(np.int64)
    # float sqrt can be off by one either way near perfect squares
    s -= (s * s > x).astype(np.int64)
    s += ((s + 1) * (s + 1) <= x).astype(np.int64)
    return s


def ceil_sqrt_array(x: np.ndarray) -> np.ndarray:
    s = isqrt_array(x)
    return s + (s * s < x).astype(np.int64)


def _layers_numerator(T: np.ndarray, n: int) -> np.ndarray:
    if n == 1:
        return T * T
    r = (T - 1) % n
    return T * T + (n - 2) * T + 1 + r * (n - r) - n * (n - 1)


def sweep_row(n: int, m_max: int) -> tuple[np.ndarray, np.ndarray]:
    """``(t_greedy, bnc)`` for ``m = 1..m_max`` at fixed ``n``."""
    if n < 1 or m_max < 1:
        raise ValueError("sweep bounds must be positive")
    m = np.arange(1, m_max + 1, dtype=np.int64)
    bnc = ceil_sqrt_array(n * m)
    t = np.empty_like(m)

    spine = m <= n
    ms = m[spine]
    t[spine] = ms - 1 + ceil_sqrt_array(n - ms + 1)

    tooth = ~spine
    if tooth.any():
        mt = m[tooth]
        top = bnc[tooth]
        if n == 1:
            t[tooth] = top
        else:
            target = n * mt
            lo = np.maximum(n, top - (n + 1) // 2)
            hi = top.copy()
            while True:
                open_ = lo < hi
                if not open_.any():
                    break
                mid = (lo + hi) // 2
                ok = _layers_numerator(mid, n) >= target
                hi = np.where(open_ & ok, mid, hi)
                lo = np.where(open_ & ~ok, mid + 1, lo)
            t[tooth] = lo
    return t, bnc


@dataclass(frozen=True)
class GapSummary:
    max_gap: int
    count: int  # pairs attaining max_gap
    n_range: tuple[int, int]
    m_range: tuple[int, int]

    def describe(self, label: str) -> str:
        return (f"{label}: max gap {self.max_gap} over {self.count} pairs, "
                f"n in [{self.n_range[0]}, {self.n_range[1]}], m in [{self.m_range[0]}, {self.m_range[1]}]")


class _Tracker:
    def __init__(self):
        self.best = -1
        self.pairs: list[tuple[int, np.ndarray]] = []

    def update(self, n: int, ms: np.ndarray, gaps: np.ndarray) -> None:
        if gaps.size == 0:
            return
        top = int(gaps.max())
        if top < self.best:
            return
        if top > self.best:
            self.best, self.pairs = top, []
        self.pairs.append((n, ms[gaps == top]))

    def summary(self) -> GapSummary:
        ns = [n for n, ms in self.pairs for _ in ms]
        ms = np.concatenate([ms for _, ms in self.pairs])
        return GapSummary(self.best, len(ns), (min(ns), max(ns)), (int(ms.min()), int(ms.max())))


@dataclass(frozen=True)
class SweepResult:
    tooth_side: GapSummary  # n <= m
    spine_side: GapSummary  # n >= m


def _rows(n_max: int, m_max: int, threads: int):
    if n_max < 1 or m_max < 1:
        raise ValueError("sweep bounds must be positive")
    ns = range(1, n_max + 1)
    if threads <= 1:
        for n in ns:
            yield n, sweep_row(n, m_max)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        # map keeps row order whatever the scheduling
        yield from zip(ns, pool.map(lambda n: sweep_row(n, m_max), ns))


def sweep(n_max: int, m_max: int, threads: int = 1, out=None) -> SweepResult:
    """Run the sweep; write CSV rows to the text stream ``out`` when given."""
    m = np.arange(1, m_max + 1, dtype=np.int64)
    tooth, spine = _Tracker(), _Tracker()
    writer = None
    if out is not None:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SWEEP_HEADER)
    for n, (t, bnc) in _rows(n_max, m_max, threads):
        gap = bnc - t
        tooth.update(n, m[m >= n], gap[m >= n])
        spine.update(n, m[m <= n], gap[m <= n])
        if writer is not None:
            block = np.column_stack([np.full_like(m, n), m, t, bnc, gap])
            buf = io.StringIO()
            np.savetxt(buf, block, fmt="%d", delimiter=",")
            out.write(buf.getvalue())
    return SweepResult(tooth.summary(), spine.summary())
