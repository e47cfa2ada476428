"""Rewriting any covering sequence of a spine-dominant comb into the greedy one.

Fires are handled as a list of ``(tooth, height)`` centers; the fire in
position ``p`` (1-based) has radius ``T - p``.  Deleting a fire therefore
promotes every later fire by one, which is how redundant fires are dropped.

The rewrite runs in labeled stages and records a snapshot whenever a stage
changes something.  Every snapshot is a covering sequence.

``reduce``      drop a fire whose ball is already covered by the other fires
``spine_lift``  move a fire of radius ``>= m - 1`` to the spine of its tooth
``boundary``    slide a spine fire inward so its fully burned block stays on the comb
``spread``      pack the spine fires into disjoint blocks from the left, largest
                radius first, and re-place the remaining fires on leaves
``reassign``    restore the full set of greedy spine slots and re-place leaf fires
``shift``       move the leaf fires to the positions the path-forest greedy uses
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

import numpy as np

from .burn import BurningSequence, verify_cover
from .comb import CombGraph, CombVertex
from .greedy import _forest_run, greedy_comb, t_greedy_spine_closed

STEP_LABELS = ("reduce", "spine_lift", "boundary", "spread", "reassign", "shift")


class NormalizationError(RuntimeError):
    """A stage could not keep the sequence covering."""


@dataclass
class NormalizationTrace:
    n: int
    m: int
    initial: BurningSequence
    steps: list[tuple[str, BurningSequence]] = field(default_factory=list)

    @property
    def final(self) -> BurningSequence:
        return self.steps[-1][1] if self.steps else self.initial

    def labels(self) -> list[str]:
        return [label for label, _ in self.steps]

    def to_json(self) -> list[dict]:
        out = [{"step": "input", "sequence": self.initial.to_json()}]
        out += [{"step": label, "sequence": seq.to_json()} for label, seq in self.steps]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# ------------------------------------------------------------------ geometry

def _coverage(n: int, m: int, T: int, fires: list[CombVertex]) -> np.ndarray:
    """Boolean ``(n, m)`` array, True where some fire reaches by round ``T``."""
    tooth = np.arange(1, n + 1)[:, None]
    height = np.arange(1, m + 1)[None, :]
    cov = np.zeros((n, m), dtype=bool)
    for p, (t, h) in enumerate(fires, start=1):
        r = T - p
        d = np.where(tooth == t, np.abs(height - h), (height - 1) + (h - 1) + np.abs(tooth - t))
        cov |= d <= r
    return cov


def _ball(n: int, m: int, r: int, center: CombVertex) -> np.ndarray:
    return _coverage(n, m, r + 1, [center])


def _covers(n: int, m: int, T: int, fires: list[CombVertex]) -> bool:
    return bool(_coverage(n, m, T, fires).all())


def _spine_prefix(n: int, m: int, T: int, spine: list[int]) -> list[int]:
    """Burned prefix height per tooth (index 0 is tooth 1) from spine fires in slots 1..len."""
    burned = [0] * n
    for p, c in enumerate(spine, start=1):
        r = T - p
        for t in range(max(1, c - r), min(n, c + r) + 1):
            burned[t - 1] = max(burned[t - 1], min(m, r - abs(t - c) + 1))
    return burned


# -------------------------------------------------------------------- stages

def _reduce(n, m, T, fires, record) -> list[CombVertex]:
    changed = True
    while changed:
        changed = False
        for p in range(len(fires)):
            others = fires[:p] + fires[p + 1:]
            # the fire's own ball must already be covered by the rest at their old radii
            rest = np.zeros((n, m), dtype=bool)
            for q, c in enumerate(fires):
                if q != p:
                    rest |= _ball(n, m, T - (q + 1), c)
            if not (_ball(n, m, T - (p + 1), fires[p]) & ~rest).any():
                fires = others
                record("reduce", fires)
                changed = True
                break
    return fires


def _spine_lift(n, m, T, fires, record) -> list[CombVertex]:
    p = 0
    while p < len(fires):
        t, h = fires[p]
        if T - (p + 1) >= m - 1 and h != 1:
            fires = fires[:p] + [(t, 1)] + fires[p + 1:]
            record("spine_lift", fires)
            fires = _reduce(n, m, T, fires, record)
            p = 0
            continue
        p += 1
    return fires


def _spine_slots(m: int, T: int, count: int) -> int:
    return min(count, max(0, T - m + 1))


def _boundary(n, m, T, fires, record) -> list[CombVertex]:
    for p in range(_spine_slots(m, T, len(fires))):
        c = fires[p][0]
        w = (T - (p + 1)) - (m - 1)
        lo_over, hi_over = c - w < 1, c + w > n
        if lo_over and hi_over:
            target = min(n, 1 + w)  # burns every tooth; use the greedy opening spot
        elif lo_over:
            target = 1 + w
        elif hi_over:
            target = n - w
        else:
            continue
        if target != c:
            fires = fires[:p] + [(target, 1)] + fires[p + 1:]
            record("boundary", fires)
    return _reduce(n, m, T, fires, record)


def _packed_spine(n: int, m: int, T: int, count: int) -> list[int]:
    """Spine positions of ``count`` fires packed left in slot order, as the greedy does."""
    burned = [0] * (n + 1)
    out = []
    for p in range(1, count + 1):
        r = T - p
        leaf = next((t for t in range(1, n + 1) if burned[t] < m), None)
        c = n if leaf is None else min(n, leaf + max(0, r - (m - 1)))
        for t in range(max(1, c - r), min(n, c + r) + 1):
            burned[t] = max(burned[t], min(m, r - abs(t - c) + 1))
        out.append(c)
    return out


def _leaf_assign(n, m, T, spine: list[int], slots: int) -> list[CombVertex] | None:
    """Fires for slots after the spine ones, each on the leaf of the longest open segment.

    Ties go to the right-most tooth.  Returns None if the leaves run out of
    fires before every segment is gone.
    """
    burned = _spine_prefix(n, m, T, spine)
    left = [m - b for b in burned]
    fires = []
    for p in range(len(spine) + 1, len(spine) + slots + 1):
        if not any(left):
            break
        r = T - p
        best = max(range(n), key=lambda i: (left[i], i))
        fires.append((best + 1, m))
        left[best] = max(0, left[best] - (r + 1))
    return fires if not any(left) else None


def _spread(n, m, T, fires, record) -> list[CombVertex]:
    s = _spine_slots(m, T, len(fires))
    spine = _packed_spine(n, m, T, s)
    leaves = _leaf_assign(n, m, T, spine, len(fires) - s)
    if leaves is None:
        raise NormalizationError("packed spine fires leave segments the remaining fires cannot clear")
    new = [(c, 1) for c in spine] + leaves
    if new != fires:
        fires = new
        record("spread", fires)
    return fires


def _greedy_spine_count(n: int, m: int, T: int) -> int:
    """Spine fires the greedy places: all of its spine phase, plus the offset fire if needed."""
    if n == 1:
        return 0  # a single tooth is burned by the plain path greedy
    k = max(0, T - m)
    burned = _spine_prefix(n, m, T, _packed_spine(n, m, T, k))
    if all(b >= m for b in burned) or k >= T:
        return k
    return k + 1


def _reassign(n, m, T, fires, record) -> list[CombVertex]:
    s = _greedy_spine_count(n, m, T)
    spine = _packed_spine(n, m, T, s)
    leaves = _leaf_assign(n, m, T, spine, T - s)
    if leaves is None:
        raise NormalizationError("leaf reassignment failed")
    new = [(c, 1) for c in spine] + leaves
    if new != fires:
        fires = new
        record("reassign", fires)
    return fires


def _shift(n, m, T, fires, record) -> list[CombVertex]:
    s = _greedy_spine_count(n, m, T)
    spine = [c for c, _ in fires[:s]]
    burned = _spine_prefix(n, m, T, spine)
    teeth = [t for t in range(1, n + 1) if burned[t - 1] < m]
    new = [(c, 1) for c in spine]
    if teeth and s < T:
        ok, placed, _ = _forest_run(T - s, [m - burned[t - 1] for t in teeth])
        if not ok:
            raise NormalizationError("path-forest greedy failed on the leaf segments")
        new += [(teeth[seg], burned[teeth[seg] - 1] + 1 + depth) for seg, depth in placed]
    if new != fires:
        fires = new
        record("shift", fires)
    return fires


# ----------------------------------------------------------------------- api

def normalize(seq: BurningSequence, n: int, m: int) -> NormalizationTrace:
    """Rewrite a covering sequence of ``C(n, m)``, ``n >= m``, into the greedy sequence at the same horizon."""
    g = CombGraph(n, m)
    if n < m:
        raise ValueError(f"normalization needs n >= m, got n={n}, m={m}")
    if not verify_cover(g, seq).covered:
        raise ValueError("input sequence does not cover the comb")
    T = seq.k
    trace = NormalizationTrace(n, m, seq)
    target = greedy_comb(T, n, m, 1).sequence
    if seq == target:
        return trace

    def record(label: str, fires: list[CombVertex]) -> None:
        snap = BurningSequence(T, fires)
        if not _covers(n, m, T, fires):
            raise NormalizationError(f"stage {label!r} lost coverage: {snap.to_json()}")
        trace.steps.append((label, snap))

    fires = [g.check(c) for c in seq.centers]
    fires = _reduce(n, m, T, fires, record)
    fires = _spine_lift(n, m, T, fires, record)
    fires = _boundary(n, m, T, fires, record)
    fires = _spread(n, m, T, fires, record)
    fires = _reassign(n, m, T, fires, record)
    _shift(n, m, T, fires, record)
    return trace


def optimality_via_normalization(n: int, m: int, witness: BurningSequence | None = None) -> int:
    """``b(C(n, m))`` for ``n >= m``.

    With a covering ``witness`` at the optimal horizon, also checks that it
    normalizes to a greedy sequence of the same length, which is the lower
    bound half of the argument.
    """
    if n < m:
        raise ValueError(f"requires n >= m, got n={n}, m={m}")
    b = t_greedy_spine_closed(n, m)
    if witness is not None:
        if witness.k != b:
            raise ValueError(f"witness horizon {witness.k} differs from b = {b}")
        final = normalize(witness, n, m).final
        if final != greedy_comb(b, n, m, 1).sequence:
            raise AssertionError("witness did not normalize to the greedy sequence")
    return b


def random_covering_sequences(n: int, m: int, T: int, count: int, rng: random.Random,
                              walk: int = 25) -> list[BurningSequence]:
    """Covering sequences of ``C(n, m)`` at horizon ``T`` by a random walk from the greedy one.

    Each step moves one fire to a random vertex and is kept only if the
    result still covers.  Distinct sequences are preferred but not enforced.
    """
    start = greedy_comb(T, n, m, 1)
    if not start.success:
        raise ValueError(f"no greedy cover of C({n},{m}) at T={T}")
    cur = list(start.sequence.centers) + [(1, 1)] * (T - len(start.sequence.centers))
    out = []
    for _ in range(count):
        for _ in range(walk):
            p = rng.randrange(T)
            cand = cur[:p] + [(rng.randint(1, n), rng.randint(1, m))] + cur[p + 1:]
            if _covers(n, m, T, cand):
                cur = cand
        out.append(BurningSequence(T, cur))
    return out
