"""Checking burning sequences.

A sequence of centers ``v_1..v_j`` (``j <= k``) at horizon ``k`` lights fire
``i`` in round ``i``; by round ``k`` that fire has spread to ``B(v_i, k - i)``.
:func:`verify_cover` checks the covering form.  :func:`simulate_strict` runs
the round-by-round process and also reports whether every fire was lit on a
vertex that was still unburned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .comb import CombGraph, GeneralGraph, Graph


@dataclass(frozen=True)
class BurningSequence:
    k: int
    centers: tuple

    def __init__(self, k: int, centers: Sequence):
        if k < 1:
            raise ValueError("horizon must be positive")
        centers = tuple(tuple(c) if isinstance(c, (list, tuple)) else c for c in centers)
        if len(centers) > k:
            raise ValueError(f"{len(centers)} centers exceed horizon {k}")
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "centers", centers)

    def radius(self, i: int) -> int:
        """Radius at the horizon of the fire lit in round ``i`` (1-based)."""
        return self.k - i

    def to_json(self) -> dict[str, Any]:
        return {"k": self.k, "centers": [list(c) if isinstance(c, tuple) else c for c in self.centers]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "BurningSequence":
        try:
            k = int(data["k"])
            raw = data["centers"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed sequence: {exc}") from None
        return cls(k, [tuple(c) if isinstance(c, list) else c for c in raw])

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class BurnReport:
    covered: bool
    burn_time: tuple  # per vertex id, None when not burned by the horizon
    uncovered: tuple
    burned_by: tuple  # 1-based index of the fire reaching the vertex first, ties to the earlier fire
    strict: bool | None = None  # only set by simulate_strict


def _vertex_ids(g: Graph, seq: BurningSequence) -> list[int]:
    if isinstance(g, CombGraph):
        return [g.vid(c) for c in seq.centers]
    for c in seq.centers:
        if not isinstance(c, int) or c not in g:
            raise ValueError(f"{c!r} is not a vertex of this graph")
    return list(seq.centers)


def _arrival(g: Graph, seq: BurningSequence) -> tuple[np.ndarray, np.ndarray]:
    """Earliest time each vertex is reached by some fire, and which fire."""
    ids = _vertex_ids(g, seq)
    nv = g.num_vertices
    never = seq.k + len(ids) + 1
    best = np.full(nv, never, dtype=np.int64)
    who = np.zeros(nv, dtype=np.int64)
    if isinstance(g, CombGraph):
        tooth = np.repeat(np.arange(1, g.n + 1), g.m)
        height = np.tile(np.arange(1, g.m + 1), g.n)
    for i, c in enumerate(ids, start=1):
        if isinstance(g, CombGraph):
            t, h = g.coords(c)
            d = np.where(tooth == t, np.abs(height - h), (height - 1) + (h - 1) + np.abs(tooth - t))
        else:
            d = np.array([never if x is None else x for x in g.bfs(c, limit=seq.k)], dtype=np.int64)
        arrive = d + i
        better = arrive < best  # strict: earlier fires keep ties
        best[better] = arrive[better]
        who[better] = i
    return best, who


def _report(g: Graph, seq: BurningSequence, strict: bool | None) -> BurnReport:
    best, who = _arrival(g, seq)
    within = best <= seq.k
    burn_time = tuple(int(t) if ok else None for t, ok in zip(best, within))
    if isinstance(g, CombGraph):
        uncovered = tuple(g.coords(int(i)) for i in np.flatnonzero(~within))
    else:
        uncovered = tuple(int(i) for i in np.flatnonzero(~within))
    burned_by = tuple(int(w) if ok else None for w, ok in zip(who, within))
    return BurnReport(not uncovered, burn_time, uncovered, burned_by, strict)


def verify_cover(g: Graph, seq: BurningSequence) -> BurnReport:
    return _report(g, seq, None)


def simulate_strict(g: Graph, seq: BurningSequence) -> BurnReport:
    """Round-by-round process; ``strict`` is False if a fire was lit on a burned vertex.

    In each round the existing fires spread first, then the new fire is lit.
    A fire aimed at an already burned vertex is lost, so the reported burn
    times are those of the process actually run.
    """
    ids = _vertex_ids(g, seq)
    nv = g.num_vertices
    time: list[int | None] = [None] * nv
    owner: list[int | None] = [None] * nv
    strict_ok = True
    frontier: list[int] = []
    for rnd in range(1, seq.k + 1):
        new_frontier = []
        # spread in fire order so simultaneous arrivals go to the earlier fire
        for u in sorted(frontier, key=lambda x: owner[x]):
            for w in _neighbors(g, u):
                if time[w] is None:
                    time[w] = rnd
                    owner[w] = owner[u]
                    new_frontier.append(w)
        if rnd <= len(ids):
            c = ids[rnd - 1]
            if time[c] is not None:
                strict_ok = False
            else:
                time[c] = rnd
                owner[c] = rnd
                new_frontier.append(c)
        frontier = new_frontier
    if isinstance(g, CombGraph):
        uncovered = tuple(g.coords(i) for i in range(nv) if time[i] is None)
    else:
        uncovered = tuple(i for i in range(nv) if time[i] is None)
    return BurnReport(not uncovered, tuple(time), uncovered, tuple(owner), strict_ok)


def _neighbors(g: Graph, u: int):
    if isinstance(g, GeneralGraph):
        return g.adj[u]
    t, h = g.coords(u)
    out = []
    if h > 1:
        out.append(u - 1)
    if h < g.m:
        out.append(u + 1)
    if h == 1:
        if t > 1:
            out.append(u - g.m)
        if t < g.n:
            out.append(u + g.m)
    return out
