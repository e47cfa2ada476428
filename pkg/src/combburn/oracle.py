"""Exact burning number and uniform-radius cover numbers by exhaustive search.

Vertex sets are Python ints used as bitmasks.  Both searches branch on one
uncovered vertex ``u`` (the one with the fewest ways to be covered) over all
(fire, center) pairs that reach it, prune with a capacity bound, skip
dominated centers, and remember failed states.  Sizes up to about 100
vertices are the intended range.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .comb import GeneralGraph


class BudgetExhausted(RuntimeError):
    """The search hit its node cap before reaching an answer."""


@dataclass(frozen=True)
class OracleConfig:
    lower: int = 1
    upper: int | None = None
    node_budget: int = 50_000_000
    symmetry: bool = True

    def __post_init__(self):
        if self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if self.upper is not None and self.lower > self.upper:
            raise ValueError("lower hint exceeds upper hint")


@dataclass(frozen=True)
class OracleResult:
    k: int
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {"k": self.k, "witness": list(self.witness)}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


BUDGET_JSON = json.dumps({"status": "budget_exhausted"})


class _Balls:
    def __init__(self, g: GeneralGraph, max_radius: int):
        if g.num_vertices == 0:
            raise ValueError("graph is empty")
        self.n = g.num_vertices
        dist = g.distance_matrix()
        self.full = (1 << self.n) - 1
        self.max_radius = max_radius
        # balls[r][v] as bitmask
        self.balls = []
        for r in range(max_radius + 1):
            row = []
            for v in range(self.n):
                mask = 0
                for u, d in enumerate(dist[v]):
                    if d <= r:
                        mask |= 1 << u
                row.append(mask)
            self.balls.append(row)
        self.size = [[b.bit_count() for b in row] for row in self.balls]
        self.max_size = [max(row) for row in self.size]
        self.automorphisms = None

    def radius_cap(self, r: int) -> int:
        return min(r, self.max_radius)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _undominated(balls: list[int], candidates: list[int], uncovered: int) -> list[int]:
    """Candidates whose new coverage is not contained in another's, best first."""
    cov = {}
    for c in candidates:
        cov.setdefault(balls[c] & uncovered, c)
    items = sorted(cov.items(), key=lambda kv: -kv[0].bit_count())
    keep: list[tuple[int, int]] = []
    for mask, c in items:
        if any(mask | other == other for other, _ in keep):
            continue
        keep.append((mask, c))
    return [c for _, c in keep]


class _Search:
    def __init__(self, balls: _Balls, budget: int):
        self.b = balls
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(f"node budget {self.budget} exhausted")

    # -------------------------------------------------------------- burning
    def burn(self, k: int) -> list[int | None] | None:
        """Centers for fires 1..k covering everything, or None."""
        radii = tuple(self.b.radius_cap(k - i) for i in range(1, k + 1))
        self.failed: set[tuple[int, int]] = set()
        assign: list[int | None] = [None] * k
        self.root = True
        if self._burn(self.b.full, (1 << k) - 1, radii, assign):
            return assign
        return None

    def _burn(self, uncovered: int, free: int, radii, assign) -> bool:
        if uncovered == 0:
            return True
        if free == 0:
            return False
        key = (uncovered, free)
        if key in self.failed:
            return False
        self.tick()
        b = self.b
        need = uncovered.bit_count()
        free_idx = list(_bits(free))
        cap = 0
        for i in free_idx:
            cap += b.max_size[radii[i]]
        if cap < need:
            self.failed.add(key)
            return False
        cap = 0
        for i in free_idx:
            row = b.balls[radii[i]]
            cap += max((row[v] & uncovered).bit_count() for v in range(b.n))
            # all free fires together cannot cover what is left
        if cap < need:
            self.failed.add(key)
            return False
        # vertex with fewest covering options
        best_u, best_cost = -1, None
        for u in _bits(uncovered):
            cost = 0
            for i in free_idx:
                cost += b.size[radii[i]][u]
            if best_cost is None or cost < best_cost:
                best_u, best_cost = u, cost
        u = best_u
        at_root, self.root = self.root, False
        for i in free_idx:  # largest radius first
            r = radii[i]
            row = b.balls[r]
            cands = _undominated(row, list(_bits(row[u])), uncovered)
            if at_root and b.automorphisms:
                cands = _orbit_representatives(cands, u, b.automorphisms)
            for c in cands:
                assign[i] = c
                if self._burn(uncovered & ~row[c], free & ~(1 << i), radii, assign):
                    return True
                assign[i] = None
        self.failed.add(key)
        return False

    # -------------------------------------------------------------- covers
    def cover(self, radius: int, limit: int) -> list[int] | None:
        """At most ``limit`` balls of the given radius covering everything."""
        self.failed_cover: dict[int, int] = {}
        chosen: list[int] = []
        if self._cover(self.b.full, self.b.radius_cap(radius), limit, chosen):
            return chosen
        return None

    def _cover(self, uncovered: int, r: int, limit: int, chosen: list[int]) -> bool:
        if uncovered == 0:
            return True
        if limit == 0:
            return False
        if self.failed_cover.get(uncovered, -1) >= limit:
            return False
        self.tick()
        b = self.b
        row = b.balls[r]
        need = uncovered.bit_count()
        best = max((row[v] & uncovered).bit_count() for v in range(b.n))
        if best * limit < need:
            self.failed_cover[uncovered] = max(limit, self.failed_cover.get(uncovered, -1))
            return False
        u = min(_bits(uncovered), key=lambda x: b.size[r][x])
        for c in _undominated(row, list(_bits(row[u])), uncovered):
            chosen.append(c)
            if self._cover(uncovered & ~row[c], r, limit - 1, chosen):
                return True
            chosen.pop()
        self.failed_cover[uncovered] = max(limit, self.failed_cover.get(uncovered, -1))
        return False


def _automorphisms(g: GeneralGraph, cap: int = 2000):
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.num_vertices))
    nxg.add_edges_from(g.edges())
    out = []
    for iso in GraphMatcher(nxg, nxg).isomorphisms_iter():
        out.append(iso)
        if len(out) >= cap:
            return None  # too many to be worth it; search without them
    return out if len(out) > 1 else None


def _orbit_representatives(cands: list[int], u: int, autos) -> list[int]:
    """Keep one candidate per orbit of the automorphisms fixing ``u``."""
    stab = [a for a in autos if a[u] == u]
    seen: set[int] = set()
    reps = []
    for c in cands:
        if c in seen:
            continue
        reps.append(c)
        seen.update(a[c] for a in stab)
    return reps


def _lower_from_capacity(b: _Balls) -> int:
    """Smallest k whose fires could cover |V| vertices if balls never overlapped."""
    k = 1
    while sum(b.max_size[b.radius_cap(r)] for r in range(k)) < b.n:
        k += 1
    return k


def _prepare(g: GeneralGraph, cfg: OracleConfig) -> _Balls:
    if g.num_vertices == 0:
        raise ValueError("graph is empty")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    b = _Balls(g, g.num_vertices)
    if cfg.symmetry:
        b.automorphisms = _automorphisms(g)
    return b


def _fill(assign: list[int | None]) -> tuple[int, ...]:
    # unused fire slots get an arbitrary center; the cover does not need them
    return tuple(0 if c is None else c for c in assign)


def burn_exact(g: GeneralGraph, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    b = _prepare(g, cfg)
    k = max(cfg.lower, _lower_from_capacity(b))
    search = _Search(b, cfg.node_budget)
    while True:
        assign = search.burn(k)
        if assign is not None:
            return OracleResult(k, _fill(assign))
        k += 1


def burning_number_exact(g: GeneralGraph, cfg: OracleConfig = OracleConfig()) -> int:
    return burn_exact(g, cfg).k


def disprove_k(g: GeneralGraph, k: int, cfg: OracleConfig = OracleConfig()) -> bool:
    """True iff no covering sequence with ``k`` fires exists."""
    if k < 1:
        return True
    b = _prepare(g, cfg)
    return _Search(b, cfg.node_budget).burn(k) is None


def burning_witness(g: GeneralGraph, k: int, cfg: OracleConfig = OracleConfig()) -> tuple[int, ...] | None:
    b = _prepare(g, cfg)
    assign = _Search(b, cfg.node_budget).burn(k)
    return None if assign is None else _fill(assign)


def min_ball_cover(g: GeneralGraph, radius: int, cfg: OracleConfig = OracleConfig()) -> int:
    """Fewest balls of the given radius covering ``g``."""
    b = _prepare(g, cfg)
    r = b.radius_cap(radius)
    count = -(-b.n // b.max_size[r])
    search = _Search(b, cfg.node_budget)
    while search.cover(r, count) is None:
        count += 1
    return count


def hat_b_exact(g: GeneralGraph, cfg: OracleConfig = OracleConfig()) -> int:
    """Least ``r`` such that ``r`` balls of radius ``r - 1`` cover ``g``."""
    b = _prepare(g, cfg)
    search = _Search(b, cfg.node_budget)
    r = max(1, cfg.lower)
    while search.cover(b.radius_cap(r - 1), r) is None:
        r += 1
    return r
