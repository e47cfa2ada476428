"""Comb graphs, small general graphs, and the product constructions that relate them.

A comb ``C(n, m)`` has ``n`` teeth of ``m`` vertices each.  Vertices are
addressed as ``(tooth, height)`` with ``1 <= tooth <= n`` and
``1 <= height <= m``; height 1 is the spine vertex and height ``m`` the leaf.
Combs are never materialized unless :meth:`CombGraph.to_general` is called.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Union

CombVertex = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when an edge-list file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class CombGraph:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"comb dimensions must be positive, got n={self.n}, m={self.m}")

    @property
    def num_vertices(self) -> int:
        return self.n * self.m

    @property
    def num_edges(self) -> int:
        return self.n * self.m - 1

    def __contains__(self, v) -> bool:
        try:
            t, h = v
        except (TypeError, ValueError):
            return False
        return 1 <= t <= self.n and 1 <= h <= self.m

    def check(self, v: CombVertex) -> CombVertex:
        if v not in self:
            raise ValueError(f"{v!r} is not a vertex of C({self.n},{self.m})")
        return (int(v[0]), int(v[1]))

    def vid(self, v: CombVertex) -> int:
        t, h = self.check(v)
        return (t - 1) * self.m + (h - 1)

    def coords(self, i: int) -> CombVertex:
        if not 0 <= i < self.num_vertices:
            raise ValueError(f"vertex id {i} out of range")
        return (i // self.m + 1, i % self.m + 1)

    def vertices(self) -> Iterator[CombVertex]:
        for t in range(1, self.n + 1):
            for h in range(1, self.m + 1):
                yield (t, h)

    def leaves(self) -> list[CombVertex]:
        return [(t, self.m) for t in range(1, self.n + 1)]

    def to_general(self) -> "GeneralGraph":
        n, m = self.n, self.m
        edges = []
        for t in range(n):
            base = t * m
            edges.extend((base + h, base + h + 1) for h in range(m - 1))
            if t + 1 < n:
                edges.append((base, base + m))
        return GeneralGraph.from_edges(n * m, edges)


def comb(n: int, m: int) -> CombGraph:
    return CombGraph(n, m)


@dataclass(frozen=True)
class GeneralGraph:
    """Undirected simple graph on vertices ``0..num_vertices-1``."""

    adj: tuple[tuple[int, ...], ...]
    _edges: tuple[tuple[int, int], ...] = field(default=(), repr=False, compare=False)

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]]) -> "GeneralGraph":
        if num_vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(num_vertices)]
        for u, v in edges:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        es = tuple((u, v) for u in range(num_vertices) for v in adj[u] if u < v)
        return cls(adj, es)

    @property
    def num_vertices(self) -> int:
        return len(self.adj)

    @property
    def num_edges(self) -> int:
        return len(self.edges())

    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges or not self.adj:
            return self._edges
        return tuple((u, v) for u in range(len(self.adj)) for v in self.adj[u] if u < v)

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < len(self.adj)

    def check(self, v: int) -> int:
        if v not in self:
            raise ValueError(f"{v!r} is not a vertex of this graph")
        return v

    def bfs(self, source: int, limit: int | None = None) -> list[int | None]:
        """Distances from ``source``; ``None`` for unreachable (or beyond ``limit``)."""
        self.check(source)
        dist: list[int | None] = [None] * len(self.adj)
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if limit is not None and du >= limit:
                continue
            for w in self.adj[u]:
                if dist[w] is None:
                    dist[w] = du + 1
                    queue.append(w)
        return dist

    def distance_matrix(self) -> list[list[int]]:
        rows = []
        for s in range(len(self.adj)):
            d = self.bfs(s)
            if any(x is None for x in d):
                raise ValueError("graph is not connected")
            rows.append(d)  # type: ignore[arg-type]
        return rows

    def is_connected(self) -> bool:
        if not self.adj:
            return True
        return all(d is not None for d in self.bfs(0))

    def eccentricity(self, v: int) -> int:
        d = self.bfs(v)
        if any(x is None for x in d):
            raise ValueError("graph is not connected")
        return max(d)  # type: ignore[type-var]


Graph = Union[CombGraph, GeneralGraph]


def distance(g: Graph, u, v) -> int:
    if isinstance(g, CombGraph):
        tu, hu = g.check(u)
        tv, hv = g.check(v)
        if tu == tv:
            return abs(hu - hv)
        return (hu - 1) + (hv - 1) + abs(tu - tv)
    d = g.bfs(g.check(u))[g.check(v)]
    if d is None:
        raise ValueError(f"{v} is unreachable from {u}")
    return d


def ball(g: Graph, v, r: int) -> set:
    """All vertices within distance ``r`` of ``v``."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    if isinstance(g, CombGraph):
        t, h = g.check(v)
        out = {(t, y) for y in range(max(1, h - r), min(g.m, h + r) + 1)}
        # budget left once the fire reaches the spine of its own tooth
        spine_budget = r - (h - 1)
        for t2 in range(max(1, t - spine_budget), min(g.n, t + spine_budget) + 1):
            if t2 == t:
                continue
            reach = spine_budget - abs(t2 - t)
            out.update((t2, y) for y in range(1, min(g.m, reach + 1) + 1))
        return out
    dist = g.bfs(g.check(v), limit=r)
    return {u for u, d in enumerate(dist) if d is not None and d <= r}


# ---------------------------------------------------------------- constructors

def path(n: int) -> GeneralGraph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return GeneralGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> GeneralGraph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return GeneralGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> GeneralGraph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return GeneralGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> GeneralGraph:
    """``K_{1,leaves}`` with the center at vertex 0."""
    if leaves < 0:
        raise ValueError("leaf count must be nonnegative")
    return GeneralGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@dataclass(frozen=True)
class RootedSpec:
    base: GeneralGraph
    attachment: GeneralGraph
    root: int

    def __post_init__(self):
        if self.base.num_vertices == 0 or self.attachment.num_vertices == 0:
            raise ValueError("base and attachment must be nonempty")
        if not 0 <= self.root < self.attachment.num_vertices:
            raise ValueError(f"root {self.root} is not a vertex of the attachment")


def rooted_product(spec: RootedSpec) -> GeneralGraph:
    """One copy of the attachment hung from every base vertex at its root.

    Vertex ``(b, a)`` (base vertex ``b``, attachment vertex ``a``) gets id
    ``b * |attachment| + a``; base vertex ``b`` is ``(b, root)``.
    """
    g, h, r = spec.base, spec.attachment, spec.root
    k = h.num_vertices
    edges = [(b * k + u, b * k + v) for b in range(g.num_vertices) for u, v in h.edges()]
    edges += [(u * k + r, v * k + r) for u, v in g.edges()]
    return GeneralGraph.from_edges(g.num_vertices * k, edges)


def cartesian_product(g: GeneralGraph, h: GeneralGraph) -> GeneralGraph:
    """Vertex ``(a, b)`` gets id ``a * |h| + b``."""
    k = h.num_vertices
    edges = [(a * k + u, a * k + v) for a in range(g.num_vertices) for u, v in h.edges()]
    edges += [(u * k + b, v * k + b) for u, v in g.edges() for b in range(k)]
    return GeneralGraph.from_edges(g.num_vertices * k, edges)


def cartesian_grid(n: int, m: int) -> GeneralGraph:
    if n < 1 or m < 1:
        raise ValueError("grid dimensions must be positive")
    return cartesian_product(path(n), path(m))


# ---------------------------------------------------------------- edge lists

def format_edgelist(g: GeneralGraph) -> str:
    lines = [f"p {g.num_vertices}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> GeneralGraph:
    count = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if count is None:
            if parts[0] != "p" or len(parts) != 2:
                raise GraphFormatError("expected header 'p <vertex_count>'", lineno)
            try:
                count = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[1]!r}", lineno) from None
            if count < 0:
                raise GraphFormatError("negative vertex count", lineno)
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise GraphFormatError("expected 'e <u> <v>'", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < count and 0 <= v < count):
            raise GraphFormatError(f"edge ({u}, {v}) out of range", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", lineno)
        edges.append((u, v))
    if count is None:
        raise GraphFormatError("empty file")
    return GeneralGraph.from_edges(count, edges)


def read_edgelist(path_: str | Path) -> GeneralGraph:
    return parse_edgelist(Path(path_).read_text())


def write_edgelist(g: GeneralGraph, path_: str | Path) -> None:
    with open(path_, "w", newline="\n") as fh:
        fh.write(format_edgelist(g))
