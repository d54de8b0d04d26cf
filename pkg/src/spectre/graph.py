"""Weighted undirected multigraphs with self-loops, matrix views and edge-list I/O.

A self-loop of weight ``w`` at ``v`` adds ``w`` to the adjacency diagonal and
``w`` to the degree of ``v``, so adjacency row sums always equal degrees.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "DegreeProfile",
    "GraphError",
    "new_graph",
    "from_adjacency",
    "adjacency_matrix",
    "laplacian_matrix",
    "normalized_laplacian",
    "cartesian_product",
    "degree_profile",
    "regularize_with_loops",
    "read_edgelist",
    "write_edgelist",
    "canonical",
    "components",
    "two_coloring",
]

Edge = tuple[int, int, float]


class GraphError(ValueError):
    """Raised for malformed graphs, bad edge-list text and violated preconditions."""


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on vertices ``0..n-1``.

    ``edges`` keeps insertion order; ``(u, u, w)`` is a loop. Parallel edges
    are allowed and accumulate in the adjacency matrix.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        for u, v, w in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if not math.isfinite(w):
                raise GraphError(f"edge ({u}, {v}) has non-finite weight {w}")

    @property
    def m(self) -> int:
        """Number of listed edges (parallel edges and loops each count once)."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v, w in self.edges:
            if u == v:
                a[u, u] += w
            else:
                a[u, v] += w
                a[v, u] += w
        a.flags.writeable = False
        return a

    @cached_property
    def degrees(self) -> np.ndarray:
        d = self.adjacency.sum(axis=1)
        d.flags.writeable = False
        return d

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v, _ in self.edges)

    def neighbors(self, v: int) -> list[int]:
        """Distinct non-loop neighbours of ``v`` in ascending order."""
        row = self.adjacency[v]
        return [int(u) for u in np.flatnonzero(row) if u != v]

    def total_weight(self) -> float:
        """Sum of edge weights, loops included once."""
        return float(sum(w for _, _, w in self.edges))


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[float, ...]
    min: float
    max: float
    is_regular: bool
    regularity: float | None


def new_graph(n: int, edges: Iterable[Sequence[float]]) -> Graph:
    """Build a graph from ``(u, v)`` or ``(u, v, w)`` tuples; weights default to 1."""
    out: list[Edge] = []
    for e in edges:
        if len(e) == 2:
            u, v, w = e[0], e[1], 1.0
        elif len(e) == 3:
            u, v, w = e
        else:
            raise GraphError(f"edge must have 2 or 3 fields, got {e!r}")
        if int(u) != u or int(v) != v:
            raise GraphError(f"endpoints must be integers, got {e!r}")
        out.append((int(u), int(v), float(w)))
    return Graph(int(n), tuple(out))


def from_adjacency(a: np.ndarray) -> Graph:
    """Graph whose adjacency matrix is ``a`` (one edge per nonzero upper entry)."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GraphError("adjacency must be square")
    if not np.array_equal(a, a.T):
        raise GraphError("adjacency must be symmetric")
    iu, ju = np.nonzero(np.triu(a))
    return Graph(a.shape[0], tuple((int(i), int(j), float(a[i, j])) for i, j in zip(iu, ju)))


def adjacency_matrix(g: Graph) -> np.ndarray:
    return g.adjacency.copy()


def laplacian_matrix(g: Graph) -> np.ndarray:
    """``L = D - A``; loops cancel because they enter ``D`` and ``A`` equally."""
    return np.diag(g.degrees) - g.adjacency


def normalized_laplacian(g: Graph) -> np.ndarray:
    deg = g.degrees
    if np.any(deg <= 0):
        bad = int(np.flatnonzero(deg <= 0)[0])
        raise GraphError(f"normalized Laplacian needs positive degrees; vertex {bad} has {deg[bad]}")
    s = 1.0 / np.sqrt(deg)
    nl = laplacian_matrix(g) * s[:, None] * s[None, :]
    return (nl + nl.T) / 2


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``G □ H`` with vertex ``(u, u')`` at index ``u * |H| + u'``."""
    if g.has_loops or h.has_loops:
        raise GraphError("Cartesian product is only defined here for loop-free factors")
    nh = h.n
    edges: list[Edge] = []
    for u in range(g.n):
        for a, b, w in h.edges:
            edges.append((u * nh + a, u * nh + b, w))
    for a, b, w in g.edges:
        for x in range(nh):
            edges.append((a * nh + x, b * nh + x, w))
    return Graph(g.n * nh, tuple(edges))


def degree_profile(g: Graph) -> DegreeProfile:
    deg = tuple(float(x) for x in g.degrees)
    if not deg:
        return DegreeProfile((), 0.0, 0.0, True, None)
    lo, hi = min(deg), max(deg)
    regular = lo == hi
    return DegreeProfile(deg, lo, hi, regular, hi if regular else None)


def regularize_with_loops(g: Graph) -> Graph:
    """Pad every vertex below the maximum degree with a loop of the missing weight."""
    deg = g.degrees
    if g.n == 0:
        return g
    top = deg.max()
    loops = [(v, v, float(top - deg[v])) for v in range(g.n) if deg[v] < top]
    if not loops:
        return g
    return Graph(g.n, g.edges + tuple(loops))


def components(g: Graph) -> list[int]:
    """Component label per vertex (labels in order of first appearance)."""
    label = [-1] * g.n
    adj = [g.neighbors(v) for v in range(g.n)]
    current = 0
    for start in range(g.n):
        if label[start] >= 0:
            continue
        label[start] = current
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if label[u] < 0:
                    label[u] = current
                    queue.append(u)
        current += 1
    return label


def two_coloring(g: Graph) -> list[int] | None:
    """BFS 2-colouring ignoring loops, or None when an odd cycle exists."""
    color = [-1] * g.n
    adj = [g.neighbors(v) for v in range(g.n)]
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def canonical(g: Graph) -> Graph:
    """Same graph with each edge written ``u <= v`` and edges sorted."""
    return Graph(g.n, tuple(sorted((min(u, v), max(u, v), w) for u, v, w in g.edges)))


def _fmt_weight(w: float) -> str:
    return format(w, ".17g")


def write_edgelist(g: Graph) -> str:
    """Canonical edge-list text: header ``n m`` then ``u v w`` lines."""
    c = canonical(g)
    lines = [f"{c.n} {c.m}"]
    lines += [f"{u} {v} {_fmt_weight(w)}" for u, v, w in c.edges]
    return "\n".join(lines) + "\n"


def read_edgelist(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if header is None:
                if len(parts) != 2:
                    raise GraphError(f"line {lineno}: header must be 'n m'")
                header = (int(parts[0]), int(parts[1]))
                continue
            if len(parts) == 2:
                edges.append((int(parts[0]), int(parts[1]), 1.0))
            elif len(parts) == 3:
                edges.append((int(parts[0]), int(parts[1]), float(parts[2])))
            else:
                raise GraphError(f"line {lineno}: expected 'u v [w]', got {raw!r}")
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"line {lineno}: cannot parse {raw!r}") from exc
    if header is None:
        raise GraphError("missing 'n m' header")
    n, m = header
    if m != len(edges):
        raise GraphError(f"header declares {m} edges but {len(edges)} edge lines follow")
    return Graph(n, tuple(edges))
