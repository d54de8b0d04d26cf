"""Exact combinatorial invariants for small graphs.

Brute-force oracles (bisection by enumeration, vertex isoperimetric number
by subset scan) plus BFS facts. Loops never count toward cuts, boundaries
or distances.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, GraphError, components, two_coloring
from .spectral import fiedler_vector

__all__ = [
    "BisectionResult",
    "IsoResult",
    "BISECTION_MAX_N",
    "ISO_MAX_N",
    "diameter",
    "bisection_exact",
    "bisection_fiedler",
    "cut_weight",
    "vertex_iso_number",
    "is_connected",
    "is_bipartite",
]

BISECTION_MAX_N = 24
ISO_MAX_N = 16


@dataclass(frozen=True)
class BisectionResult:
    cut: float
    side: tuple[int, ...]
    method: str


@dataclass(frozen=True)
class IsoResult:
    ratio: Fraction
    witness: tuple[int, ...]

    @property
    def value(self) -> float:
        return float(self.ratio)


def _loopless(g: Graph) -> np.ndarray:
    a = g.adjacency.copy()
    np.fill_diagonal(a, 0.0)
    return a


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or max(components(g)) == 0


def is_bipartite(g: Graph, *, strict: bool = False) -> bool:
    """2-colourability ignoring loops; with ``strict`` any nonzero loop also disqualifies."""
    if strict and np.any(np.diag(g.adjacency) != 0):
        return False
    return two_coloring(g) is not None


def diameter(g: Graph) -> float:
    """Hop diameter by BFS from every vertex; ``math.inf`` when disconnected."""
    if g.n == 0:
        raise GraphError("diameter of the empty graph is undefined")
    adj = [g.neighbors(v) for v in range(g.n)]
    best = 0
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        if min(dist) < 0:
            return math.inf
        best = max(best, max(dist))
    return best


def cut_weight(g: Graph, side) -> float:
    mask = np.zeros(g.n, dtype=bool)
    mask[list(side)] = True
    return float(_loopless(g)[np.ix_(mask, ~mask)].sum())


def _min_cut_of_size(a: np.ndarray, size: int) -> tuple[float, tuple[int, ...]] | None:
    """Smallest cut among sets of ``size`` vertices containing vertex 0 (lexicographic first)."""
    n = a.shape[0]
    if size < 1 or size > n:
        return None
    deg = a.sum(axis=1)
    best: tuple[float, tuple[int, ...]] | None = None
    others = range(1, n)
    # cut(S) = sum_{v in S} deg(v) - 2 * w(S); evaluate in vectorised chunks
    combos = itertools.combinations(others, size - 1)
    chunk = 20_000
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            break
        idx = np.zeros((len(block), size), dtype=np.intp)
        if size > 1:
            idx[:, 1:] = np.array(block, dtype=np.intp)
        inner = a[idx[:, :, None], idx[:, None, :]].sum(axis=(1, 2))
        cuts = deg[idx].sum(axis=1) - inner
        j = int(np.argmin(cuts))
        if best is None or cuts[j] < best[0]:
            best = (float(cuts[j]), tuple(int(x) for x in idx[j]))
    return best


def bisection_exact(g: Graph) -> BisectionResult:
    """Minimum balanced cut by enumerating every side containing vertex 0.

    For odd ``n`` the side holding vertex 0 may have either ``ceil(n/2)`` or
    ``floor(n/2)`` vertices; the larger size is scanned first and ties keep
    the first witness found.
    """
    n = g.n
    if n < 2:
        raise GraphError("bisection needs at least two vertices")
    if n > BISECTION_MAX_N:
        raise GraphError(f"exact bisection limited to n <= {BISECTION_MAX_N}, got {n}")
    a = _loopless(g)
    sizes = [(n + 1) // 2] if n % 2 == 0 else [(n + 1) // 2, n // 2]
    best = None
    for s in sizes:
        r = _min_cut_of_size(a, s)
        if r is not None and (best is None or r[0] < best[0]):
            best = r
    assert best is not None
    return BisectionResult(best[0], best[1], "exact")


def bisection_fiedler(g: Graph) -> BisectionResult:
    """Split at the median of the Fiedler vector (ties broken by vertex index)."""
    v = fiedler_vector(g)
    order = sorted(range(g.n), key=lambda i: (v[i], i))
    side = tuple(sorted(order[: (g.n + 1) // 2]))
    return BisectionResult(cut_weight(g, side), side, "fiedler-heuristic")


def vertex_iso_number(g: Graph) -> IsoResult:
    """``min |dX| / |X|`` over nonempty ``X`` with ``2|X| <= n``; ``dX`` = outside neighbours.

    The witness is the lexicographically least sorted vertex tuple among all
    minimisers.
    """
    n = g.n
    if n < 2:
        raise GraphError("isoperimetric number needs at least two vertices")
    if n > ISO_MAX_N:
        raise GraphError(f"isoperimetric scan limited to n <= {ISO_MAX_N}, got {n}")
    nbr = [sum(1 << u for u in g.neighbors(v)) for v in range(n)]
    # neighbourhood union for every mask via lowest-bit recurrence
    size = 1 << n
    union = np.zeros(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int64)
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        union[mask] = union[rest] | nbr[v]
        pop[mask] = pop[rest] + 1
    masks = np.arange(size, dtype=np.int64)
    boundary = union & ~masks
    bcount = np.array([int(b).bit_count() for b in boundary])
    best: Fraction | None = None
    witnesses: list[int] = []
    for mask in range(1, size):
        p = int(pop[mask])
        if 2 * p > n:
            continue
        r = Fraction(int(bcount[mask]), p)
        if best is None or r < best:
            best, witnesses = r, [mask]
        elif r == best:
            witnesses.append(mask)
    assert best is not None
    witness = min(tuple(v for v in range(n) if m >> v & 1) for m in witnesses)
    return IsoResult(best, witness)
