"""Orbit quotients of graphs under automorphism groups.

Collapsing each orbit of a group of automorphisms to one vertex gives a
weighted directed graph ``B`` whose eigenvalues all occur in the spectrum
of the original adjacency matrix. ``quotient(..., mode="haemers")`` instead
averages block sums over an arbitrary partition; those eigenvalues only
interlace.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .eigen import MULTISET_TOL, Spectrum, eigenvalues_symmetric, multiset_contains
from .graph import Graph, GraphError

__all__ = [
    "ReductionError",
    "OrbitPartition",
    "QuotientGraph",
    "validate_permutation",
    "orbits",
    "partition_from_labels",
    "check_automorphism",
    "quotient",
    "quotient_spectrum",
    "verify_containment",
    "load_automorphisms",
]

Permutation = Sequence[int]


class ReductionError(GraphError):
    pass


@dataclass(frozen=True)
class OrbitPartition:
    """``labels[v]`` is the orbit of ``v``; orbits are numbered by smallest member."""

    labels: tuple[int, ...]

    @property
    def count(self) -> int:
        return max(self.labels, default=-1) + 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(np.bincount(self.labels, minlength=self.count).tolist())

    def members(self, i: int) -> list[int]:
        return [v for v, lab in enumerate(self.labels) if lab == i]


def validate_permutation(p: Permutation, n: int) -> list[int]:
    p = [int(x) for x in p]
    if len(p) != n or sorted(p) != list(range(n)):
        raise ReductionError(f"not a permutation of 0..{n - 1}")
    return p


def _relabel(roots: list[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(r, len(seen)) for r in roots)


def orbits(n: int, gens: Sequence[Permutation]) -> OrbitPartition:
    """Orbits of the group generated by ``gens`` (union-find over ``v -> p[v]``)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        p = validate_permutation(p, n)
        for v, w in enumerate(p):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return OrbitPartition(_relabel([find(v) for v in range(n)]))


def partition_from_labels(labels: Sequence[int]) -> OrbitPartition:
    """Renumber arbitrary labels so parts are ordered by their smallest vertex."""
    return OrbitPartition(_relabel(list(labels)))


def check_automorphism(g: Graph, p: Permutation) -> bool:
    """True when ``p`` preserves the weighted adjacency exactly, loops included."""
    try:
        p = validate_permutation(p, g.n)
    except ReductionError:
        return False
    a = g.adjacency
    idx = np.array(p)
    b = np.empty_like(a)
    b[np.ix_(idx, idx)] = a
    return bool(np.array_equal(a, b))


@dataclass(frozen=True, eq=False)
class QuotientGraph:
    """Directed weights ``B[i, j]`` from one member of orbit ``i`` into orbit ``j``."""

    weights: np.ndarray
    sizes: tuple[int, ...]
    mode: str = "reduction"

    @property
    def count(self) -> int:
        return len(self.sizes)

    def detailed_balance_gap(self) -> float:
        s = np.asarray(self.sizes, dtype=float)
        flow = s[:, None] * self.weights
        return float(np.abs(flow - flow.T).max())

    def to_edgelist(self) -> str:
        """Text with header ``k`` then one ``i j weight`` line per nonzero entry."""
        lines = [f"{self.count}"]
        for i in range(self.count):
            for j in range(self.count):
                w = self.weights[i, j]
                if w != 0:
                    lines.append(f"{i} {j} {format(float(w), '.17g')}")
        return "\n".join(lines) + "\n"


def quotient(g: Graph, part: OrbitPartition, *, mode: str = "reduction") -> QuotientGraph:
    """Quotient of ``g`` by ``part``.

    ``mode="reduction"`` requires every member of an orbit to send the same
    weight into each orbit and raises otherwise. ``mode="haemers"`` uses the
    average ``1^T A_ij 1 / n_i`` for any partition.
    """
    if len(part.labels) != g.n:
        raise ReductionError(f"partition covers {len(part.labels)} vertices, graph has {g.n}")
    k = part.count
    onehot = np.zeros((g.n, k))
    onehot[np.arange(g.n), part.labels] = 1.0
    into = g.adjacency @ onehot  # row v: weight from v into each part
    sizes = np.array(part.sizes, dtype=float)
    if mode == "haemers":
        b = (onehot.T @ into) / sizes[:, None]
        return QuotientGraph(b, part.sizes, mode)
    if mode != "reduction":
        raise ReductionError(f"unknown quotient mode {mode!r}")
    reps = [part.labels.index(i) for i in range(k)]
    b = into[reps]
    lab = np.array(part.labels)
    bad = np.flatnonzero(np.any(into != b[lab], axis=1))
    if len(bad):
        v = int(bad[0])
        raise ReductionError(
            f"partition is not equitable: vertex {v} sends {into[v].tolist()} "
            f"but its orbit representative {reps[lab[v]]} sends {b[lab[v]].tolist()}"
        )
    return QuotientGraph(b, part.sizes, mode)


def quotient_spectrum(q: QuotientGraph, *, backend: str = "ql") -> Spectrum:
    """Eigenvalues of ``B`` via the symmetric matrix ``S^{1/2} B S^{-1/2}``."""
    if q.mode == "reduction" and q.detailed_balance_gap() > 1e-9:
        raise ReductionError(f"detailed balance violated by {q.detailed_balance_gap():.3g}")
    s = np.sqrt(np.asarray(q.sizes, dtype=float))
    m = s[:, None] * q.weights / s[None, :]
    return eigenvalues_symmetric((m + m.T) / 2, backend=backend)


def verify_containment(sub, full, tol: float = MULTISET_TOL) -> bool:
    """Each value of ``sub`` matches a distinct value of ``full`` within ``tol``."""
    sub_vals = sub.values if isinstance(sub, Spectrum) else sub
    full_vals = full.values if isinstance(full, Spectrum) else full
    return multiset_contains(sub_vals, full_vals, tol)


def load_automorphisms(text: str, g: Graph) -> list[list[int]]:
    """Parse a JSON array of image arrays and check each one against ``g``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReductionError(f"automorphism file is not valid JSON: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(p, list) for p in data):
        raise ReductionError("automorphism file must be a JSON array of integer arrays")
    perms = []
    for i, p in enumerate(data):
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in p):
            raise ReductionError(f"permutation {i} has non-integer entries")
        perm = validate_permutation(p, g.n)
        if not check_automorphism(g, perm):
            raise ReductionError(f"permutation {i} is not an automorphism of the graph")
        perms.append(perm)
    return perms
