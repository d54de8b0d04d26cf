"""Spectral quantities of graphs and the eigenvalue bound theorems built on them.

Notation follows the usual conventions: adjacency eigenvalues
``lam1 >= lam2 >= ...``, Laplacian eigenvalues ``0 = rho1 <= rho2 <= ...``
(``rho2`` is the algebraic connectivity) and normalized-Laplacian
eigenvalues ``mu``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from .eigen import Spectrum, eigenpairs_symmetric, eigenvalues_symmetric
from .graph import (
    Graph,
    GraphError,
    components,
    degree_profile,
    laplacian_matrix,
    normalized_laplacian,
    two_coloring,
)

__all__ = [
    "adjacency_spectrum",
    "laplacian_spectrum",
    "normalized_laplacian_spectrum",
    "algebraic_connectivity",
    "lambda_nontrivial",
    "is_ramanujan",
    "ramanujan_bound",
    "alon_boppana_floor",
    "fiedler_bw_lower",
    "cheeger_bw_upper",
    "first_moment_bw_upper",
    "alon_milman_diameter_upper",
    "mckay_diameter_lower",
    "tanner_iso_lower",
    "lambda2_upper_from_h",
    "DiscrepancyResult",
    "discrepancy_check",
    "active_subset_bw_bound",
    "fiedler_vector",
    "SpectralReport",
    "spectral_report",
]

RAMANUJAN_SLACK = 1e-9


def adjacency_spectrum(g: Graph, *, backend: str = "ql") -> Spectrum:
    return eigenvalues_symmetric(g.adjacency, backend=backend)


def laplacian_spectrum(g: Graph, *, backend: str = "ql") -> Spectrum:
    return eigenvalues_symmetric(laplacian_matrix(g), backend=backend)


def normalized_laplacian_spectrum(g: Graph, *, backend: str = "ql") -> Spectrum:
    return eigenvalues_symmetric(normalized_laplacian(g), backend=backend)


def algebraic_connectivity(g: Graph, *, backend: str = "ql") -> float:
    """Second-smallest Laplacian eigenvalue."""
    if g.n < 2:
        raise GraphError("algebraic connectivity needs at least two vertices")
    return float(laplacian_spectrum(g, backend=backend)[1])


def _regular_connected_degree(g: Graph) -> float:
    prof = degree_profile(g)
    if g.n == 0 or not prof.is_regular:
        raise GraphError(f"graph is not regular (degrees {prof.min}..{prof.max})")
    if max(components(g), default=0) > 0:
        raise GraphError("graph is disconnected")
    return float(prof.regularity)


def lambda_nontrivial(g: Graph, *, backend: str = "ql", spectrum: Spectrum | None = None) -> float:
    """Largest |eigenvalue| once the trivial ``k`` (and ``-k`` when bipartite) is removed."""
    k = _regular_connected_degree(g)
    vals = list((spectrum if spectrum is not None else adjacency_spectrum(g, backend=backend)).values)
    vals.pop(int(np.argmin([abs(v - k) for v in vals])))
    if two_coloring(g) is not None and vals:
        vals.pop(int(np.argmin([abs(v + k) for v in vals])))
    return float(max((abs(v) for v in vals), default=0.0))


def ramanujan_bound(k: float) -> float:
    return 2.0 * math.sqrt(k - 1)


def is_ramanujan(g: Graph, *, backend: str = "ql", spectrum: Spectrum | None = None) -> bool:
    k = _regular_connected_degree(g)
    if k < 2:
        raise GraphError("Ramanujan property needs degree at least 2")
    return bool(lambda_nontrivial(g, backend=backend, spectrum=spectrum) <= ramanujan_bound(k) + RAMANUJAN_SLACK)


def alon_boppana_floor(k: int, diameter: float) -> float:
    """``2 sqrt(k-1) (1 - 2/D) - 2/D``; pass ``math.inf`` for the limiting value."""
    if k < 2 or diameter < 1:
        raise ValueError("need k >= 2 and D >= 1")
    if math.isinf(diameter):
        return ramanujan_bound(k)
    return ramanujan_bound(k) * (1 - 2 / diameter) - 2 / diameter


def fiedler_bw_lower(rho2: float, n: int) -> float:
    return rho2 * n / 4


def cheeger_bw_upper(k: float, rho2: float, n: int) -> float:
    """Cheeger-type upper bound, capped by the first-moment value ``m/2 = kn/4``."""
    cheeger = math.sqrt(2 * k * max(rho2, 0.0)) * k * n / 2
    return min(cheeger, k * n / 4)


def first_moment_bw_upper(total_weight: float, n: int) -> float:
    """Mean cut of a uniformly random balanced bipartition: ``m * floor(n/2) * ceil(n/2) / C(n, 2)``.

    Unlike the rounded ``m/2`` cap this holds for every ``n >= 2``.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return total_weight * (n // 2) * (n - n // 2) / (n * (n - 1) / 2)


def alon_milman_diameter_upper(n: int, delta: float, rho2: float) -> int:
    if rho2 <= 0:
        raise ValueError("diameter bound needs rho2 > 0 (graph disconnected)")
    x = math.sqrt(2 * delta / rho2) * math.log2(n)
    # guard against x = integer landing a hair above itself in floating point
    return 2 * math.ceil(x - 1e-12 * max(1.0, x))


def mckay_diameter_lower(n: int, rho2: float) -> float:
    if rho2 <= 0:
        raise ValueError("diameter bound needs rho2 > 0 (graph disconnected)")
    return 4 / (n * rho2)


def tanner_iso_lower(k: float, lambda2: float) -> float:
    if lambda2 >= k:
        raise ValueError(f"Tanner bound needs lambda2 < k, got lambda2={lambda2}, k={k}")
    return 1 - k / (2 * k - 2 * lambda2)


def lambda2_upper_from_h(k: float, h: float) -> float:
    if h < 0:
        raise ValueError("isoperimetric number is nonnegative")
    if math.isinf(h):
        return k - 0.5
    return k - h * h / (4 + 2 * h * h)


@dataclass(frozen=True)
class DiscrepancyResult:
    e_xy: float
    deviation: float
    bound: float
    holds: bool


def discrepancy_check(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> DiscrepancyResult:
    """Compare ``e(X, Y)`` with ``k|X||Y|/n`` against the Ramanujan discrepancy bound.

    ``e(X, Y)`` counts ordered pairs, so an edge inside ``X & Y`` counts twice
    and ``e(V, V) = kn``. Loops are not counted.
    """
    k = _regular_connected_degree(g)
    n = g.n
    xset, yset = sorted(set(xs)), sorted(set(ys))
    for v in xset + yset:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} outside 0..{n - 1}")
    a = g.adjacency.copy()
    np.fill_diagonal(a, 0.0)
    e_xy = float(a[np.ix_(xset, yset)].sum()) if xset and yset else 0.0
    sx, sy = len(xset), len(yset)
    deviation = abs(e_xy - k * sx * sy / n)
    bound = ramanujan_bound(k) / n * math.sqrt(sx * (n - sx) * sy * (n - sy))
    return DiscrepancyResult(e_xy, float(deviation), float(bound), bool(deviation <= bound + 1e-9))


def active_subset_bw_bound(k: float, n: int, alpha: float) -> float:
    """Bisection bandwidth guaranteed on any ``alpha * n`` active vertices of a Ramanujan graph."""
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    return (alpha * k * n / 2) * (alpha / 2 - (ramanujan_bound(k) / k) * (1 - alpha / 2))


def fiedler_vector(g: Graph, *, backend: str = "ql") -> np.ndarray:
    """Unit Laplacian eigenvector for rho2, signed so its first nonzero entry is positive."""
    if g.n < 2:
        raise GraphError("Fiedler vector needs at least two vertices")
    if max(components(g)) > 0:
        raise GraphError("graph is disconnected")
    _, vecs = eigenpairs_symmetric(laplacian_matrix(g), backend=backend)
    v = vecs[:, 1].copy()
    v /= np.linalg.norm(v)
    nz = np.flatnonzero(np.abs(v) > 1e-12)
    if len(nz) and v[nz[0]] < 0:
        v = -v
    return v


@dataclass(frozen=True)
class SpectralReport:
    n: int
    degree_min: float
    degree_max: float
    lambda1: float
    lambda2: float
    lambda_nontrivial: float | None
    rho2: float
    spectral_gap: float
    mu2: float | None
    is_ramanujan: bool | None
    is_bipartite: bool
    is_connected: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def spectral_report(g: Graph, *, backend: str = "ql") -> SpectralReport:
    if g.n < 2:
        raise GraphError("spectral report needs at least two vertices")
    prof = degree_profile(g)
    adj = adjacency_spectrum(g, backend=backend)
    lap = laplacian_spectrum(g, backend=backend)
    connected = max(components(g)) == 0
    bipartite = two_coloring(g) is not None
    mu2 = None
    if prof.min > 0:
        mu2 = float(normalized_laplacian_spectrum(g, backend=backend)[1])
    lam, ram = None, None
    if prof.is_regular and connected:
        lam = float(lambda_nontrivial(g, spectrum=adj))
        if prof.regularity >= 2:
            ram = bool(lam <= ramanujan_bound(prof.regularity) + RAMANUJAN_SLACK)
    desc = adj.descending
    return SpectralReport(
        n=g.n,
        degree_min=prof.min,
        degree_max=prof.max,
        lambda1=float(desc[0]),
        lambda2=float(desc[1]),
        lambda_nontrivial=lam,
        rho2=float(lap[1]),
        spectral_gap=float(desc[0] - desc[1]),
        mu2=mu2,
        is_ramanujan=ram,
        is_bipartite=bipartite,
        is_connected=connected,
    )
