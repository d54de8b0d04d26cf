"""Dense symmetric eigensolver and tolerance-aware spectra.

The default path is Householder reduction to tridiagonal form followed by
implicit-shift QL iteration. ``backend="lapack"`` hands the same problem to
``numpy.linalg.eigh`` and exists for cross-checking and for the largest
instances.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "EigenError",
    "Spectrum",
    "tridiagonalize",
    "tridiagonal_ql",
    "eigenvalues_symmetric",
    "eigenpairs_symmetric",
    "multiset_contains",
    "multiset_equal",
    "max_dimension",
]

DEFAULT_MAX_N = 2500
MULTISET_TOL = 1e-7
_EPS = np.finfo(float).eps


class EigenError(ValueError):
    pass


def max_dimension() -> int:
    """Eigensolver size guard; ``SPECTRE_MAX_N`` overrides the default of 2500."""
    raw = os.environ.get("SPECTRE_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def _check(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise EigenError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    if n == 0:
        raise EigenError("matrix has dimension 0")
    if n > max_dimension():
        raise EigenError(f"dimension {n} exceeds the eigensolver guard {max_dimension()} (set SPECTRE_MAX_N)")
    if not np.all(np.isfinite(m)):
        raise EigenError("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(m).max()))
    if float(np.abs(m - m.T).max()) > 1e-12 * scale:
        raise EigenError("matrix is not symmetric")
    return m


def tridiagonalize(m: np.ndarray, *, want_q: bool = False):
    """Householder reduction ``Q^T M Q = T``.

    Returns ``(d, e, q)`` with ``d`` the diagonal of ``T``, ``e`` its
    subdiagonal (length ``n - 1``) and ``q`` the orthogonal factor or None.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    q = np.eye(n) if want_q else None
    for k in range(n - 2):
        x = a[k + 1 :, k]
        norm = math.sqrt(float(x @ x))
        if norm == 0.0:
            continue
        alpha = -math.copysign(norm, x[0])
        v = x.copy()
        v[0] -= alpha
        vnorm = math.sqrt(float(v @ v))
        if vnorm == 0.0:
            continue
        v /= vnorm
        sub = a[k + 1 :, k + 1 :]
        p = sub @ v
        w = p - (v @ p) * v
        sub -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        a[k + 1 :, k] = 0.0
        a[k, k + 1 :] = 0.0
        a[k + 1, k] = a[k, k + 1] = alpha
        if q is not None:
            blk = q[:, k + 1 :]
            blk -= 2.0 * np.outer(blk @ v, v)
    d = np.diag(a).copy()
    e = np.diag(a, -1).copy()
    return d, e, q


def tridiagonal_ql(d: np.ndarray, e: np.ndarray, z: np.ndarray | None = None, *, max_iter: int = 60):
    """Implicit-shift QL on the symmetric tridiagonal ``(d, e)``.

    If ``z`` is given its columns are rotated along, so passing the
    Householder factor yields eigenvectors of the original matrix. Returns
    unsorted ``(eigenvalues, z)``.
    """
    n = len(d)
    dd = [float(x) for x in d]
    ee = [float(x) for x in e] + [0.0]
    zt = None if z is None else np.array(z, dtype=float).T.copy()
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                scale = abs(dd[m]) + abs(dd[m + 1])
                if abs(ee[m]) <= _EPS * scale:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                raise EigenError(f"QL iteration did not converge for eigenvalue {l}")
            g = (dd[l + 1] - dd[l]) / (2.0 * ee[l])
            r = math.hypot(g, 1.0)
            g = dd[m] - dd[l] + ee[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * ee[i]
                b = c * ee[i]
                r = math.hypot(f, g)
                ee[i + 1] = r
                if r == 0.0:
                    dd[i + 1] -= p
                    ee[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = dd[i + 1] - p
                r = (dd[i] - g) * s + 2.0 * c * b
                p = s * r
                dd[i + 1] = g + p
                g = c * r - b
                if zt is not None:
                    zi = zt[i].copy()
                    zt[i] = c * zi - s * zt[i + 1]
                    zt[i + 1] = s * zi + c * zt[i + 1]
                i -= 1
            if underflow:
                continue
            dd[l] -= p
            ee[l] = g
            ee[m] = 0.0
    return np.array(dd), (None if zt is None else zt.T)


def eigenvalues_symmetric(m: np.ndarray, *, backend: str = "ql") -> "Spectrum":
    """All eigenvalues of a real symmetric matrix, ascending."""
    m = _check(m)
    if backend == "lapack":
        vals = np.linalg.eigvalsh(m)
    elif backend == "ql":
        d, e, _ = tridiagonalize(m)
        vals, _ = tridiagonal_ql(d, e)
    else:
        raise EigenError(f"unknown backend {backend!r}")
    return Spectrum(np.sort(vals))


def eigenpairs_symmetric(m: np.ndarray, *, backend: str = "ql") -> tuple["Spectrum", np.ndarray]:
    """Eigenvalues ascending and the matching orthonormal eigenvectors as columns."""
    m = _check(m)
    if backend == "lapack":
        vals, vecs = np.linalg.eigh(m)
    elif backend == "ql":
        d, e, q = tridiagonalize(m, want_q=True)
        vals, vecs = tridiagonal_ql(d, e, q)
    else:
        raise EigenError(f"unknown backend {backend!r}")
    order = np.argsort(vals, kind="stable")
    return Spectrum(vals[order]), vecs[:, order]


def multiset_contains(sub: Iterable[float], full: Iterable[float], tol: float = MULTISET_TOL) -> bool:
    """Greedy sorted matching: each value of ``sub`` pairs with a distinct value of ``full``."""
    a = np.sort(np.asarray(list(sub), dtype=float))
    b = np.sort(np.asarray(list(full), dtype=float))
    j = 0
    for x in a:
        while j < len(b) and b[j] < x - tol:
            j += 1
        if j == len(b) or abs(b[j] - x) > tol:
            return False
        j += 1
    return True


def multiset_equal(a: Iterable[float], b: Iterable[float], tol: float = MULTISET_TOL) -> bool:
    a = list(a)
    b = list(b)
    return len(a) == len(b) and multiset_contains(a, b, tol)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues with multiset comparisons at a fixed tolerance."""

    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.sort(np.asarray(self.values, dtype=float))
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values.tolist())

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self) -> str:
        return f"Spectrum({np.array2string(self.values, precision=6)})"

    @property
    def descending(self) -> np.ndarray:
        return self.values[::-1]

    def contains(self, other: Iterable[float], tol: float = MULTISET_TOL) -> bool:
        return multiset_contains(other, self.values, tol)

    def matches(self, other: Iterable[float], tol: float = MULTISET_TOL) -> bool:
        return multiset_equal(self.values, other, tol)
