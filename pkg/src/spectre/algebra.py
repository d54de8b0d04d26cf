"""Finite fields, Legendre symbols, PSL/PGL(2, p) and Cayley graphs.

Field elements are encoded as integers ``0..q-1``: the coefficient vector
``(c_0, ..., c_{e-1})`` of a residue polynomial maps to ``sum c_i p**i``.
That integer order is the canonical element order used for "smallest"
choices (modulus, primitive element).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .eigen import Spectrum
from .graph import Graph

__all__ = [
    "AlgebraError",
    "is_prime",
    "prime_power",
    "Field",
    "field_make",
    "primitive_element",
    "legendre",
    "sqrt_minus_one",
    "sum_of_squares_solutions",
    "Mat2",
    "canon_pgl",
    "canon_psl",
    "mat_mul",
    "GeneratorSet",
    "lps_generators",
    "lps_group_kind",
    "group_elements",
    "cayley_graph",
    "abelian_cayley_spectrum",
]


class AlgebraError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, e)`` with ``q = p**e`` and ``p`` prime, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            return (p, e) if r == 1 else None
    return None


def _poly_mod(a: list[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` by the monic ``mod`` (coefficient lists, low degree first)."""
    a = a[:]
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _monic_polys(p: int, deg: int) -> Iterable[list[int]]:
    # lower coefficients enumerated so the integer encoding sum c_i p**i increases
    for code in range(p**deg):
        coeffs = [(code // p**i) % p for i in range(deg)]
        yield coeffs + [1]


def _is_irreducible(poly: list[int], p: int) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not any(_poly_mod(poly, f, p)):
                return False
    return True


@dataclass(frozen=True)
class Field:
    """GF(p**e) with a monic irreducible modulus (coefficients low degree first)."""

    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    def elements(self) -> range:
        return range(self.q)

    def to_vector(self, x: int) -> tuple[int, ...]:
        return tuple((x // self.p**i) % self.p for i in range(self.e))

    def from_vector(self, v: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(v))

    def add(self, x: int, y: int) -> int:
        return self.from_vector([a + b for a, b in zip(self.to_vector(x), self.to_vector(y))])

    def neg(self, x: int) -> int:
        return self.from_vector([-a for a in self.to_vector(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        a, b = self.to_vector(x), self.to_vector(y)
        prod = [0] * (2 * self.e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return self.from_vector(_poly_mod(prod, self.modulus, self.p))

    def pow(self, x: int, k: int) -> int:
        result, base = 1, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if x == 0:
            raise AlgebraError("zero has no multiplicative order")
        k, y = 1, x
        while y != 1:
            y = self.mul(y, x)
            k += 1
        return k


def field_make(p: int, e: int = 1) -> Field:
    """GF(p**e) using the smallest monic irreducible modulus in canonical order."""
    if not is_prime(p):
        raise AlgebraError(f"{p} is not prime")
    if not 1 <= e <= 4:
        raise AlgebraError(f"extension degree must be in 1..4, got {e}")
    for poly in _monic_polys(p, e):
        if _is_irreducible(poly, p):
            return Field(p, e, tuple(poly))
    raise AlgebraError(f"no irreducible polynomial of degree {e} over GF({p})")


def primitive_element(f: Field) -> int:
    """Smallest generator of the multiplicative group of ``f``."""
    for x in range(1, f.q):
        if f.order(x) == f.q - 1:
            return x
    raise AlgebraError("multiplicative group has no generator")  # unreachable for a field


def legendre(a: int, p: int) -> int:
    """Legendre symbol via Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise AlgebraError(f"Legendre symbol needs an odd prime modulus, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_minus_one(p: int) -> int:
    """Smallest positive ``i`` with ``i*i = -1 (mod p)``."""
    for i in range(1, p):
        if (i * i + 1) % p == 0:
            return i
    raise AlgebraError(f"-1 is not a square mod {p}")


def sum_of_squares_solutions(q: int) -> list[tuple[int, int, int, int]]:
    """Solutions of ``a0^2 + a1^2 + a2^2 + a3^2 = q`` with ``a0 > 0`` odd and the rest even."""
    if not is_prime(q) or q % 4 != 1:
        raise AlgebraError(f"q must be a prime congruent to 1 mod 4, got {q}")
    r = math.isqrt(q)
    odd = range(1, r + 1, 2)
    even = [x for x in range(-r, r + 1) if x % 2 == 0]
    sols = [
        (a0, a1, a2, a3)
        for a0 in odd
        for a1 in even
        for a2 in even
        for a3 in even
        if a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == q
    ]
    if len(sols) != q + 1:
        raise AlgebraError(f"found {len(sols)} solutions for q={q}, expected {q + 1}")
    return sols


# 2x2 matrices over GF(p) as row-major tuples (a, b, c, d).
Mat2 = tuple[int, int, int, int]


def mat_mul(x: Mat2, y: Mat2, p: int) -> Mat2:
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def _det(m: Mat2, p: int) -> int:
    return (m[0] * m[3] - m[1] * m[2]) % p


def _first_nonzero(m: Mat2) -> int:
    return next(x for x in m if x)


def canon_pgl(m: Mat2, p: int) -> Mat2:
    """Projective representative whose first nonzero entry is 1."""
    if _det(m, p) == 0:
        raise AlgebraError(f"matrix {m} is singular mod {p}")
    inv = pow(_first_nonzero(m), -1, p)
    return tuple(x * inv % p for x in m)  # type: ignore[return-value]


def _sqrt_mod(a: int, p: int) -> int | None:
    a %= p
    for x in range(p):
        if x * x % p == a:
            return x
    return None


def canon_psl(m: Mat2, p: int) -> Mat2:
    """Scale to determinant 1, then pick from ``{M, -M}`` the smaller first nonzero entry."""
    det = _det(m, p)
    if det == 0:
        raise AlgebraError(f"matrix {m} is singular mod {p}")
    if det != 1:
        root = _sqrt_mod(det, p)
        if root is None:
            raise AlgebraError(f"matrix {m} is not in PSL(2,{p}): determinant is a non-residue")
        inv = pow(root, -1, p)
        m = tuple(x * inv % p for x in m)  # type: ignore[assignment]
    neg = tuple((-x) % p for x in m)
    return m if _first_nonzero(m) <= _first_nonzero(neg) else neg  # type: ignore[return-value]


def _canon(kind: str) -> Callable[[Mat2, int], Mat2]:
    if kind == "PGL":
        return canon_pgl
    if kind == "PSL":
        return canon_psl
    raise AlgebraError(f"unknown group kind {kind!r}")


@dataclass(frozen=True)
class GeneratorSet:
    elements: tuple[Hashable, ...]
    inverse_closed: bool
    kind: str = ""
    p: int = 0


def lps_group_kind(p: int, q: int) -> str:
    return "PSL" if legendre(q, p) == 1 else "PGL"


def lps_generators(p: int, q: int) -> GeneratorSet:
    """The ``q + 1`` LPS generator matrices, canonicalized in PSL or PGL(2, p)."""
    for x, name in ((p, "p"), (q, "q")):
        if not is_prime(x) or x % 4 != 1:
            raise AlgebraError(f"{name}={x} must be a prime congruent to 1 mod 4")
    if p == q:
        raise AlgebraError("p and q must be distinct")
    kind = lps_group_kind(p, q)
    canon = _canon(kind)
    i = sqrt_minus_one(p)
    gens = []
    for a0, a1, a2, a3 in sum_of_squares_solutions(q):
        raw = ((a0 + i * a1) % p, (a2 + i * a3) % p, (-a2 + i * a3) % p, (a0 - i * a1) % p)
        if _det(raw, p) == 0:
            raise AlgebraError(f"degenerate generator {raw} for solution {(a0, a1, a2, a3)}")
        gens.append(canon(raw, p))
    ident = canon((1, 0, 0, 1), p)
    pool = list(gens)
    closed = True
    for s in gens:
        for t in pool:
            if canon(mat_mul(s, t, p), p) == ident:
                pool.remove(t)
                break
        else:
            closed = False
    if not closed:
        raise AlgebraError("LPS generator set is not closed under inverses")
    return GeneratorSet(tuple(gens), True, kind, p)


def group_elements(kind: str, p: int) -> list[Mat2]:
    """All canonical elements of PSL(2, p) or PGL(2, p), in lexicographic order."""
    canon = _canon(kind)
    if not is_prime(p) or p == 2:
        raise AlgebraError(f"p must be an odd prime, got {p}")
    if p > 31:
        raise AlgebraError(f"p={p} exceeds the size guard (31)")
    out = []
    for m in itertools.product(range(p), repeat=4):
        if _det(m, p) == 0:
            continue
        if kind == "PSL" and _det(m, p) != 1:
            continue
        if canon(m, p) == m:
            out.append(m)
    return out


def cayley_graph(elements: Sequence[Hashable], gens: Iterable[Hashable], mul: Callable) -> Graph:
    """Undirected Cayley graph with an edge ``{g, g*s}`` for every generator ``s``.

    Each undirected edge is seen once from each endpoint; the arc counts must
    be symmetric, which holds exactly when the generator multiset is closed
    under inverses.
    """
    gens = list(gens.elements if isinstance(gens, GeneratorSet) else gens)
    index = {x: i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise AlgebraError("group elements are not distinct")
    arcs: dict[tuple[int, int], int] = {}
    for i, x in enumerate(elements):
        for s in gens:
            j = index.get(mul(x, s))
            if j is None:
                raise AlgebraError(f"product {x} * {s} is not a listed element")
            if i == j:
                raise AlgebraError("identity in generator set would create loops")
            arcs[(i, j)] = arcs.get((i, j), 0) + 1
    for (i, j), c in arcs.items():
        if arcs.get((j, i), 0) != c:
            raise AlgebraError("generator set is not closed under inverses")
    edges = tuple((i, j, float(c)) for (i, j), c in sorted(arcs.items()) if i < j)
    return Graph(len(elements), edges)


def abelian_cayley_spectrum(a: int, b: int, gens: Iterable[tuple[int, int]]) -> Spectrum:
    """Adjacency spectrum of the Cayley graph on ``Z_a x Z_b`` via character sums."""
    gens = [(s % a, t % b) for s, t in gens]
    counts: dict[tuple[int, int], int] = {}
    for g in gens:
        counts[g] = counts.get(g, 0) + 1
    for (s, t), c in counts.items():
        if counts.get(((-s) % a, (-t) % b), 0) != c:
            raise AlgebraError("generator multiset is not closed under inverses")
    x = np.arange(a)[:, None]
    y = np.arange(b)[None, :]
    total = np.zeros((a, b))
    for s, t in gens:
        total += np.cos(2 * np.pi * x * s / a + 2 * np.pi * y * t / b)
    return Spectrum(total.ravel())
