"""Deterministic generators for interconnect topology families.

Every generator fixes its vertex indexing (documented per function) so that
edge lists are reproducible. Families that need loops to become regular
(Data Vortex, CLEX) emit them under the graph-core loop convention.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import algebra
from .graph import Edge, Graph, GraphError, cartesian_product, degree_profile, from_adjacency, regularize_with_loops

__all__ = [
    "TopologyError",
    "path",
    "path_looped",
    "cycle",
    "complete",
    "hypercube",
    "grid",
    "torus",
    "butterfly",
    "data_vortex",
    "cc",
    "ccc",
    "cc_spectrum_via_factors",
    "ccc_signed_loop_matrix",
    "clex_m_matrix",
    "clex_m_spectrum",
    "clex_general",
    "clex",
    "g_conn_h",
    "hypercube_slot",
    "PETERSEN_EDGES",
    "petersen",
    "peterson_torus",
    "dragonfly",
    "slimfly",
    "slimfly_shift_automorphism",
    "slimfly_translation_automorphisms",
    "lps_graph",
    "fat_tree",
    "random_regular",
    "butterfly_automorphisms",
    "data_vortex_automorphisms",
    "fat_tree_automorphisms",
    "peterson_torus_automorphisms",
    "TopologySpec",
    "parse_spec",
    "parse_graph_token",
    "FAMILIES",
]

SIZE_GUARD = 10_000


class TopologyError(GraphError):
    """Parameter outside a family's constraints."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise TopologyError(msg)


def _guard(n: int, what: str) -> None:
    _require(n <= SIZE_GUARD, f"{what} has {n} vertices, above the {SIZE_GUARD} size guard")


# -- elementary graphs --------------------------------------------------------


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph(n, tuple((i, i + 1, 1.0) for i in range(n - 1)))


def path_looped(n: int) -> Graph:
    """``P'_n``: the path with a unit loop at each end (one loop of weight 2 when n = 1)."""
    g = path(n)
    return Graph(n, g.edges + ((0, 0, 1.0), (n - 1, n - 1, 1.0)))


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n, 1.0) for i in range(n)))


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph(n, tuple((i, j, 1.0) for i in range(n) for j in range(i + 1, n)))


# -- products of paths and cycles --------------------------------------------


def hypercube(d: int) -> Graph:
    """``Q_d``; vertex index is the binary coordinate value."""
    _require(1 <= d <= 14, f"hypercube dimension must be in 1..14, got {d}")
    n = 1 << d
    return Graph(n, tuple((x, x | (1 << j), 1.0) for x in range(n) for j in range(d) if not x >> j & 1))


def _product(factors: list[Graph]) -> Graph:
    g = factors[0]
    for h in factors[1:]:
        g = cartesian_product(g, h)
    return g


def grid(*dims: int) -> Graph:
    """``P_{k1} □ ... □ P_{kd}`` with row-major indexing."""
    _require(len(dims) >= 1, "grid needs at least one dimension")
    _require(all(k >= 2 for k in dims), f"grid side lengths must be >= 2, got {dims}")
    _require(math.prod(dims) <= SIZE_GUARD, f"grid has {math.prod(dims)} vertices, above the size guard")
    return _product([path(k) for k in dims])


def torus(k: int, d: int) -> Graph:
    """``C_k`` to the ``d``-th box power, row-major indexing."""
    _require(k >= 3, f"torus needs k >= 3 (non-degenerate cycles), got k={k}")
    _require(d >= 1, f"torus needs d >= 1, got {d}")
    _guard(k**d, "torus")
    return _product([cycle(k)] * d)


# -- butterfly and data vortex ------------------------------------------------


def butterfly(k: int, s: int) -> Graph:
    """Cyclic ``k``-ary ``s``-fly.

    Vertex ``(i, a_0..a_{s-1})`` has index ``i * k**s + sum a_j k**(s-1-j)``.
    Layer ``i`` links forward to layer ``i+1 mod s`` by rewriting coordinate
    ``i`` to any of its ``k`` values. For ``s = 2`` the two directions overlap
    and parallel edges are kept.
    """
    _require(k >= 2 and s >= 2, f"butterfly needs k >= 2 and s >= 2, got k={k}, s={s}")
    _guard(s * k**s, "butterfly")
    ks = k**s
    edges: list[Edge] = []
    for i in range(s):
        step = k ** (s - 1 - i)
        nxt = (i + 1) % s
        for a in range(ks):
            digit = (a // step) % k
            base = a - digit * step
            for v in range(k):
                edges.append((i * ks + a, nxt * ks + base + v * step, 1.0))
    return Graph(s * ks, tuple(edges))


def _dv_index(A: int, C: int, a: int, c: int, h: int) -> int:
    return ((a % A) * C + c) * (1 << (C - 1)) + h


def data_vortex(A: int, C: int, *, loops: bool = True) -> Graph:
    """Data Vortex on ``Z_A x Z_C x Z_2^(C-1)``.

    Index ``(a*C + c) * 2**(C-1) + h``; the unit vector ``e_c`` is bit
    ``c - 1`` of ``h``. Cylinder-to-cylinder edges only run for ``c < C-1``,
    so the innermost and outermost rings have degree 3 before the loops that
    make the graph 4-regular.
    """
    _require(A >= 3 and C >= 2, f"data vortex needs A >= 3 and C >= 2, got A={A}, C={C}")
    H = 1 << (C - 1)
    _guard(A * C * H, "data vortex")
    edges: list[Edge] = []
    for a in range(A):
        for c in range(C):
            for h in range(H):
                u = _dv_index(A, C, a, c, h)
                if c < C - 1:
                    edges.append((u, _dv_index(A, C, a + 1, c + 1, h), 1.0))
                flip = 0 if c == 0 else 1 << (c - 1)
                edges.append((u, _dv_index(A, C, a + 1, c, h ^ flip), 1.0))
    g = Graph(A * C * H, tuple(edges))
    return regularize_with_loops(g) if loops else g


# -- cube-connected graphs ----------------------------------------------------


def _default_owner(n: int) -> Callable[[int], int]:
    return lambda j: j % n


def cc(g: Graph, d: int, owner: Callable[[int], int] | None = None) -> Graph:
    """Cube-connected ``g``: vertex ``(v, x)`` at index ``v * 2**d + x``.

    Each hypercube dimension ``j`` is owned by one vertex of ``g``
    (``owner(j)``, default ``j mod |V(g)|``); ``(v, x) ~ (v, x ^ 2**j)`` only
    when ``v`` owns ``j``. Base edges are copied on every hypercube layer.
    """
    _require(d >= 1, f"cube-connected graph needs d >= 1, got {d}")
    _require(g.n >= 1, "base graph must be nonempty")
    _require(not g.has_loops, "base graph must be loop-free")
    _guard(g.n << d, "cube-connected graph")
    own = owner or _default_owner(g.n)
    N = 1 << d
    edges: list[Edge] = []
    for u, v, w in g.edges:
        for x in range(N):
            edges.append((u * N + x, v * N + x, w))
    for j in range(d):
        v = own(j)
        _require(0 <= v < g.n, f"owner of dimension {j} is {v}, outside the base graph")
        for x in range(N):
            if not x >> j & 1:
                edges.append((v * N + x, v * N + (x | 1 << j), 1.0))
    return Graph(g.n * N, tuple(edges))


def ccc(d: int) -> Graph:
    """Cube-connected cycles: ``cc(C_d, d)`` with dimension ``j`` on cycle vertex ``j``."""
    _require(d >= 3, f"cube-connected cycles need d >= 3, got {d}")
    return cc(cycle(d), d, owner=lambda j: j)


def cc_spectrum_via_factors(g: Graph, d: int, owner: Callable[[int], int] | None = None):
    """Spectrum of ``cc(g, d)`` assembled from the signed-loop graphs ``G[s]``.

    For each sign vector ``s`` in ``{-1, 1}^d``, vertex ``v`` receives a loop
    of weight ``sum of s_j over the dimensions it owns``; the spectrum of the
    cube-connected graph is the union of the spectra of these ``2**d``
    small matrices.
    """
    from .eigen import Spectrum, eigenvalues_symmetric

    _require(1 <= d <= 14, f"d must be in 1..14, got {d}")
    own = owner or _default_owner(g.n)
    owners = np.array([own(j) for j in range(d)])
    base = g.adjacency
    values = []
    for signs in itertools.product((-1.0, 1.0), repeat=d):
        loops = np.zeros(g.n)
        np.add.at(loops, owners, signs)
        values.extend(eigenvalues_symmetric(base + np.diag(loops)).values)
    return Spectrum(np.array(values))


def ccc_signed_loop_matrix(d: int) -> np.ndarray:
    """``C_d`` with loop ``-1`` at one vertex and ``+1`` at the rest.

    Its top eigenvalue is the second-largest adjacency eigenvalue of ``ccc(d)``.
    """
    a = cycle(d).adjacency.copy()
    np.fill_diagonal(a, 1.0)
    a[0, 0] = -1.0
    return a


# -- CLEX ---------------------------------------------------------------------


def clex_m_matrix(k: int) -> np.ndarray:
    """``M[(i,j),(a,b)] = [i == b] + [j == a]`` with ``(i, j)`` at row ``i*k + j``."""
    _require(2 <= k <= 20, f"k must be in 2..20, got {k}")
    eye = np.eye(k)
    i, j, a, b = np.ix_(range(k), range(k), range(k), range(k))
    m = eye[i, b] + eye[j, a]
    return m.reshape(k * k, k * k)


def clex_m_spectrum(k: int):
    """Closed form ``{2k, k^(k-1), (-k)^(k-1), 0^((k-1)^2)}``, ascending."""
    from .eigen import Spectrum

    _require(2 <= k <= 20, f"k must be in 2..20, got {k}")
    vals = [2.0 * k] + [float(k)] * (k - 1) + [-float(k)] * (k - 1) + [0.0] * (k - 1) ** 2
    return Spectrum(np.array(vals))


def clex_general(g: Graph, ell: int) -> Graph:
    """``C(G, l) = A_G ⊗ I + sum_j I ⊗ M ⊗ I`` as an undirected looped multigraph.

    Vertex ``(v_0, ..., v_{l-1})`` has index ``sum v_m k**(l-1-m)`` where
    ``v_0`` is the base-graph coordinate. Diagonal entries of ``M`` become
    loops of weight 2.
    """
    k = g.n
    _require(k >= 2 and ell >= 1, f"CLEX needs k >= 2 and l >= 1, got k={k}, l={ell}")
    _guard(k**ell, "CLEX")
    prof = degree_profile(g)
    _require(prof.is_regular and not g.has_loops, "CLEX base graph must be regular and loop-free")
    _require(max(_components(g)) == 0, "CLEX base graph must be connected")
    a = np.kron(g.adjacency, np.eye(k ** (ell - 1)))
    if ell >= 2:
        m = clex_m_matrix(k)
        for j in range(ell - 1):
            a = a + np.kron(np.kron(np.eye(k**j), m), np.eye(k ** (ell - 2 - j)))
    return from_adjacency(a)


def clex(k: int, ell: int) -> Graph:
    """``C(K_k, l)``, regular of degree ``(k-1) + 2k(l-1)``."""
    _require(k >= 2, f"CLEX needs k >= 2, got {k}")
    return clex_general(complete(k), ell)


def _components(g: Graph) -> list[int]:
    from .graph import components

    return components(g)


# -- G-connected-H and relatives ---------------------------------------------

Slot = Callable[[int, int], int]


def hypercube_slot(v: int, u: int) -> int:
    """Slot rule for a hypercube base: the dimension of the edge ``{v, u}``."""
    return (v ^ u).bit_length() - 1


def g_conn_h(g: Graph, h: Graph, k: int = 1, slot: Slot | None = None) -> Graph:
    """``k``-fold ``G``-connected-``H``.

    Copy ``v`` of ``H`` occupies indices ``v*|H| .. v*|H| + |H| - 1``. With
    ``|H| = t*d`` the copy is cut into ``d`` blocks of ``t`` consecutive
    vertices; block ``slot(v, u)`` of copy ``v`` is joined to block
    ``slot(u, v)`` of copy ``u`` by the identity pairing with weight ``k``.
    The default slot is the rank of ``u`` among the sorted neighbours of ``v``.
    """
    pg, ph = degree_profile(g), degree_profile(h)
    _require(pg.is_regular and not g.has_loops, "G must be regular and loop-free")
    _require(ph.is_regular, "H must be regular")
    _require(k >= 1, f"k must be positive, got {k}")
    d = int(pg.regularity)
    _require(d >= 1 and h.n % d == 0, f"|V(H)| = {h.n} is not a multiple of deg(G) = {d}")
    _require(np.all(g.adjacency == np.minimum(g.adjacency, 1)), "G must be a simple graph")
    _guard(g.n * h.n, "G-connected-H")
    t = h.n // d
    nbrs = [g.neighbors(v) for v in range(g.n)]
    if slot is None:
        slot = lambda v, u: nbrs[v].index(u)  # noqa: E731
    for v in range(g.n):
        slots = sorted(slot(v, u) for u in nbrs[v])
        _require(slots == list(range(d)), f"slot rule is not a bijection onto 0..{d - 1} at vertex {v}")
    edges: list[Edge] = []
    for v in range(g.n):
        for a, b, w in h.edges:
            edges.append((v * h.n + a, v * h.n + b, w))
    for v in range(g.n):
        for u in nbrs[v]:
            if u < v:
                continue
            bv, bu = slot(v, u), slot(u, v)
            for i in range(t):
                edges.append((v * h.n + bv * t + i, u * h.n + bu * t + i, float(k)))
    out = Graph(g.n * h.n, tuple(edges))
    _check_block_weights(out, g, h.n, k * t)
    return out


def _check_block_weights(out: Graph, g: Graph, size: int, target: float) -> None:
    a = out.adjacency
    blocks = a.reshape(g.n, size, g.n, size).sum(axis=(1, 3))
    expected = (g.adjacency > 0) * target
    np.fill_diagonal(blocks, 0.0)
    if not np.array_equal(blocks, expected):
        raise TopologyError("cross edges do not place k*t weight across every G-edge")


PETERSEN_EDGES: tuple[tuple[int, int], ...] = (
    (0, 5), (0, 4), (0, 1), (4, 3), (4, 7), (5, 9), (5, 6), (1, 8),
    (1, 2), (7, 8), (7, 6), (8, 9), (9, 3), (6, 2), (3, 2),
)


def petersen() -> Graph:
    return Graph(10, tuple((u, v, 1.0) for u, v in PETERSEN_EDGES))


def peterson_torus(a: int, b: int) -> Graph:
    """Peterson torus on triples ``(x, y, p)`` at index ``(x*b + y)*10 + p``."""
    _require(a >= 2 and b >= 2, f"Peterson torus needs a, b >= 2, got a={a}, b={b}")
    _require(a % 2 == 1 or b % 2 == 1, "Peterson torus needs a or b odd")
    _guard(10 * a * b, "Peterson torus")

    def idx(x: int, y: int, p: int) -> int:
        return ((x % a) * b + (y % b)) * 10 + p

    edges: list[Edge] = []
    for x in range(a):
        for y in range(b):
            for p, q in PETERSEN_EDGES:
                edges.append((idx(x, y, p), idx(x, y, q), 1.0))
            edges.append((idx(x, y, 6), idx(x, y + 1, 9), 1.0))
            edges.append((idx(x, y, 1), idx(x + 1, y, 4), 1.0))
            edges.append((idx(x, y, 2), idx(x + 1, y + 1, 3), 1.0))
            edges.append((idx(x, y, 7), idx(x - 1, y + 1, 8), 1.0))
            edges.append((idx(x, y, 0), idx(x + a // 2, y + b // 2, 5), 1.0))
    return Graph(10 * a * b, tuple(edges))


def dragonfly(h: Graph) -> Graph:
    """``n + 1`` copies of ``H`` with one global link per vertex.

    Vertex ``j`` of copy ``i`` (index ``i*n + j``) links to copy
    ``j' = j if j < i else j + 1`` at vertex ``i' = i if i < j' else i - 1``.
    This equals ``g_conn_h(K_{n+1}, H)`` with the default slot rule.
    """
    n = h.n
    prof = degree_profile(h)
    _require(n >= 1 and prof.is_regular, "DragonFly needs a regular H")
    _require(max(_components(h)) == 0, "DragonFly needs a connected H")
    _guard(n * (n + 1), "DragonFly")
    edges: list[Edge] = []
    for i in range(n + 1):
        for a, b, w in h.edges:
            edges.append((i * n + a, i * n + b, w))
    for i in range(n + 1):
        for j in range(n):
            jj = j if j < i else j + 1
            ii = i if i < jj else i - 1
            if i < jj:
                edges.append((i * n + j, jj * n + ii, 1.0))
    return Graph(n * (n + 1), tuple(edges))


# -- algebraic families -------------------------------------------------------


def _slimfly_field(q: int) -> algebra.Field:
    pp = algebra.prime_power(q)
    _require(pp is not None, f"SlimFly needs a prime power q, got {q}")
    _require(q % 4 == 1, f"SlimFly needs q = 1 mod 4, got {q}")
    return algebra.field_make(*pp)


def _field_tables(f: algebra.Field) -> tuple[np.ndarray, np.ndarray]:
    q = f.q
    add = np.array([[f.add(x, y) for y in range(q)] for x in range(q)], dtype=np.int64)
    mul = np.array([[f.mul(x, y) for y in range(q)] for x in range(q)], dtype=np.int64)
    return add, mul


def slimfly(q: int) -> Graph:
    """SlimFly on ``{0,1} x F_q x F_q`` at index ``(s*q + x)*q + y``.

    Block 0 joins ``y, y'`` when ``y - y'`` is an even power of the primitive
    element, block 1 when it is an odd power; ``(0,x,y) ~ (1,m,c)`` iff
    ``y = m*x + c``. Field elements use the integer encoding of
    :mod:`spectre.algebra`.
    """
    f = _slimfly_field(q)
    _guard(2 * q * q, "SlimFly")
    zeta = algebra.primitive_element(f)
    add, mul = _field_tables(f)
    neg = np.array([f.neg(x) for x in range(q)])
    powers = [f.pow(zeta, i) for i in range(q - 1)]
    even, odd = set(powers[0::2]), set(powers[1::2])

    def idx(s: int, x: int, y: int) -> int:
        return (s * q + x) * q + y

    edges: list[Edge] = []
    for s, diffs in ((0, even), (1, odd)):
        for x in range(q):
            for y in range(q):
                for y2 in range(y + 1, q):
                    if add[y, neg[y2]] in diffs:
                        edges.append((idx(s, x, y), idx(s, x, y2), 1.0))
    for x in range(q):
        for m in range(q):
            for c in range(q):
                y = add[mul[m, x], c]
                edges.append((idx(0, x, int(y)), idx(1, m, c), 1.0))
    return Graph(2 * q * q, tuple(edges))


def _slimfly_shift(q: int, f: algebra.Field, delta: int) -> list[int]:
    perm = [0] * (2 * q * q)
    for s in range(2):
        for x in range(q):
            for y in range(q):
                perm[(s * q + x) * q + y] = (s * q + x) * q + f.add(y, delta)
    return perm


def slimfly_shift_automorphism(q: int) -> list[int]:
    """Translation of the last coordinate by the primitive element ``zeta``.

    For prime ``q`` its orbits have size ``q``; for ``q = p**e`` with ``e > 1``
    they only have size ``p`` (use :func:`slimfly_translation_automorphisms`).
    """
    f = _slimfly_field(q)
    return _slimfly_shift(q, f, algebra.primitive_element(f))


def slimfly_translation_automorphisms(q: int) -> list[list[int]]:
    """Translations by ``zeta**0 .. zeta**(e-1)``, which span ``F_q`` additively."""
    f = _slimfly_field(q)
    zeta = algebra.primitive_element(f)
    return [_slimfly_shift(q, f, f.pow(zeta, i)) for i in range(f.e)]


LPS_MAX_VERTICES = 3000


def lps_graph(p: int, q: int) -> Graph:
    """LPS Cayley graph ``X^{p,q}`` on canonical PSL/PGL(2, p) elements (lexicographic order)."""
    gens = algebra.lps_generators(p, q)
    kind = gens.kind
    expected = p * (p * p - 1) // (2 if kind == "PSL" else 1)
    _require(expected <= LPS_MAX_VERTICES, f"X^({p},{q}) has {expected} vertices, above the {LPS_MAX_VERTICES} guard")
    elements = algebra.group_elements(kind, p)
    canon = algebra.canon_psl if kind == "PSL" else algebra.canon_pgl
    return algebra.cayley_graph(elements, gens, lambda x, s: canon(algebra.mat_mul(x, s, p), p))


def fat_tree(levels: int) -> Graph:
    """Complete binary tree with ``levels`` edge levels in heap order.

    An edge from depth ``t`` to depth ``t + 1`` has weight ``2**(levels-1-t)``,
    so leaf edges weigh 1 and capacity doubles toward the root.
    """
    _require(2 <= levels <= 10, f"fat tree levels must be in 2..10, got {levels}")
    n = (1 << (levels + 1)) - 1
    edges: list[Edge] = []
    for v in range(n):
        depth = (v + 1).bit_length() - 1
        for child in (2 * v + 1, 2 * v + 2):
            if child < n:
                edges.append((v, child, float(1 << (levels - 1 - depth))))
    return Graph(n, tuple(edges))


def random_regular(n: int, k: int, seed: int = 0, *, max_tries: int = 10_000) -> Graph:
    """Simple ``k``-regular graph from the pairing model with rejection."""
    _require(n * k % 2 == 0, f"n*k must be even, got n={n}, k={k}")
    _require(0 <= k < n, f"need 0 <= k < n, got n={n}, k={k}")
    _guard(n, "random regular graph")
    rng = np.random.default_rng(seed)
    points = np.repeat(np.arange(n), k)
    for _ in range(max_tries):
        perm = rng.permutation(points)
        pairs = perm.reshape(-1, 2)
        lo, hi = pairs.min(axis=1), pairs.max(axis=1)
        if np.any(lo == hi):
            continue
        if len(set(zip(lo.tolist(), hi.tolist()))) != len(lo):
            continue
        return Graph(n, tuple(sorted((int(u), int(v), 1.0) for u, v in zip(lo, hi))))
    raise TopologyError(f"pairing model found no simple graph in {max_tries} tries")


# -- automorphism fixtures ----------------------------------------------------


def butterfly_automorphisms(k: int, s: int) -> list[list[int]]:
    """Add 1 (mod k) to one coordinate on every layer; one generator per coordinate."""
    ks = k**s
    out = []
    for j in range(s):
        step = k ** (s - 1 - j)
        perm = []
        for i in range(s):
            for a in range(ks):
                digit = (a // step) % k
                perm.append(i * ks + a + (((digit + 1) % k) - digit) * step)
        out.append(perm)
    return out


def data_vortex_automorphisms(A: int, C: int) -> list[list[int]]:
    """Flip one height bit on every vertex; one generator per bit."""
    H = 1 << (C - 1)
    n = A * C * H
    return [[(v // H) * H + ((v % H) ^ (1 << b)) for v in range(n)] for b in range(C - 1)]


def fat_tree_automorphisms(levels: int) -> list[list[int]]:
    """Swap the two subtrees below each internal vertex."""
    n = (1 << (levels + 1)) - 1
    out = []
    for root in range(n):
        if 2 * root + 2 >= n:
            continue
        perm = list(range(n))
        left, right = [2 * root + 1], [2 * root + 2]
        while left[0] < n:
            for x, y in zip(left, right):
                perm[x], perm[y] = y, x
            left = [c for v in left for c in (2 * v + 1, 2 * v + 2)]
            right = [c for v in right for c in (2 * v + 1, 2 * v + 2)]
        out.append(perm)
    return out


def peterson_torus_automorphisms(a: int, b: int) -> list[list[int]]:
    """Unit translations in ``x`` and in ``y``."""
    n = 10 * a * b
    tx = [(((v // 10) // b + 1) % a * b + (v // 10) % b) * 10 + v % 10 for v in range(n)]
    ty = [(((v // 10) // b) * b + ((v // 10) % b + 1) % b) * 10 + v % 10 for v in range(n)]
    return [tx, ty]


# -- spec strings -------------------------------------------------------------

_GRAPH_TOKEN = re.compile(r"^(k|c|p|q)(\d+)$")


def parse_graph_token(token: str) -> Graph:
    """``K<n>``, ``C<n>``, ``P<n>``, ``Q<d>`` or ``petersen``."""
    t = token.strip().lower()
    if t == "petersen":
        return petersen()
    m = _GRAPH_TOKEN.match(t)
    if not m:
        raise TopologyError(f"unknown graph token {token!r} (use K<n>, C<n>, P<n>, Q<d> or petersen)")
    kind, n = m.group(1), int(m.group(2))
    return {"k": complete, "c": cycle, "p": path, "q": hypercube}[kind](n)


def _int(params: dict[str, str], key: str, default: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise TopologyError(f"missing parameter {key!r}")
        return default
    try:
        return int(params[key])
    except ValueError as exc:
        raise TopologyError(f"parameter {key}={params[key]!r} is not an integer") from exc


def _dims(params: dict[str, str]) -> tuple[int, ...]:
    raw = params.get("dims")
    if raw is None:
        raise TopologyError("grid needs dims=k1xk2x...")
    try:
        return tuple(int(x) for x in raw.split("x"))
    except ValueError as exc:
        raise TopologyError(f"bad grid dims {raw!r}") from exc


@dataclass(frozen=True)
class _Family:
    name: str
    keys: tuple[str, ...]
    build: Callable[[dict[str, str]], Graph]
    defaults: dict[str, str] = field(default_factory=dict)


FAMILIES: dict[str, _Family] = {
    f.name: f
    for f in (
        _Family("hypercube", ("d",), lambda p: hypercube(_int(p, "d"))),
        _Family("grid", ("dims",), lambda p: grid(*_dims(p))),
        _Family("torus", ("k", "d"), lambda p: torus(_int(p, "k"), _int(p, "d"))),
        _Family("butterfly", ("k", "s"), lambda p: butterfly(_int(p, "k"), _int(p, "s"))),
        _Family("datavortex", ("a", "c"), lambda p: data_vortex(_int(p, "a"), _int(p, "c"))),
        _Family("cc", ("g", "d"), lambda p: cc(parse_graph_token(p["g"]), _int(p, "d"))),
        _Family("ccc", ("d",), lambda p: ccc(_int(p, "d"))),
        _Family("clex", ("k", "l"), lambda p: clex(_int(p, "k"), _int(p, "l"))),
        _Family("clexgeneral", ("g", "l"), lambda p: clex_general(parse_graph_token(p["g"]), _int(p, "l"))),
        _Family(
            "gconnh",
            ("g", "h", "k"),
            lambda p: g_conn_h(parse_graph_token(p["g"]), parse_graph_token(p["h"]), _int(p, "k")),
            {"k": "1"},
        ),
        _Family("petersontorus", ("a", "b"), lambda p: peterson_torus(_int(p, "a"), _int(p, "b"))),
        _Family("dragonfly", ("h",), lambda p: dragonfly(parse_graph_token(p["h"]))),
        _Family("slimfly", ("q",), lambda p: slimfly(_int(p, "q"))),
        _Family("fattree", ("levels",), lambda p: fat_tree(_int(p, "levels"))),
        _Family("petersen", (), lambda p: petersen()),
        _Family(
            "randomregular",
            ("n", "k", "seed"),
            lambda p: random_regular(_int(p, "n"), _int(p, "k"), _int(p, "seed")),
            {"seed": "0"},
        ),
        _Family("lps", ("p", "q"), lambda p: lps_graph(_int(p, "p"), _int(p, "q"))),
    )
}

_ALIASES = {"dv": "datavortex", "pt": "petersontorus", "df": "dragonfly", "sf": "slimfly", "rr": "randomregular"}


@dataclass(frozen=True)
class TopologySpec:
    """A family name plus string-valued parameters, e.g. ``torus:k=4,d=2``."""

    family: str
    params: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        fam = _ALIASES.get(self.family.lower(), self.family.lower())
        if fam not in FAMILIES:
            raise TopologyError(f"unknown family {self.family!r}; known: {', '.join(sorted(FAMILIES))}")
        spec = FAMILIES[fam]
        given = {k.lower(): v.strip() for k, v in self.params}
        unknown = set(given) - set(spec.keys)
        if unknown:
            raise TopologyError(f"unknown parameter(s) {sorted(unknown)} for {fam}; expected {list(spec.keys)}")
        merged = {**spec.defaults, **given}
        missing = [k for k in spec.keys if k not in merged]
        if missing:
            raise TopologyError(f"{fam} is missing parameter(s) {missing}")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "params", tuple((k, merged[k]) for k in spec.keys))

    @property
    def param_dict(self) -> dict[str, str]:
        return dict(self.params)

    def get_int(self, key: str) -> int:
        return _int(self.param_dict, key)

    def to_string(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:" + ",".join(f"{k}={v}" for k, v in self.params)

    def params_string(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)

    def build(self) -> Graph:
        return FAMILIES[self.family].build(self.param_dict)

    def __str__(self) -> str:
        return self.to_string()


def parse_spec(text: str) -> TopologySpec:
    """Parse ``family:key=value,key=value`` (family and keys are case-insensitive)."""
    text = text.strip()
    if not text:
        raise TopologyError("empty topology spec")
    fam, _, rest = text.partition(":")
    params = []
    if rest.strip():
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if not eq or not key.strip() or not value.strip():
                raise TopologyError(f"malformed parameter {item!r} in {text!r}")
            params.append((key.strip().lower(), value.strip()))
    return TopologySpec(fam.strip(), tuple(params))
