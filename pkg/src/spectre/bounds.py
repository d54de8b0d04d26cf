"""Closed-form per-family bounds with Ramanujan comparison columns.

Every row pairs a family's upper bounds on ``rho2`` and bisection bandwidth
with the floor a Ramanujan graph of the same size and radix would
guarantee: ``rho2 >= k - 2 sqrt(k-1)`` and hence ``BW >= rho2 * n / 4``.
Proportional columns divide bandwidth by the degree sum ``k * n``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import algebra
from .graph import Graph, degree_profile
from .spectral import fiedler_bw_lower
from .topologies import TopologyError, TopologySpec, ccc_signed_loop_matrix, parse_graph_token, parse_spec

__all__ = [
    "ConstraintError",
    "BoundsRow",
    "table_row",
    "gconnh_rho2_upper",
    "gconnh_bw_upper",
    "moore_bound",
    "moore_graph_bw_upper",
    "ramanujan_rho2",
    "ccc_rayleigh_rho2_upper",
    "SWEEP_FAMILIES",
    "sweep",
    "CSV_HEADER",
    "rows_to_csv",
]


class ConstraintError(TopologyError):
    """A parameter choice excluded by the non-degeneracy rules for comparisons."""


@dataclass(frozen=True)
class BoundsRow:
    spec: TopologySpec
    nodes: int
    radix: int
    rho2_upper: float
    bw_upper: float
    ramanujan_rho2: float
    ramanujan_bw_lower: float
    prop_bw_upper: float
    ramanujan_prop_bw_lower: float
    meta: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_string(),
            "family": self.spec.family,
            "nodes": self.nodes,
            "radix": self.radix,
            "rho2_upper": self.rho2_upper,
            "bw_upper": self.bw_upper,
            "ramanujan_rho2": self.ramanujan_rho2,
            "ramanujan_bw_lower": self.ramanujan_bw_lower,
            "prop_bw_upper": self.prop_bw_upper,
            "ramanujan_prop_bw_lower": self.ramanujan_prop_bw_lower,
            "meta": dict(self.meta),
        }


def ramanujan_rho2(k: float) -> float:
    return k - 2.0 * math.sqrt(k - 1)


def gconnh_rho2_upper(lambda2_g: float, d: int, k: int) -> float:
    """``k - k * lambda2(G) / d`` for a ``d``-regular base graph ``G``."""
    return k - k * lambda2_g / d


def gconnh_bw_upper(size_g: int, order_g: int, size_h: int, k: int, bw_g: float, bw_h: float) -> float:
    """``(|G| |H| / (2 ||G||)) * k * BW(G) + BW(H)``."""
    return size_g * size_h / (2 * order_g) * k * bw_g + bw_h


def moore_bound(k: int, d: int) -> int:
    """``1 + k * sum_{i<d} (k-1)**i``."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    return 1 + k * sum((k - 1) ** i for i in range(d))


def moore_graph_bw_upper(q: int, d: int) -> float:
    """Bisection upper bound for a ``q``-regular Moore graph of diameter ``d``."""
    if q < 2 or d < 1:
        raise ValueError("need q >= 2 and d >= 1")
    if q % 2 == 0:
        return q / 2 + (q * q / 4) * (q - 1) ** (d - 1)
    return q + ((q * q - 1) / 4) * (q - 1) ** (d - 1)


def ccc_rayleigh_rho2_upper(d: int) -> float:
    """``3 - R(x)`` with ``x_i = sin(pi i/(d+2))`` and the ``-1`` loop on the first vertex.

    ``R`` is the Rayleigh quotient of the signed-loop cycle, so this is a
    guaranteed upper bound on ``rho2(ccc(d))``.
    """
    x = np.sin(np.pi * np.arange(1, d + 1) / (d + 2))
    a = ccc_signed_loop_matrix(d)
    return float(3.0 - x @ a @ x / (x @ x))


# -- base-graph facts for graph-valued parameters ----------------------------


@dataclass(frozen=True)
class _BaseFacts:
    graph: Graph
    size: int
    order: int
    regularity: int
    lambda2: float
    bw: float


def _base_facts(token: str) -> _BaseFacts:
    """Size, edge count, degree, second eigenvalue and bisection width of a named base graph."""
    g = parse_graph_token(token)
    prof = degree_profile(g)
    if not prof.is_regular:
        raise ConstraintError(f"graph {token} must be regular")
    t = token.strip().lower()
    kind, num = t[0], t[1:]
    n = g.n
    if t == "petersen":
        lam2, bw = 1.0, 5.0
    elif kind == "k":
        lam2 = -1.0 if n >= 2 else 0.0
        bw = float((n // 2) * ((n + 1) // 2))
    elif kind == "c":
        lam2, bw = 2 * math.cos(2 * math.pi / n), 2.0
    elif kind == "q":
        dd = int(num)
        lam2, bw = float(dd - 2), float(2 ** (dd - 1))
    else:  # pragma: no cover - the token grammar only yields regular graphs above
        raise ConstraintError(f"no closed-form facts for {token}")
    return _BaseFacts(g, n, len(g.edges), int(prof.regularity), lam2, bw)


# -- rows ---------------------------------------------------------------------


def _row(spec: TopologySpec, nodes: int, radix: int, rho2: float, bw: float, **meta) -> BoundsRow:
    rr = ramanujan_rho2(radix)
    rbw = fiedler_bw_lower(rr, nodes)
    deg_sum = radix * nodes
    return BoundsRow(spec, nodes, radix, rho2, bw, rr, rbw, bw / deg_sum, rbw / deg_sum, meta)


def _odd_prime_power_1mod4(q: int) -> bool:
    return q % 4 == 1 and algebra.prime_power(q) is not None


def table_row(spec: TopologySpec | str) -> BoundsRow:
    """Closed-form bounds for one instance; raises ConstraintError on excluded parameters."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    fam, p = spec.family, spec.param_dict
    gi = spec.get_int

    if fam == "hypercube":
        d = gi("d")
        if d < 1:
            raise ConstraintError("hypercube requires d >= 1")
        return _row(spec, 2**d, d, 2.0, float(2 ** (d - 1)))

    if fam == "torus":
        k, d = gi("k"), gi("d")
        if k < 3:
            raise ConstraintError(f"torus requires k >= 3 (non-degenerate cycles), got k={k}")
        if d < 1:
            raise ConstraintError("torus requires d >= 1")
        return _row(spec, k**d, 2 * d, 2 * (1 - math.cos(2 * math.pi / k)), float(2 * k ** (d - 1)))

    if fam == "butterfly":
        k, s = gi("k"), gi("s")
        if s < 3:
            raise ConstraintError(f"butterfly requires s >= 3 (at least three switch ranks), got s={s}")
        if k < 2:
            raise ConstraintError("butterfly requires k >= 2")
        rho2 = 2 * k - 2 * k * math.cos(2 * math.pi / s)
        return _row(
            spec, s * k**s, 2 * k, rho2, (k + 1) * k**s / 2,
            table_asymptotic_rho2=4 * math.pi**2 * k / s**2,
        )

    if fam == "ccc":
        d = gi("d")
        if d < 3:
            raise ConstraintError("cube-connected cycles require d >= 3")
        return _row(
            spec, d * 2**d, 3, 2 * (1 - math.cos(math.pi / (d + 2))), float(2 ** (d - 1)),
            rho2_is_asymptotic=True,
            table_cell_rho2=math.pi**2 / (d + 2) ** 2,
            rayleigh_rho2_upper=ccc_rayleigh_rho2_upper(d),
        )

    if fam == "clex":
        k, ell = gi("k"), gi("l")
        if ell < 2 or k < 3:
            raise ConstraintError(f"CLEX requires l >= 2 and k >= 3, got k={k}, l={ell}")
        t = k - 1
        return _row(
            spec, k**ell, t + 2 * k * (ell - 1), float(t + 3 * k - 1), float(k ** (ell + 1)),
            rho2_alt_arithmetic=float(t + 3 * k + 1),
        )

    if fam == "datavortex":
        A, C = gi("a"), gi("c")
        if C < 3:
            raise ConstraintError(f"data vortex requires C >= 3 (at least three cylinders), got C={C}")
        if A < 3:
            raise ConstraintError("data vortex requires A >= 3")
        rho2 = min(2 - 2 * math.cos(math.pi / C), 2 - 2 * math.cos(2 * math.pi / A))
        return _row(
            spec, A * C * 2 ** (C - 1), 4, rho2, float(A * 2 ** (C - 2)),
            table_cell_rho2=float(A * 2 ** (C - 1)),
        )

    if fam == "dragonfly":
        h = _base_facts(p["h"])
        n = h.size
        return _row(
            spec, n * n + n, h.regularity + 1, 1 + 1 / n, ((n + 1) / 2) ** 2 + h.bw,
            rho2_alt_statement=1 + n / (2 * h.order) if h.order else math.inf,
        )

    if fam == "gconnh":
        g, h, k = _base_facts(p["g"]), _base_facts(p["h"]), gi("k")
        if g.regularity < 1 or h.size % g.regularity:
            raise ConstraintError(f"|V(H)| = {h.size} must be a multiple of deg(G) = {g.regularity}")
        return _row(
            spec, g.size * h.size, h.regularity + k,
            gconnh_rho2_upper(g.lambda2, g.regularity, k),
            gconnh_bw_upper(g.size, g.order, h.size, k, g.bw, h.bw),
        )

    if fam == "petersontorus":
        a, b = gi("a"), gi("b")
        if not (a >= b >= 2) or (a % 2 == 0 and b % 2 == 0):
            raise ConstraintError(f"Peterson torus bounds require a >= b >= 2 with a or b odd, got a={a}, b={b}")
        rho2 = (4 - 3 * math.cos(4 * math.pi / a) - math.cos(2 * math.pi / a)) / 5
        return _row(spec, 10 * a * b, 4, rho2, float(6 * b + a * b + 5))

    if fam == "slimfly":
        q = gi("q")
        if not _odd_prime_power_1mod4(q):
            raise ConstraintError(f"SlimFly requires a prime power q = 1 mod 4, got q={q}")
        return _row(spec, 2 * q * q, (3 * q - 1) // 2, float(q), (q**3 + q) / 2)

    raise ConstraintError(f"no closed-form bounds row for family {fam!r}")


# -- sweeps -------------------------------------------------------------------

SWEEP_FAMILIES = (
    "butterfly",
    "ccc",
    "clex",
    "datavortex",
    "dragonfly",
    "hypercube",
    "petersontorus",
    "slimfly",
    "torus",
)


def _grid(family: str, max_radix: int, max_nodes: int) -> Iterator[str]:
    if family == "hypercube":
        d = 1
        while d <= max_radix and 2**d <= max_nodes:
            yield f"hypercube:d={d}"
            d += 1
    elif family == "torus":
        d = 2
        while 2 * d <= max_radix and 3**d <= max_nodes:
            k = 3
            while k**d <= max_nodes:
                yield f"torus:k={k},d={d}"
                k += 1
            d += 1
    elif family == "butterfly":
        k = 2
        while 2 * k <= max_radix and 3 * k**3 <= max_nodes:
            s = 3
            while s * k**s <= max_nodes:
                yield f"butterfly:k={k},s={s}"
                s += 1
            k += 1
    elif family == "ccc":
        d = 3
        while d * 2**d <= max_nodes and max_radix >= 3:
            yield f"ccc:d={d}"
            d += 1
    elif family == "clex":
        k = 3
        while k**2 <= max_nodes and (k - 1) + 2 * k <= max_radix:
            ell = 2
            while k**ell <= max_nodes and (k - 1) + 2 * k * (ell - 1) <= max_radix:
                yield f"clex:k={k},l={ell}"
                ell += 1
            k += 1
    elif family == "datavortex":
        if max_radix >= 4:
            c = 3
            while 3 * c * 2 ** (c - 1) <= max_nodes:
                a = 3
                while a * c * 2 ** (c - 1) <= max_nodes:
                    yield f"datavortex:a={a},c={c}"
                    a += 1
                c += 1
    elif family == "dragonfly":
        n = 2
        while n <= max_radix and n * (n + 1) <= max_nodes:
            yield f"dragonfly:h=K{n}"
            n += 1
    elif family == "petersontorus":
        if max_radix >= 4:
            b = 2
            while 10 * b * b <= max_nodes:
                a = b
                while 10 * a * b <= max_nodes:
                    if a % 2 or b % 2:
                        yield f"petersontorus:a={a},b={b}"
                    a += 1
                b += 1
    elif family == "slimfly":
        q = 5
        while (3 * q - 1) // 2 <= max_radix and 2 * q * q <= max_nodes:
            if _odd_prime_power_1mod4(q):
                yield f"slimfly:q={q}"
            q += 4
    else:
        raise ConstraintError(f"family {family!r} has no sweep grid; choose from {', '.join(SWEEP_FAMILIES)}")


def sweep(families: Iterable[str] | None = None, max_radix: int = 64, max_nodes: int = 100_000) -> list[BoundsRow]:
    """Rows for every admissible parameter point, sorted by (family, nodes, spec)."""
    fams = sorted(set(f.lower() for f in families)) if families else list(SWEEP_FAMILIES)
    rows = []
    for fam in fams:
        for text in _grid(fam, max_radix, max_nodes):
            row = table_row(parse_spec(text))
            if row.radix <= max_radix and row.nodes <= max_nodes:
                rows.append(row)
    rows.sort(key=lambda r: (r.spec.family, r.nodes, r.spec.to_string()))
    return rows


CSV_HEADER = ("family", "params", "nodes", "radix", "rho2_upper", "bw_upper", "prop_bw", "ramanujan_rho2", "ramanujan_prop_bw")


def rows_to_csv(rows: Iterable[BoundsRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([
            r.spec.family, r.spec.params_string(), r.nodes, r.radix,
            repr(r.rho2_upper), repr(r.bw_upper), repr(r.prop_bw_upper),
            repr(r.ramanujan_rho2), repr(r.ramanujan_prop_bw_lower),
        ])
    return buf.getvalue()
