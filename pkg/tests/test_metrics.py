import math
from fractions import Fraction
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectre import topologies as T
from spectre.graph import GraphError, new_graph
from spectre.metrics import (
    bisection_exact,
    bisection_fiedler,
    cut_weight,
    diameter,
    is_bipartite,
    is_connected,
    vertex_iso_number,
)
from spectre.spectral import algebraic_connectivity, fiedler_bw_lower, lambda2_upper_from_h, spectral_report, tanner_iso_lower

from conftest import brute_bisection, milp_bisection, to_nx


def brute_iso(g):
    best = None
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    for size in range(1, g.n // 2 + 1):
        for xs in itertools.combinations(range(g.n), size):
            xset = set(xs)
            bd = set().union(*(nbrs[v] for v in xs)) - xset
            r = Fraction(len(bd), size)
            best = r if best is None or r < best else best
    return best


@pytest.mark.parametrize(
    "g,expected",
    [(T.hypercube(3), 4), (T.petersen(), 5), (T.hypercube(4), 8), (T.complete(4), 4), (T.complete(5), 6)],
)
def test_bisection_known_values(g, expected):
    assert bisection_exact(g).cut == expected


@pytest.mark.parametrize(
    "g,expected",
    [(T.complete(4), Fraction(1)), (T.cycle(6), Fraction(2, 3)), (T.petersen(), Fraction(4, 5)),
     (T.hypercube(4), Fraction(3, 4))],
)
def test_iso_known_values(g, expected):
    assert vertex_iso_number(g).ratio == expected


random_graphs = st.integers(2, 10).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, 3)),
            max_size=25,
        ),
    )
)


@settings(max_examples=60, deadline=None)
@given(random_graphs)
def test_bisection_matches_brute_force(data):
    g = new_graph(*data)
    r = bisection_exact(g)
    assert r.cut == brute_bisection(g)
    assert cut_weight(g, r.side) == r.cut
    assert abs(2 * len(r.side) - g.n) <= 1 and 0 in r.side


@settings(max_examples=40, deadline=None)
@given(random_graphs)
def test_bisection_sandwich(data):
    g = new_graph(*data)
    if not is_connected(g):
        return
    rho2 = algebraic_connectivity(g)
    exact = bisection_exact(g).cut
    # rho2 * |S| * |V-S| / n is the general form; it reduces to rho2 * n / 4 for even n
    lower = rho2 * (g.n // 2) * ((g.n + 1) // 2) / g.n
    assert lower - 1e-9 <= exact <= bisection_fiedler(g).cut + 1e-9
    if g.n % 2 == 0:
        assert fiedler_bw_lower(rho2, g.n) - 1e-9 <= exact


def test_quarter_n_form_can_fail_for_odd_n():
    # weighted triangle-minus-edge: cutting off vertex 2 costs 1 < rho2 * 3 / 4
    g = new_graph(3, [(0, 1, 3), (0, 2, 1)])
    rho2 = algebraic_connectivity(g)
    assert bisection_exact(g).cut == 1
    assert fiedler_bw_lower(rho2, 3) > 1
    assert rho2 * 2 / 3 <= 1 + 1e-9


@settings(max_examples=40, deadline=None)
@given(random_graphs)
def test_iso_matches_brute_force(data):
    g = new_graph(*[data[0], [(u, v, 1) for u, v, _ in data[1]]])
    assert vertex_iso_number(g).ratio == brute_iso(g)


@settings(max_examples=40, deadline=None)
@given(random_graphs)
def test_bfs_facts_match_networkx(data):
    g = new_graph(*data)
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert is_bipartite(g) == nx.is_bipartite(h)
    if nx.is_connected(h):
        assert diameter(g) == nx.diameter(h)
    else:
        assert diameter(g) == math.inf


def test_strict_bipartite_rejects_loops():
    g = new_graph(2, [(0, 1), (0, 0)])
    assert is_bipartite(g) and not is_bipartite(g, strict=True)


def test_size_guards():
    with pytest.raises(GraphError):
        bisection_exact(T.cycle(25))
    with pytest.raises(GraphError):
        vertex_iso_number(T.cycle(17))
    with pytest.raises(GraphError):
        bisection_exact(T.path(1))


def test_tanner_and_lambda_from_h(small_regular):
    _, g = small_regular
    if g.n > 16:
        pytest.skip("isoperimetric scan limited to 16 vertices")
    r = spectral_report(g)
    h = vertex_iso_number(g).value
    assert tanner_iso_lower(r.degree_max, r.lambda2) <= h + 1e-9
    assert r.lambda2 <= lambda2_upper_from_h(r.degree_max, h) + 1e-9


def test_data_vortex_two_cylinders_exceed_table_bw():
    # C = 2 with odd A is outside the C >= 3 range the table covers
    assert bisection_exact(T.data_vortex(3, 2)).cut == 4 > 3
    assert bisection_exact(T.data_vortex(5, 2)).cut == 6 > 5


@pytest.mark.slow
@pytest.mark.parametrize("A,C", [(3, 3), (4, 3), (5, 3)])
def test_data_vortex_bw_meets_table_value(A, C):
    assert milp_bisection(T.data_vortex(A, C)) == A * 2 ** (C - 2)


def test_milp_oracle_agrees_with_enumeration():
    for g in (T.petersen(), T.hypercube(4), T.butterfly(2, 3)):
        assert milp_bisection(g) == bisection_exact(g).cut


@pytest.mark.parametrize("k,d,bw", [(3, 2, 8), (5, 2, 12), (7, 2, 16), (3, 3, 26), (4, 2, 8), (6, 2, 12)])
def test_torus_bisection_values(k, d, bw):
    # MILP values frozen from HiGHS runs; odd k exceeds 2 k^(d-1), even k meets it
    g = T.torus(k, d)
    got = bisection_exact(g).cut if g.n <= 24 else milp_bisection(g)
    assert got == bw
