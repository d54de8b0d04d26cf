import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectre import topologies as T
from spectre.graph import canonical, degree_profile
from spectre.metrics import diameter, is_bipartite, is_connected
from spectre.reduction import check_automorphism
from spectre.spectral import adjacency_spectrum, algebraic_connectivity

from conftest import lapack_eigs, to_nx


def iso(g, ref):
    return nx.is_isomorphic(to_nx(g), ref, edge_match=lambda a, b: a["weight"] == b.get("weight", 1))


def test_networkx_isomorphisms():
    assert iso(T.hypercube(4), nx.hypercube_graph(4))
    assert iso(T.petersen(), nx.petersen_graph())
    assert iso(T.torus(5, 2), nx.grid_graph([5, 5], periodic=True))
    assert iso(T.grid(3, 4), nx.grid_graph([4, 3]))
    assert iso(T.complete(6), nx.complete_graph(6))
    assert iso(T.cycle(7), nx.cycle_graph(7))


@pytest.mark.parametrize("n", [1, 2, 5, 17, 64])
def test_path_and_cycle_closed_forms(n):
    j = np.arange(1, n + 1)
    assert np.allclose(adjacency_spectrum(T.path(n)).values, np.sort(2 * np.cos(np.pi * j / (n + 1))), atol=1e-9)
    j0 = np.arange(n)
    assert np.allclose(adjacency_spectrum(T.path_looped(n)).values, np.sort(2 * np.cos(np.pi * j0 / n)), atol=1e-9)
    if n >= 3:
        assert np.allclose(adjacency_spectrum(T.cycle(n)).values, np.sort(2 * np.cos(2 * np.pi * j0 / n)), atol=1e-9)


def test_constraints():
    for bad in (lambda: T.torus(2, 2), lambda: T.hypercube(0), lambda: T.butterfly(1, 3),
                lambda: T.data_vortex(2, 3), lambda: T.ccc(2), lambda: T.slimfly(7),
                lambda: T.slimfly(21), lambda: T.peterson_torus(2, 2), lambda: T.random_regular(5, 3),
                lambda: T.g_conn_h(T.complete(4), T.cycle(4))):
        with pytest.raises(T.TopologyError):
            bad()


def test_butterfly_shape():
    g = T.butterfly(2, 3)
    assert g.n == 24 and degree_profile(g).regularity == 4 and is_connected(g)
    assert degree_profile(T.butterfly(3, 3)).regularity == 6


def test_data_vortex_shape():
    raw = T.data_vortex(4, 3, loops=False)
    prof = degree_profile(raw)
    assert raw.n == 48 and prof.min == 3 and prof.max == 4
    g = T.data_vortex(4, 3)
    assert degree_profile(g).regularity == 4
    # inner and outer rings carry the unit padding loops
    loops = {u for u, v, _ in g.edges if u == v}
    assert all(((u // 4) % 3) in (0, 2) for u in loops)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_ccc_factor_oracle(d):
    g = T.ccc(d)
    assert g.n == d * 2**d and degree_profile(g).regularity == 3
    spec = T.cc_spectrum_via_factors(T.cycle(d), d, owner=lambda j: j)
    assert spec.matches(lapack_eigs(g.adjacency))
    lam2 = np.sort(lapack_eigs(g.adjacency))[-2]
    assert lam2 == pytest.approx(lapack_eigs(T.ccc_signed_loop_matrix(d)).max(), abs=1e-8)


def test_cc_general_owner_oracle():
    g = T.cc(T.complete(3), 4)
    spec = T.cc_spectrum_via_factors(T.complete(3), 4)
    assert spec.matches(lapack_eigs(g.adjacency))


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_clex_m_spectrum(k):
    assert T.clex_m_spectrum(k).matches(lapack_eigs(T.clex_m_matrix(k)), tol=1e-8)


@pytest.mark.parametrize("k,ell", [(3, 2), (4, 2), (3, 3)])
def test_clex_diameter_and_regularity(k, ell):
    g = T.clex(k, ell)
    assert degree_profile(g).regularity == (k - 1) + 2 * k * (ell - 1)
    assert diameter(g) == ell
    assert nx.diameter(to_nx(g)) == ell


def test_clex_general_on_cycle_base():
    g = T.clex_general(T.cycle(4), 2)
    assert degree_profile(g).regularity == 2 + 8


def test_g_conn_h_properties():
    g = T.g_conn_h(T.complete(5), T.complete(4))
    assert g.n == 20 and degree_profile(g).regularity == 4
    g2 = T.g_conn_h(T.hypercube(3), T.cycle(3), slot=T.hypercube_slot)
    assert g2.n == 24 and degree_profile(g2).regularity == 3
    k2 = T.g_conn_h(T.complete(4), T.cycle(6), k=2)
    assert degree_profile(k2).regularity == 4


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dragonfly_equals_gconnh_of_complete(n):
    h = T.complete(n)
    assert canonical(T.dragonfly(h)) == canonical(T.g_conn_h(T.complete(n + 1), h))


def test_peterson_torus():
    g = T.peterson_torus(3, 3)
    assert g.n == 90 and degree_profile(g).regularity == 4 and is_connected(g)
    for p in T.peterson_torus_automorphisms(3, 3):
        assert check_automorphism(g, p)


@pytest.mark.parametrize("q", [5, 9, 13])
def test_slimfly(q):
    g = T.slimfly(q)
    assert g.n == 2 * q * q and degree_profile(g).regularity == (3 * q - 1) // 2
    assert algebraic_connectivity(g) == pytest.approx(q, abs=1e-6)
    for p in T.slimfly_translation_automorphisms(q):
        assert check_automorphism(g, p)


def test_slimfly_single_shift_orbits_for_prime_power():
    from spectre.reduction import orbits

    assert set(orbits(2 * 25, [T.slimfly_shift_automorphism(5)]).sizes) == {5}
    assert set(orbits(2 * 81, [T.slimfly_shift_automorphism(9)]).sizes) == {3}


def test_lps_graph():
    g = T.lps_graph(5, 13)
    assert g.n == 120 and degree_profile(g).regularity == 14 and is_bipartite(g)


def test_fat_tree():
    g = T.fat_tree(4)
    assert g.n == 31 and g.m == 30
    weights = sorted({w for *_, w in g.edges})
    assert weights == [1, 2, 4, 8]
    for p in T.fat_tree_automorphisms(4):
        assert check_automorphism(g, p)


def test_automorphism_fixtures():
    for p in T.butterfly_automorphisms(2, 3):
        assert check_automorphism(T.butterfly(2, 3), p)
    for p in T.data_vortex_automorphisms(4, 3):
        assert check_automorphism(T.data_vortex(4, 3), p)


def test_random_regular_is_seeded():
    a, b = T.random_regular(20, 3, seed=4), T.random_regular(20, 3, seed=4)
    assert a == b and degree_profile(a).regularity == 3
    assert max(w for *_, w in a.edges) == 1


def test_spec_parsing():
    s = T.parse_spec("TORUS: k=4, d=2")
    assert s.to_string() == "torus:k=4,d=2" and s.get_int("k") == 4
    assert T.parse_spec("dv:a=4,c=3").family == "datavortex"
    assert T.parse_spec("gconnh:g=K5,h=K4").param_dict["k"] == "1"
    assert T.parse_spec("petersen").build().n == 10
    for bad in ("", "nope:x=1", "torus:k=4", "torus:k=4,d=2,z=1", "torus:k"):
        with pytest.raises(T.TopologyError):
            T.parse_spec(bad)
    with pytest.raises(T.TopologyError):
        T.parse_graph_token("X9")


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 8), st.integers(1, 3))
def test_torus_rho2_closed_form(k, d):
    if k**d > 512:
        return
    assert algebraic_connectivity(T.torus(k, d)) == pytest.approx(2 * (1 - math.cos(2 * math.pi / k)), abs=1e-8)
