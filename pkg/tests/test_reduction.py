import json

import numpy as np
import pytest

from spectre import topologies as T
from spectre.reduction import (
    ReductionError,
    check_automorphism,
    load_automorphisms,
    orbits,
    partition_from_labels,
    quotient,
    quotient_spectrum,
    verify_containment,
)
from spectre.spectral import adjacency_spectrum

from conftest import lapack_eigs


def test_orbits_and_relabel():
    part = orbits(6, [[1, 0, 2, 3, 5, 4]])
    assert part.labels == (0, 0, 1, 2, 3, 3) and part.sizes == (2, 1, 1, 2)
    assert partition_from_labels([7, 7, 3, 3, 7]).labels == (0, 0, 1, 1, 0)
    with pytest.raises(ReductionError):
        orbits(3, [[0, 0, 1]])


def test_check_automorphism():
    c5 = T.cycle(5)
    assert check_automorphism(c5, [1, 2, 3, 4, 0])
    assert not check_automorphism(c5, [1, 0, 2, 3, 4])
    assert not check_automorphism(c5, [0, 1, 2])


def test_butterfly_layer_quotient():
    g = T.butterfly(2, 3)
    q = quotient(g, orbits(g.n, T.butterfly_automorphisms(2, 3)))
    assert q.sizes == (8, 8, 8)
    assert np.array_equal(q.weights, 2 * T.cycle(3).adjacency)
    assert verify_containment(quotient_spectrum(q), adjacency_spectrum(g))


@pytest.mark.parametrize("A,C", [(3, 3), (4, 3), (5, 4)])
def test_data_vortex_quotient_is_cycle_times_looped_path(A, C):
    g = T.data_vortex(A, C)
    q = quotient(g, orbits(g.n, T.data_vortex_automorphisms(A, C)))
    assert q.count == A * C
    # orbit (a, c) sits at index a*C + c; in coordinates (a - c mod A, c) it is C_A box P'_C
    box = np.kron(T.cycle(A).adjacency, np.eye(C)) + np.kron(np.eye(A), T.path_looped(C).adjacency)
    relabel = [((a - c) % A) * C + c for a in range(A) for c in range(C)]
    assert np.array_equal(q.weights, box[np.ix_(relabel, relabel)])
    ref = lapack_eigs(box)
    assert np.allclose(quotient_spectrum(q).values, np.sort(ref), atol=1e-9)
    assert verify_containment(quotient_spectrum(q), adjacency_spectrum(g))


@pytest.mark.parametrize("q", [5, 9, 13])
def test_slimfly_quotient(q):
    g = T.slimfly(q)
    part = orbits(g.n, T.slimfly_translation_automorphisms(q))
    quo = quotient(g, part)
    expect = np.zeros((2 * q, 2 * q))
    expect[:q, q:] = expect[q:, :q] = 1
    expect[np.arange(2 * q), np.arange(2 * q)] = (q - 1) / 2
    assert np.array_equal(quo.weights, expect)
    assert verify_containment(quotient_spectrum(quo), adjacency_spectrum(g))


def test_fat_tree_level_weights():
    g = T.fat_tree(4)
    q = quotient(g, orbits(g.n, T.fat_tree_automorphisms(4)))
    assert q.sizes == (1, 2, 4, 8, 16)
    up = [q.weights[i + 1, i] for i in range(4)]
    down = [q.weights[i, i + 1] for i in range(4)]
    assert up == [8, 4, 2, 1] and down == [16, 8, 4, 2]
    assert verify_containment(quotient_spectrum(q), adjacency_spectrum(g))
    assert q.to_edgelist().splitlines()[0] == "5"


def test_non_equitable_partition_raises():
    with pytest.raises(ReductionError):
        quotient(T.path(3), partition_from_labels([0, 0, 1]))
    with pytest.raises(ReductionError):
        quotient(T.path(3), partition_from_labels([0, 1]))


@pytest.mark.parametrize("g_tok,h_tok", [("K5", "K4"), ("K4", "C6"), ("C4", "K4")])
def test_haemers_interlacing_on_copy_partition(g_tok, h_tok):
    base, h = T.parse_graph_token(g_tok), T.parse_graph_token(h_tok)
    g = T.g_conn_h(base, h)
    labels = [v // h.n for v in range(g.n)]
    mu = quotient_spectrum(quotient(g, partition_from_labels(labels), mode="haemers")).descending
    lam = np.sort(lapack_eigs(g.adjacency))[::-1]
    n, m = len(lam), len(mu)
    for i in range(m):
        assert lam[i] + 1e-9 >= mu[i] >= lam[n - m + i] - 1e-9


def test_load_automorphisms():
    g = T.cycle(4)
    assert load_automorphisms(json.dumps([[1, 2, 3, 0]]), g) == [[1, 2, 3, 0]]
    for bad in ("{", "[1]", "[[0, 1, 2]]", "[[1, 0, 2, 3]]", '[[0, 1, 2, "3"]]'):
        with pytest.raises(ReductionError):
            load_automorphisms(bad, g)
