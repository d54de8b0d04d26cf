"""Spectra of grid-like topologies from their factors.

Tori, grids and hypercubes are Cartesian products of cycles and paths, so
their adjacency spectra are sums of factor eigenvalues. This walk-through
checks that law numerically and reads off algebraic connectivity.

Run with ``python3 demos/01_products_and_spectra.py``.
"""

import math

import numpy as np

from spectre import topologies as T
from spectre.graph import cartesian_product
from spectre.spectral import adjacency_spectrum, algebraic_connectivity

# %% Paths and cycles have cosine spectra
n = 8
print("C_8 eigenvalues:", np.round(adjacency_spectrum(T.cycle(n)).values, 4))
print("closed form    :", np.round(np.sort(2 * np.cos(2 * np.pi * np.arange(n) / n)), 4))

# %% The box product adds eigenvalues pairwise
g, h = T.cycle(5), T.path(4)
pairwise = np.sort(np.add.outer(adjacency_spectrum(g).values, adjacency_spectrum(h).values).ravel())
direct = adjacency_spectrum(cartesian_product(g, h)).values
print("max |pairwise - direct| on C_5 x P_4:", np.abs(pairwise - direct).max())

# %% Algebraic connectivity of the 2-D torus only depends on the side length
for k in (4, 6, 8, 12):
    rho2 = algebraic_connectivity(T.torus(k, 2))
    print(f"torus({k:2d},2): rho2 = {rho2:.6f}   2(1 - cos(2pi/k)) = {2 * (1 - math.cos(2 * math.pi / k)):.6f}")

# %% Hypercubes keep rho2 = 2 as they grow, so rho2 per unit degree shrinks
for d in range(2, 9):
    print(f"Q_{d}: n = {2**d:4d}  rho2 = {algebraic_connectivity(T.hypercube(d)):.6f}  rho2/d = {2 / d:.3f}")
