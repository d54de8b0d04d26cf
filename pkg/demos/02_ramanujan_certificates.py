"""Certifying LPS Cayley graphs as Ramanujan.

Builds X^{p,q} from PGL/PSL(2, p) and the q + 1 quaternion generators,
then compares the largest nontrivial eigenvalue with 2 sqrt(q). Also spot
checks the edge-discrepancy inequality on random vertex sets.

Run with ``python3 demos/02_ramanujan_certificates.py``.
"""

import numpy as np

from spectre import algebra
from spectre import topologies as T
from spectre.graph import degree_profile
from spectre.metrics import is_bipartite
from spectre.spectral import discrepancy_check, lambda_nontrivial, ramanujan_bound

# %% Generators: q + 1 solutions of a0^2 + a1^2 + a2^2 + a3^2 = q
print("solutions for q = 13:", len(algebra.sum_of_squares_solutions(13)))

# %% Two certificates. Legendre (q/p) picks the group and hence bipartiteness.
for p, q in [(5, 13), (13, 17)]:
    g = T.lps_graph(p, q)
    k = degree_profile(g).regularity
    lam = lambda_nontrivial(g)
    print(
        f"X^({p},{q}): {algebra.lps_group_kind(p, q)}, n = {g.n}, k = {k:.0f}, "
        f"bipartite = {is_bipartite(g)}, lambda = {lam:.4f} <= {ramanujan_bound(k):.4f}"
    )

# %% Discrepancy: edges between random sets stay close to k|X||Y|/n
g = T.lps_graph(5, 13)
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(200):
    xs = np.flatnonzero(rng.random(g.n) < 0.3)
    ys = np.flatnonzero(rng.random(g.n) < 0.6)
    r = discrepancy_check(g, xs, ys)
    worst = max(worst, r.deviation / r.bound)
print(f"largest deviation/bound ratio over 200 random pairs: {worst:.3f}")
