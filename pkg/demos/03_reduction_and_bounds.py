"""Shrinking symmetric topologies to small quotients, then comparing bounds.

Collapsing automorphism orbits gives a small weighted graph whose
eigenvalues all occur in the parent spectrum. The last part prints closed
form bounds rows and the exact widths they should dominate.

Run with ``python3 demos/03_reduction_and_bounds.py``.
"""

import numpy as np

from spectre import bounds as B
from spectre import topologies as T
from spectre.metrics import bisection_exact
from spectre.reduction import orbits, quotient, quotient_spectrum, verify_containment
from spectre.spectral import adjacency_spectrum

# %% Fat tree: orbits are the levels, weights double toward the root
g = T.fat_tree(4)
q = quotient(g, orbits(g.n, T.fat_tree_automorphisms(4)))
print("fat-tree orbit sizes:", q.sizes)
print(q.weights.astype(int))
print("quotient spectrum contained:", verify_containment(quotient_spectrum(q), adjacency_spectrum(g)))

# %% SlimFly: 2q^2 routers collapse to K_(q,q) with (q-1)/2 loops
g = T.slimfly(5)
q = quotient(g, orbits(g.n, T.slimfly_translation_automorphisms(5)))
print("slimfly(5) quotient diagonal:", np.diag(q.weights))
print("slimfly(5) quotient eigenvalues:", np.round(quotient_spectrum(q).values, 4))

# %% Bounds rows next to exact bisection widths on small instances
for spec in ["hypercube:d=4", "clex:k=3,l=2", "dragonfly:h=K4", "torus:k=4,d=2", "torus:k=3,d=2"]:
    row = B.table_row(spec)
    exact = bisection_exact(T.parse_spec(spec).build()).cut
    flag = "" if exact <= row.bw_upper else "   <- exceeds the closed form (odd k)"
    print(f"{spec:16s} BW exact {exact:5.1f}  upper {row.bw_upper:6.2f}  Ramanujan floor {row.ramanujan_bw_lower:6.2f}{flag}")

# %% Proportional bandwidth at radix <= 64 for the largest point of each family
largest = {}
for row in B.sweep(max_radix=64):
    fam = row.spec.family
    if fam not in largest or row.nodes > largest[fam].nodes:
        largest[fam] = row
for fam, row in sorted(largest.items()):
    print(f"{fam:14s} {row.spec.params_string():16s} n {row.nodes:6d}  prop BW {row.prop_bw_upper:.4f}  Ramanujan {row.ramanujan_prop_bw_lower:.4f}")
