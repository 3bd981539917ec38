"""
Sign and sweep cuts versus exhaustive search
============================================

The eigenfunction of the second largest eigenvalue gives two cheap cuts.
Here we compare them with the exact minimum on random hypergraphs.
"""

import numpy as np

import hypercut as hc
from hypercut.generate import random_connected_uniform

rng = np.random.default_rng(0)

rows = []
for _ in range(20):
    g = random_connected_uniform(9, 3, 10, rng)
    exact = hc.cheeger_exact(g)
    cuts = hc.spectral_cut(g)
    rows.append((float(exact.h), float(cuts.sweep.h), float(cuts.sign.h), exact.gap))

table = np.array(rows)
print("   exact   sweep    sign   k-lambda")
for r in table:
    print("  ".join(f"{x:6.3f}" for x in r))

# {f >= 0} is always a prefix of the descending sweep order, and no cut
# beats the exact minimum
assert np.all(table[:, 0] <= table[:, 1]) and np.all(table[:, 1] <= table[:, 2])

ratio = table[:, 1] / table[:, 0]
print("sweep / exact: mean %.3f, worst %.3f" % (ratio.mean(), ratio.max()))

# both inequalities hold with k = 3
h, gap = table[:, 0], table[:, 3]
print("lower bound holds:", bool(np.all(h**2 / 4 <= gap + 1e-7)))
print("upper bound holds:", bool(np.all(gap <= 4 * h + 1e-7)))
