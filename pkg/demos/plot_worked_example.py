"""
Spectrum and Cheeger constant of a small 3-uniform hypergraph
=============================================================

Six vertices, three edges. The middle vertex of the first edge links it to
the other two, so the natural split is {0, 1, 2} | {3, 4, 5}.
"""

import numpy as np

import hypercut as hc

g = hc.build(6, [[0, 1, 2], [2, 3, 4], [3, 4, 5]])
print("degrees", g.degrees)

# adjacency counts anti-oriented minus co-oriented incidences, so all
# entries are nonpositive for a classical hypergraph
print(hc.adjacency_matrix(g))

# L = I - D^-1 A; row sums equal k for a k-uniform hypergraph
lap = hc.normalized_laplacian(g).matrix
print(lap)
print("row sums", lap.sum(axis=1))

spec = hc.spectrum(g)
print("eigenvalues", np.round(spec.values, 9))

# the top eigenvalue is k with a constant eigenfunction; the interesting
# one sits just below it
pair = hc.second_largest_eigenpair(g)
print("lambda_{n-1} =", pair.value, " (3 + sqrt 3) / 2 =", (3 + np.sqrt(3)) / 2)
print("eigenfunction", np.round(pair.function, 6))

# exhaustive search over all 31 cuts
exact = hc.cheeger_exact(g)
print("h =", exact.h, "witness", exact.witness.members)
print(f"{exact.lower_bound:.4f} <= k - lambda = {exact.gap:.6f} <= {exact.upper_bound:.1f}")
