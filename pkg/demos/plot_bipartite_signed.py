"""
Signed hypergraphs that are secretly unsigned
=============================================

When the vertices split in two so that every edge puts its positive
incidences on one side and its negative ones on the other, flipping the
signs on one side is a diagonal similarity of the Laplacian. The spectrum
does not notice.
"""

import numpy as np

import hypercut as hc
from hypercut.generate import random_bipartite_signed

g = random_bipartite_signed(7, 3, 9, seed=11)
for e in g.edges:
    print(["%d%s" % (v, "+" if s > 0 else "-") for v, s in e])

part = hc.is_bipartite(g)
print("sides", part.first, part.second)

signed = hc.spectrum(g).values
flat = hc.spectrum(hc.positivize(g)).values
print(np.round(signed, 6))
print(np.round(flat, 6))
print("max difference", np.max(np.abs(signed - flat)))

# an anti-oriented triangle admits no such split
odd = hc.build(3, [[(0, 1), (1, -1)], [(1, 1), (2, -1)], [(0, 1), (2, -1)]])
print("odd anti-cycle bipartite?", hc.is_bipartite(odd) is not None)
print(np.round(hc.spectrum(odd).values, 6), "vs", np.round(hc.spectrum(hc.positivize(odd)).values, 6))
