"""Brute-force reference computations used by the tests.

None of these import the code paths they check: cut values come from plain
set arithmetic over edge lists, spectra from exact characteristic
polynomials or LAPACK.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np
import sympy


def edge_sets(g):
    return [frozenset(v for v, _ in e) for e in g.edges]


def degrees_of(n, edges):
    deg = [0] * n
    for e in edges:
        for v in e:
            deg[v] += 1
    return deg


def h_of_subset(n, edges, subset, k):
    s = set(subset)
    deg = degrees_of(n, edges)
    numer = 0
    for e in edges:
        r = len(e & s)
        numer += r * (k - r)
    vol = sum(deg[v] for v in s)
    return Fraction(numer, min(vol, sum(deg) - vol))


def brute_cheeger(n, edges, k):
    """Minimum of h(S) over every nonempty proper subset, with all minimizers."""
    best = None
    argmins = []
    for size in range(1, n):
        for subset in combinations(range(n), size):
            value = h_of_subset(n, edges, subset, k)
            if best is None or value < best:
                best, argmins = value, [subset]
            elif value == best:
                argmins.append(subset)
    return best, argmins


def polya_szego(n, pairs):
    """Graph isoperimetric constant: crossing edges over the smaller volume."""
    deg = degrees_of(n, [set(p) for p in pairs])
    total = sum(deg)
    best = None
    for mask in range(1, (1 << n) - 1):
        crossing = sum(1 for u, w in pairs if (mask >> u & 1) != (mask >> w & 1))
        vol = sum(deg[v] for v in range(n) if mask >> v & 1)
        value = Fraction(crossing, min(vol, total - vol))
        best = value if best is None or value < best else best
    return best


def graph_lambda2(n, pairs):
    """Second smallest eigenvalue of I - D^-1 A for a 0/1 adjacency."""
    a = np.zeros((n, n))
    for u, w in pairs:
        a[u, w] = a[w, u] = 1
    values = np.linalg.eigvals(np.eye(n) - a / a.sum(axis=1)[:, None])
    return float(np.sort(values.real)[1])


def laplacian_exact(g):
    """L = I - D^-1 A as an exact rational sympy matrix, built from the definition."""
    n = g.n
    deg = [0] * n
    a = [[0] * n for _ in range(n)]
    for e in g.edges:
        for v, _ in e:
            deg[v] += 1
        for (v, s), (w, t) in combinations(e, 2):
            a[v][w] += 1 if s != t else -1
            a[w][v] += 1 if s != t else -1
    return sympy.Matrix(
        n, n, lambda i, j: (1 if i == j else 0) - sympy.Rational(a[i][j], deg[i])
    )


def charpoly_eigenvalues(g):
    """Real roots of det(xI - L), each isolated to a bracketing interval."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(laplacian_exact(g).charpoly(x).as_expr(), x)
    return sorted(float(r.evalf(30)) for r in sympy.real_roots(poly))


def vertex_cheeger_brute(g):
    """h_* of a d-regular hypergraph by enumerating edge subsets F."""
    d = g.degrees[0]
    m = g.m
    members = [set(v for v, _ in e) for e in g.edges]
    total = sum(len(e) for e in members)
    best = None
    for size in range(1, m):
        for chosen in combinations(range(m), size):
            in_f = [0] * g.n
            for j in chosen:
                for v in members[j]:
                    in_f[v] += 1
            numer = sum(r * (d - r) for r in in_f)
            vol = sum(len(members[j]) for j in chosen)
            value = Fraction(numer, min(vol, total - vol))
            best = value if best is None or value < best else best
    return best
