"""Adjacency, normalized Laplacian and spectra of oriented hypergraphs.

The spectrum of ``L = I - D^{-1} A`` is obtained from the similar symmetric
matrix ``I - D^{-1/2} A D^{-1/2}`` with a cyclic Jacobi solver, so results
are bit-reproducible for identical input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotConnected, NotUniform, ZeroFunction
from .hypergraph import (
    HypergraphLike,
    as_oriented,
    classical,
    connected_components,
)

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 64
DEGENERACY_TOL = 1e-9


def adjacency_matrix(g: HypergraphLike) -> np.ndarray:
    """Integer matrix of (#anti-oriented) - (#co-oriented) edges per pair."""
    g = as_oriented(g)
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for edge in g.edges:
        idx = np.fromiter((v for v, _ in edge), dtype=np.int64, count=len(edge))
        sgn = np.fromiter((s for _, s in edge), dtype=np.int64, count=len(edge))
        a[np.ix_(idx, idx)] -= np.outer(sgn, sgn)
    np.fill_diagonal(a, 0)
    return a


@dataclass(frozen=True)
class NormalizedLaplacian:
    matrix: np.ndarray
    degrees: np.ndarray


def normalized_laplacian(g: HypergraphLike) -> NormalizedLaplacian:
    g = as_oriented(g)
    g.require_no_isolated()
    deg = np.asarray(g.degrees, dtype=float)
    lap = np.eye(g.n) - adjacency_matrix(g) / deg[:, None]
    return NormalizedLaplacian(lap, deg)


def jacobi_eigh(a, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.

    Pairs ``(p, q)`` are visited row-major over the upper triangle. Iteration
    stops once the off-diagonal Frobenius norm drops to ``tol`` times the
    Frobenius norm of the input.

    Returns ascending eigenvalues and the matching orthonormal eigenvectors as
    columns.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        a = 0.5 * (a + a.T)
    v = np.eye(n)
    threshold = tol * np.linalg.norm(a)
    upper = np.triu_indices(n, 1)

    def off_norm():
        return math.sqrt(2.0) * float(np.linalg.norm(a[upper]))

    for _ in range(max_sweeps):
        if off_norm() <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                g = 100.0 * abs(apq)
                if abs(a[p, p]) + g == abs(a[p, p]) and abs(a[q, q]) + g == abs(a[q, q]):
                    # below the rounding level of both diagonal entries
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        if off_norm() > threshold:
            raise NoConvergence(f"Jacobi did not converge within {max_sweeps} sweeps")

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order]


def _fix_sign(f: np.ndarray) -> np.ndarray:
    # largest |entry| positive; argmax picks the smallest index on ties
    pivot = int(np.argmax(np.abs(f)))
    return -f if f[pivot] < 0 else f


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues of ``L`` with eigenfunctions as columns.

    Each eigenfunction ``f`` has ``sum_v deg(v) f(v)^2 == 1`` and its largest
    entry in absolute value is positive.
    """

    values: np.ndarray
    functions: np.ndarray
    degrees: np.ndarray

    def __len__(self):
        return len(self.values)

    def function(self, i: int) -> np.ndarray:
        return self.functions[:, i]

    def multiplicity(self, value: float, tol: float = DEGENERACY_TOL) -> int:
        return int(np.sum(np.abs(self.values - value) <= tol))


def symmetric_laplacian(g: HypergraphLike) -> np.ndarray:
    g = as_oriented(g)
    g.require_no_isolated()
    inv_sqrt = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    return np.eye(g.n) - adjacency_matrix(g) * np.outer(inv_sqrt, inv_sqrt)


def spectrum(g: HypergraphLike) -> Spectrum:
    g = as_oriented(g)
    sym = symmetric_laplacian(g)
    values, vectors = jacobi_eigh(sym)
    deg = np.asarray(g.degrees, dtype=float)
    funcs = vectors / np.sqrt(deg)[:, None]
    funcs = np.column_stack([_fix_sign(funcs[:, i]) for i in range(g.n)])
    return Spectrum(values, funcs, deg)


def rayleigh_quotient(g: HypergraphLike, f) -> float:
    view = classical(g)
    view.graph.require_no_isolated()
    f = np.asarray(f, dtype=float)
    deg = np.asarray(view.degrees, dtype=float)
    denom = float(np.dot(deg, f * f))
    if denom == 0.0:
        raise ZeroFunction("Rayleigh quotient of the zero function")
    numer = sum(sum(f[v] for v, _ in edge) ** 2 for edge in view.edges)
    return float(numer) / denom


@dataclass(frozen=True)
class Eigenpair:
    value: float
    function: np.ndarray
    multiplicity: int


def _require_connected_uniform(g: HypergraphLike):
    view = classical(g)
    if view.k is None:
        raise NotUniform("hypergraph is not uniform")
    comps = connected_components(view)
    if len(comps) != 1:
        raise NotConnected(f"hypergraph has {len(comps)} connected components")
    view.graph.require_no_isolated()
    return view


def second_largest_eigenpair(g: HypergraphLike, spec: Spectrum | None = None) -> Eigenpair:
    """``lambda_{n-1}`` and its eigenfunction for a connected uniform hypergraph.

    Under multiplicity the solver's eigenvector at position ``n-2`` is used;
    the multiplicity is reported so callers know the cut may not be unique.
    """
    view = _require_connected_uniform(g)
    if view.n < 2:
        raise NotConnected("need at least two vertices")
    spec = spec if spec is not None else spectrum(view)
    lam = float(spec.values[-2])
    return Eigenpair(lam, spec.function(view.n - 2).copy(), spec.multiplicity(lam))


def project_out_constants(f, degrees) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    deg = np.asarray(degrees, dtype=float)
    return f - np.dot(deg, f) / deg.sum()


@dataclass(frozen=True)
class VariationalReport:
    lambda_second: float
    max_quotient: float
    trials: int
    holds: bool


def verify_variational_bound(
    g: HypergraphLike, trials: int = 100, seed: int = 0, tol: float = 1e-9
) -> VariationalReport:
    """Check that no random degree-orthogonal function beats ``lambda_{n-1}``."""
    view = _require_connected_uniform(g)
    lam = second_largest_eigenpair(view).value
    rng = np.random.default_rng(seed)
    best = -math.inf
    for _ in range(trials):
        f = project_out_constants(rng.standard_normal(view.n), view.degrees)
        if not np.any(np.abs(f) > 1e-12):
            continue
        best = max(best, rayleigh_quotient(view, f))
    return VariationalReport(lam, best, trials, best <= lam + tol)


def graph_laplacian_lambda2(n: int, edges) -> float:
    """Second smallest eigenvalue of ``I - D^{-1} A`` for a simple graph.

    Builds the 0/1 adjacency directly from the edge list and uses LAPACK;
    shares no code with :func:`spectrum`.
    """
    a01 = np.zeros((n, n))
    for u, w in edges:
        a01[u, w] = a01[w, u] = 1.0
    deg = a01.sum(axis=1)
    values = np.sort(np.linalg.eigvals(np.eye(n) - a01 / deg[:, None]).real)
    return float(values[1])
