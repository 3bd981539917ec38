"""Seeded random instances for property suites and the ``gen`` command."""

from __future__ import annotations

import numpy as np

from .errors import GenerationFailed, InputError
from .hypergraph import (
    OrientedHypergraph,
    check_degree_assumption,
    is_connected,
)

MAX_ATTEMPTS = 1000


def _rng(seed_or_rng) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def random_uniform(n: int, k: int, m: int, seed=None) -> OrientedHypergraph:
    """``m`` edges drawn independently and uniformly from the k-subsets.

    Duplicate edges are possible.
    """
    if not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got k={k}, n={n}")
    if m < 1:
        raise InputError("need at least one edge")
    rng = _rng(seed)
    edges = [sorted(int(v) for v in rng.choice(n, size=k, replace=False)) for _ in range(m)]
    return OrientedHypergraph.build(n, edges)


def random_connected_uniform(
    n: int, k: int, m: int, seed=None, assumption: bool = False
) -> OrientedHypergraph:
    """Rejection-sample :func:`random_uniform` until connected.

    With ``assumption=True`` also require that no degree exceeds the sum of
    the others.
    """
    rng = _rng(seed)
    for _ in range(MAX_ATTEMPTS):
        g = random_uniform(n, k, m, rng)
        if is_connected(g) and (not assumption or check_degree_assumption(g)):
            return g
    raise GenerationFailed(f"no connected instance after {MAX_ATTEMPTS} attempts")


def random_simple_graph(n: int, p: float, seed=None) -> OrientedHypergraph:
    """Connected Erdos-Renyi graph without repeated edges, as a 2-uniform hypergraph."""
    rng = _rng(seed)
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    for _ in range(MAX_ATTEMPTS):
        keep = rng.random(len(pairs)) < p
        edges = [list(pair) for pair, chosen in zip(pairs, keep) if chosen]
        if edges:
            g = OrientedHypergraph.build(n, edges)
            if is_connected(g):
                return g
    raise GenerationFailed(f"no connected graph after {MAX_ATTEMPTS} attempts")


def random_regular(n: int, d: int, m: int, seed=None) -> OrientedHypergraph:
    """Connected d-regular hypergraph: every vertex joins ``d`` distinct edges.

    Edges are first dealt round-robin over the vertices so none is empty;
    the remaining memberships are drawn at random. Edge cardinalities vary.
    """
    if not 1 <= d <= m or n * d < n + m - 1:
        # a connected incidence graph needs at least n + m - 1 incidences
        raise InputError(f"need 1 <= d <= m and n*d >= n+m-1, got n={n}, d={d}, m={m}")
    rng = _rng(seed)
    for _ in range(MAX_ATTEMPTS):
        chosen: list[set[int]] = [set() for _ in range(n)]
        for pos, j in enumerate(rng.permutation(m)):
            chosen[pos % n].add(int(j))
        for v in range(n):
            free = [j for j in range(m) if j not in chosen[v]]
            extra = rng.choice(free, size=d - len(chosen[v]), replace=False)
            chosen[v].update(int(j) for j in extra)
        members: list[list[int]] = [[] for _ in range(m)]
        for v in range(n):
            for j in sorted(chosen[v]):
                members[j].append(v)
        g = OrientedHypergraph.build(n, members)
        if is_connected(g):
            return g
    raise GenerationFailed(f"no connected regular instance after {MAX_ATTEMPTS} attempts")


def random_bipartite_signed(n: int, k: int, m: int, seed=None) -> OrientedHypergraph:
    """Signed k-uniform hypergraph that admits a bipartition by construction.

    Vertices get random sides; each edge puts its positive incidences on one
    side and negative ones on the other, with the orientation flipped per
    edge at random.
    """
    rng = _rng(seed)
    side = rng.integers(0, 2, size=n)
    g = random_uniform(n, k, m, rng)
    edges = []
    for edge in g.edges:
        flip = 1 if rng.random() < 0.5 else -1
        edges.append([(v, flip * (1 if side[v] == 0 else -1)) for v, _ in edge])
    return OrientedHypergraph.build(n, edges)
