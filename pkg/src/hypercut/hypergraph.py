"""Oriented and classical hypergraphs.

Vertices are the dense indices ``0..n-1``. An edge is a tuple of
``(vertex, sign)`` incidences with ``sign`` in ``{+1, -1}``; edges form an
ordered multiset, so repeated edges are kept.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import (
    DuplicateVertexInEdge,
    EmptyEdge,
    NotClassical,
    VertexOutOfRange,
    ZeroDegreeVertex,
)

Incidence = tuple[int, int]
Edge = tuple[Incidence, ...]


def _normalize_edge(raw, n: int, position: int) -> Edge:
    incidences = []
    for item in raw:
        if isinstance(item, (tuple, list)):
            vertex, sign = item
        else:
            vertex, sign = item, 1
        vertex, sign = int(vertex), int(sign)
        if sign not in (1, -1):
            raise ValueError(f"edge {position}: sign must be +1 or -1, got {sign}")
        if not 0 <= vertex < n:
            raise VertexOutOfRange(f"edge {position}: vertex {vertex} not in [0, {n})")
        incidences.append((vertex, sign))
    if not incidences:
        raise EmptyEdge(f"edge {position} is empty")
    vertices = [v for v, _ in incidences]
    if len(set(vertices)) != len(vertices):
        raise DuplicateVertexInEdge(f"edge {position} repeats a vertex: {vertices}")
    return tuple(incidences)


@dataclass(frozen=True)
class OrientedHypergraph:
    """A vertex count plus an ordered multiset of signed edges.

    Use :meth:`build` (or :func:`build`) rather than the constructor; it
    validates the edges and accepts bare vertex indices as positive
    incidences.
    """

    n: int
    edges: tuple[Edge, ...]
    degrees: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def build(cls, n: int, edges: Iterable) -> "OrientedHypergraph":
        n = int(n)
        if n < 1:
            raise ValueError("a hypergraph needs at least one vertex")
        normalized = tuple(_normalize_edge(e, n, i) for i, e in enumerate(edges))
        degrees = [0] * n
        for edge in normalized:
            for v, _ in edge:
                degrees[v] += 1
        return cls(n, normalized, tuple(degrees))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def cardinalities(self) -> tuple[int, ...]:
        return tuple(len(e) for e in self.edges)

    @property
    def is_classical(self) -> bool:
        return all(s == 1 for e in self.edges for _, s in e)

    def edge_vertices(self, j: int) -> tuple[int, ...]:
        return tuple(v for v, _ in self.edges[j])

    @cached_property
    def incidence(self) -> np.ndarray:
        """Signed ``n x m`` incidence matrix (entries in ``{-1, 0, 1}``)."""
        mat = np.zeros((self.n, self.m), dtype=np.int64)
        for j, edge in enumerate(self.edges):
            for v, s in edge:
                mat[v, j] = s
        return mat

    def canonical_edges(self) -> tuple[Edge, ...]:
        """Edges with incidences sorted by vertex, then the edge list sorted."""
        return tuple(sorted(tuple(sorted(e)) for e in self.edges))

    def same_as(self, other: "OrientedHypergraph") -> bool:
        """Equality up to reordering of the edge multiset."""
        return self.n == other.n and self.canonical_edges() == other.canonical_edges()

    def require_no_isolated(self) -> None:
        isolated = [v for v, d in enumerate(self.degrees) if d == 0]
        if isolated:
            raise ZeroDegreeVertex(f"vertices of degree zero: {isolated}")


def build(n: int, edges: Iterable) -> OrientedHypergraph:
    return OrientedHypergraph.build(n, edges)


@dataclass(frozen=True)
class ClassicalView:
    """A hypergraph certified to carry only positive incidences."""

    graph: OrientedHypergraph
    k: Optional[int]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.graph.degrees

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges


HypergraphLike = Union[OrientedHypergraph, ClassicalView]


def as_oriented(g: HypergraphLike) -> OrientedHypergraph:
    return g.graph if isinstance(g, ClassicalView) else g


def classical(g: HypergraphLike) -> ClassicalView:
    """Certify ``g`` as classical, raising :class:`NotClassical` otherwise."""
    if isinstance(g, ClassicalView):
        return g
    if not g.is_classical:
        raise NotClassical("hypergraph has negative incidences")
    return ClassicalView(g, is_uniform(g))


def is_uniform(g: HypergraphLike) -> Optional[int]:
    sizes = set(as_oriented(g).cardinalities)
    return sizes.pop() if len(sizes) == 1 else None


def is_regular(g: HypergraphLike) -> Optional[int]:
    degrees = set(as_oriented(g).degrees)
    return degrees.pop() if len(degrees) == 1 else None


def connected_components(g: HypergraphLike) -> list[list[int]]:
    """Vertex classes of the shared-edge relation, ordered by smallest vertex.

    Each class is listed in breadth-first discovery order from its smallest
    vertex.
    """
    g = as_oriented(g)
    vertex_edges: list[list[int]] = [[] for _ in range(g.n)]
    for j, edge in enumerate(g.edges):
        for v, _ in edge:
            vertex_edges[v].append(j)
    seen = [False] * g.n
    edge_seen = [False] * g.m
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        order = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for j in vertex_edges[v]:
                if edge_seen[j]:
                    continue
                edge_seen[j] = True
                for w, _ in g.edges[j]:
                    if not seen[w]:
                        seen[w] = True
                        order.append(w)
                        queue.append(w)
        components.append(order)
    return components


def is_connected(g: HypergraphLike) -> bool:
    return len(connected_components(g)) == 1


def check_degree_assumption(g: HypergraphLike) -> bool:
    """True iff no vertex degree exceeds the sum of all the other degrees."""
    degrees = as_oriented(g).degrees
    total = sum(degrees)
    return all(2 * d <= total for d in degrees)


@dataclass(frozen=True)
class DualMapping:
    """The dual hypergraph plus the bijections that relate it to its source.

    Vertex ``i`` of the source becomes dual edge ``vertex_to_dual_edge[i]``;
    edge ``j`` becomes dual vertex ``edge_to_dual_vertex[j]``.
    """

    dual: OrientedHypergraph
    vertex_to_dual_edge: tuple[int, ...]
    edge_to_dual_vertex: tuple[int, ...]

    def dual_vertices_to_edges(self, dual_vertices: Iterable[int]) -> list[int]:
        """Carry a set of dual vertices back to the source edges they stand for."""
        inverse = {dv: j for j, dv in enumerate(self.edge_to_dual_vertex)}
        return sorted(inverse[dv] for dv in dual_vertices)

    def edges_to_dual_vertices(self, edges: Iterable[int]) -> list[int]:
        return sorted(self.edge_to_dual_vertex[j] for j in edges)


def dual(g: HypergraphLike) -> DualMapping:
    view = classical(g)
    view.graph.require_no_isolated()
    src = view.graph
    members: list[list[int]] = [[] for _ in range(src.n)]
    for j, edge in enumerate(src.edges):
        for v, _ in edge:
            members[v].append(j)
    dual_graph = OrientedHypergraph.build(src.m, (sorted(ms) for ms in members))
    return DualMapping(dual_graph, tuple(range(src.n)), tuple(range(src.m)))


def relabel(g: OrientedHypergraph, vertex_map: Sequence[int], edge_map: Sequence[int]):
    """Image of ``g`` under vertex and edge permutations.

    Vertex ``v`` becomes ``vertex_map[v]``; edge ``j`` lands at position
    ``edge_map[j]``.
    """
    edges: list = [None] * g.m
    for j, edge in enumerate(g.edges):
        edges[edge_map[j]] = [(vertex_map[v], s) for v, s in edge]
    return OrientedHypergraph.build(g.n, edges)


@dataclass(frozen=True)
class Bipartition:
    """Side labels (1 or 2) for each vertex; either side may be empty."""

    side: tuple[int, ...]

    @property
    def first(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == 1]

    @property
    def second(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == 2]

    def is_valid_for(self, g: HypergraphLike) -> bool:
        for edge in as_oriented(g).edges:
            pos = {self.side[v] for v, s in edge if s == 1}
            neg = {self.side[v] for v, s in edge if s == -1}
            if len(pos) > 1 or len(neg) > 1 or (pos and pos == neg):
                return False
        return True


def is_bipartite(g: HypergraphLike) -> Optional[Bipartition]:
    """Two-colour vertices so each edge's signs split cleanly, or ``None``.

    Co-oriented vertices of an edge must share a side and anti-oriented ones
    must not. Unconstrained vertices land on side 1.
    """
    g = as_oriented(g)
    # parity-labelled constraint graph: vertex -> [(neighbour, differ?)]
    links: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for edge in g.edges:
        v0, s0 = edge[0]
        for v, s in edge[1:]:
            parity = 0 if s == s0 else 1
            links[v0].append((v, parity))
            links[v].append((v0, parity))
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, parity in links[v]:
                want = colour[v] ^ parity
                if colour[w] < 0:
                    colour[w] = want
                    queue.append(w)
                elif colour[w] != want:
                    return None
    return Bipartition(tuple(c + 1 for c in colour))


def positivize(g: HypergraphLike) -> ClassicalView:
    g = as_oriented(g)
    if g.is_classical:
        return classical(g)
    flat = OrientedHypergraph.build(g.n, ([v for v, _ in e] for e in g.edges))
    return ClassicalView(flat, is_uniform(flat))


def disjoint_union(*graphs: HypergraphLike) -> OrientedHypergraph:
    """Place the hypergraphs side by side, shifting vertex indices."""
    offset = 0
    edges = []
    for g in graphs:
        g = as_oriented(g)
        edges.extend([(v + offset, s) for v, s in e] for e in g.edges)
        offset += g.n
    return OrientedHypergraph.build(offset, edges)


def example_hypergraph() -> OrientedHypergraph:
    """Six vertices, three 3-edges: {v1,v2,v3}, {v3,v4,v5}, {v4,v5,v6}."""
    return build(6, [[0, 1, 2], [2, 3, 4], [3, 4, 5]])
