"""Cheeger constants, cuts and the two-sided spectral inequality.

For a k-uniform classical hypergraph and a proper vertex subset S, the
boundary weight is ``sum_r r (k - r) |E_r(S)|`` where ``E_r(S)`` holds the
edges meeting S in exactly r vertices; ``h(S)`` divides it by the smaller of
the two volumes. All cut values are exact :class:`fractions.Fraction` objects.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    DegenerateFunction,
    DegreeAssumptionViolated,
    InvalidCut,
    NotConnected,
    NotRegular,
    NotUniform,
    TooLarge,
)
from .hypergraph import (
    ClassicalView,
    DualMapping,
    HypergraphLike,
    check_degree_assumption,
    classical,
    connected_components,
    dual,
    is_regular,
)
from .spectral import Eigenpair, second_largest_eigenpair, spectrum

DEFAULT_LIMIT = 24
BOUND_SLACK = 1e-7
_CHUNK = 1 << 15


def default_limit() -> int:
    """Exhaustive-search vertex limit; ``HYPERCUT_LIMIT`` overrides it."""
    value = os.environ.get("HYPERCUT_LIMIT")
    return int(value) if value else DEFAULT_LIMIT


@dataclass(frozen=True)
class Cut:
    """A nonempty proper vertex subset stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.mask <= 0 or self.mask >= full or self.mask & ~full:
            raise InvalidCut("a cut must be a nonempty proper subset of the vertices")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "Cut":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InvalidCut(f"vertex {v} not in [0, {n})")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def members(self) -> list[int]:
        return [v for v in range(self.n) if self.mask >> v & 1]

    @property
    def complement(self) -> "Cut":
        return Cut(self.n, ((1 << self.n) - 1) ^ self.mask)

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def __len__(self):
        return bin(self.mask).count("1")


@dataclass(frozen=True)
class CutProfile:
    counts: tuple[int, ...]
    vol_S: int
    vol_Sbar: int
    boundary: int

    @property
    def h(self) -> Fraction:
        return Fraction(self.boundary, min(self.vol_S, self.vol_Sbar))


def boundary_weight(counts: Sequence[int], k: int) -> int:
    return sum(counts[r] * r * (k - r) for r in range(1, k))


def _uniform_classical(g: HypergraphLike) -> ClassicalView:
    view = classical(g)
    if view.k is None:
        raise NotUniform("hypergraph is not uniform")
    return view


def cut_profile(g: HypergraphLike, cut: Cut | Iterable[int]) -> CutProfile:
    view = _uniform_classical(g)
    if not isinstance(cut, Cut):
        cut = Cut.of(view.n, cut)
    k = view.k
    counts = [0] * (k + 1)
    for edge in view.edges:
        counts[sum(1 for v, _ in edge if v in cut)] += 1
    vol_S = sum(d for v, d in enumerate(view.degrees) if v in cut)
    vol_Sbar = sum(view.degrees) - vol_S
    return CutProfile(tuple(counts), vol_S, vol_Sbar, boundary_weight(counts, k))


def verify_inequalities(k: int, h, lambda_second: float, slack: float = BOUND_SLACK):
    """Evaluate ``h^2/(2(k-1)) <= k - lambda <= 2(k-1) h``.

    Returns ``(lower_holds, upper_holds)``.
    """
    h = float(h)
    gap = k - lambda_second
    lower = h * h / (2 * (k - 1))
    upper = 2 * (k - 1) * h
    return lower <= gap + slack, gap <= upper + slack


@dataclass(frozen=True)
class CheegerReport:
    """A Cheeger value, its witness cut and the spectral bounds it implies.

    For ``method="exact"`` ``h`` is the Cheeger constant. For the spectral
    methods it is ``h(witness)``, an upper certificate for the constant, so
    the lower bound is allowed to fail.
    """

    method: str
    k: int
    h: Fraction
    witness: Cut
    lambda_second: float
    multiplicity: int = 1

    @property
    def gap(self) -> float:
        return self.k - self.lambda_second

    @property
    def lower_bound(self) -> float:
        return float(self.h) ** 2 / (2 * (self.k - 1))

    @property
    def upper_bound(self) -> float:
        return 2 * (self.k - 1) * float(self.h)

    @property
    def bounds_hold(self) -> tuple[bool, bool]:
        return verify_inequalities(self.k, self.h, self.lambda_second)


def _require_cheeger_input(g: HypergraphLike) -> ClassicalView:
    view = _uniform_classical(g)
    if view.k < 2:
        raise NotUniform(f"need k >= 2, got k={view.k}")
    comps = connected_components(view)
    if len(comps) != 1:
        raise NotConnected(f"hypergraph has {len(comps)} connected components")
    if not check_degree_assumption(view):
        raise DegreeAssumptionViolated("some vertex degree exceeds the sum of the others")
    return view


def _lex_key(mask: int, n: int):
    return [v for v in range(n) if mask >> v & 1]


def _scan_block(start, stop, n, inc, deg, k, total):
    """Best (boundary, min-volume) over Gray codes ``start..stop`` of the free bits."""
    i = np.arange(start, stop, dtype=np.int64)
    masks = 1 | ((i ^ (i >> 1)) << 1)
    bits = (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1
    r = bits @ inc
    boundary = (r * (k - r)).sum(axis=1)
    vol = bits @ deg
    den = np.minimum(vol, total - vol)
    keep = den > 0
    masks, boundary, den = masks[keep], boundary[keep], den[keep]
    if masks.size == 0:
        return None
    ratio = boundary / den
    near = ratio <= ratio.min() * (1 + 1e-12) + 1e-300
    best = min(Fraction(int(b), int(d)) for b, d in zip(boundary[near], den[near]))
    exact = boundary[near] * best.denominator == den[near] * best.numerator
    cands = [int(x) for x in masks[near][exact]]
    return best, min(cands, key=lambda m: _lex_key(m, n))


def exhaustive_minimum(
    incidence: np.ndarray, degrees: Sequence[int], k: int, threads: int = 1
) -> tuple[Fraction, int]:
    """Minimum of ``h(S)`` over all cuts with vertex 0 in S.

    Subsets are enumerated in Gray-code order over the remaining ``n - 1``
    vertices and evaluated in blocks. The result is the exact minimum and the
    lexicographically smallest minimizing mask, independent of ``threads``.
    """
    n = incidence.shape[0]
    inc = (incidence != 0).astype(np.int64)
    deg = np.asarray(degrees, dtype=np.int64)
    total = int(deg.sum())
    count = 1 << (n - 1)
    blocks = [(s, min(s + _CHUNK, count)) for s in range(0, count, _CHUNK)]

    def run(block):
        return _scan_block(block[0], block[1], n, inc, deg, k, total)

    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, blocks))
    else:
        results = [run(b) for b in blocks]
    results = [r for r in results if r is not None]
    best = min(h for h, _ in results)
    mask = min((m for h, m in results if h == best), key=lambda m: _lex_key(m, n))
    return best, mask


def cheeger_exact(
    g: HypergraphLike,
    limit: Optional[int] = None,
    threads: int = 1,
    pair: Optional[Eigenpair] = None,
) -> CheegerReport:
    view = _require_cheeger_input(g)
    limit = default_limit() if limit is None else limit
    if view.n > limit:
        raise TooLarge(f"{view.n} vertices exceeds the exhaustive limit {limit}")
    h, mask = exhaustive_minimum(view.graph.incidence, view.degrees, view.k, threads)
    pair = pair or second_largest_eigenpair(view)
    return CheegerReport("exact", view.k, h, Cut(view.n, mask), pair.value, pair.multiplicity)


def sign_cut(f) -> Cut:
    """Vertices where ``f >= 0``; zeros join the nonnegative side."""
    f = np.asarray(f, dtype=float)
    nonneg = [v for v in range(len(f)) if f[v] >= 0]
    if len(nonneg) in (0, len(f)):
        raise DegenerateFunction("function does not take both signs")
    return Cut.of(len(f), nonneg)


def sweep_order(f) -> list[int]:
    """Vertices by descending ``f``; equal values keep ascending index."""
    f = np.asarray(f, dtype=float)
    return sorted(range(len(f)), key=lambda v: (-f[v], v))


def sweep_profile(g: HypergraphLike, f) -> list[tuple[Cut, Fraction]]:
    """``h`` of every prefix ``S_i`` (i = 1..n-1) of the sweep order."""
    view = _uniform_classical(g)
    n, k = view.n, view.k
    vertex_edges: list[list[int]] = [[] for _ in range(n)]
    for j, edge in enumerate(view.edges):
        for v, _ in edge:
            vertex_edges[v].append(j)
    inside = [0] * view.m
    total = sum(view.degrees)
    boundary = vol = mask = 0
    out = []
    for v in sweep_order(f)[:-1]:
        for j in vertex_edges[v]:
            r = inside[j]
            boundary += k - 2 * r - 1
            inside[j] = r + 1
        vol += view.degrees[v]
        mask |= 1 << v
        out.append((Cut(n, mask), Fraction(boundary, min(vol, total - vol))))
    return out


def sweep_cut(
    g: HypergraphLike, f, pair: Optional[Eigenpair] = None
) -> CheegerReport:
    view = _require_cheeger_input(g)
    f = np.asarray(f, dtype=float)
    if np.ptp(f) == 0:
        raise DegenerateFunction("constant function has no sweep cut")
    prefixes = sweep_profile(view, f)
    best = min(h for _, h in prefixes)
    cut = next(c for c, h in prefixes if h == best)
    pair = pair or second_largest_eigenpair(view)
    return CheegerReport("sweep", view.k, best, cut, pair.value, pair.multiplicity)


@dataclass(frozen=True)
class SpectralCuts:
    sign: CheegerReport
    sweep: CheegerReport
    eigenfunction: np.ndarray


def spectral_cut(g: HypergraphLike) -> SpectralCuts:
    """Sign and sweep cuts from the eigenfunction of ``lambda_{n-1}``."""
    view = _require_cheeger_input(g)
    pair = second_largest_eigenpair(view)
    s = sign_cut(pair.function)
    sign_report = CheegerReport(
        "sign", view.k, cut_profile(view, s).h, s, pair.value, pair.multiplicity
    )
    return SpectralCuts(sign_report, sweep_cut(view, pair.function, pair), pair.function)


# ---------------------------------------------------------------- vertex cuts


@dataclass(frozen=True)
class VertexCutReport:
    """Vertex Cheeger value of a regular hypergraph, witnessed by an edge set.

    ``dual_report`` is the edge-cut report of the dual hypergraph; its
    ``lambda_second`` is ``lambda_{m-1}`` of the dual and its ``k`` is the
    regularity ``d``.
    """

    method: str
    d: int
    h_star: Fraction
    witness: tuple[int, ...]
    dual_report: CheegerReport
    mapping: DualMapping

    @property
    def lambda_second(self) -> float:
        return self.dual_report.lambda_second

    @property
    def lower_bound(self) -> float:
        return float(self.h_star) ** 2 / (2 * (self.d - 1))

    @property
    def upper_bound(self) -> float:
        return 2 * (self.d - 1) * float(self.h_star)

    @property
    def gap(self) -> float:
        return self.d - self.lambda_second

    @property
    def bounds_hold(self) -> tuple[bool, bool]:
        return verify_inequalities(self.d, self.h_star, self.lambda_second)


def vertex_cut_value(g: HypergraphLike, edge_subset: Iterable[int]) -> Fraction:
    """``h_*(F)``: vertices counted by how many edges of F hold them."""
    view = classical(g)
    d = is_regular(view)
    if d is None:
        raise NotRegular("hypergraph is not regular")
    chosen = set(edge_subset)
    if not chosen or len(chosen) >= view.m or not chosen <= set(range(view.m)):
        raise InvalidCut("edge subset must be nonempty and proper")
    in_f = [0] * view.n
    vol_f = 0
    for j in chosen:
        vol_f += len(view.edges[j])
        for v, _ in view.edges[j]:
            in_f[v] += 1
    numer = sum(r * (d - r) for r in in_f)
    total = sum(view.graph.cardinalities)
    return Fraction(numer, min(vol_f, total - vol_f))


def _direct_vertex_cheeger(view: ClassicalView, d: int) -> tuple[Fraction, int]:
    """Gray-code walk over edge subsets containing edge 0, updating V_r(F) per flip."""
    m = view.m
    card = view.graph.cardinalities
    total = sum(card)
    members = [view.graph.edge_vertices(j) for j in range(m)]
    in_f = [0] * view.n
    for v in members[0]:
        in_f[v] = 1
    numer = sum(r * (d - r) for r in in_f)
    vol = card[0]
    mask = 1
    best: Optional[Fraction] = None
    best_mask = 0
    prev = 0
    for i in range(1 << (m - 1)):
        gray = i ^ (i >> 1)
        flipped = gray ^ prev
        prev = gray
        if flipped:
            j = flipped.bit_length()  # free bit b stands for edge b + 1
            step = 1 if gray & flipped else -1
            mask ^= 1 << j
            vol += step * card[j]
            for v in members[j]:
                r = in_f[v]
                numer += step * (d - 2 * r - step)
                in_f[v] = r + step
        den = min(vol, total - vol)
        if den == 0:
            continue
        value = Fraction(numer, den)
        if (
            best is None
            or value < best
            or (value == best and _lex_key(mask, m) < _lex_key(best_mask, m))
        ):
            best, best_mask = value, mask
    return best, best_mask


def _require_vertex_input(g: HypergraphLike) -> tuple[ClassicalView, int, DualMapping]:
    view = classical(g)
    d = is_regular(view)
    if d is None:
        raise NotRegular("hypergraph is not regular")
    if d < 2:
        raise NotRegular(f"need d >= 2, got d={d}")
    comps = connected_components(view)
    if len(comps) != 1:
        raise NotConnected(f"hypergraph has {len(comps)} connected components")
    return view, d, dual(view)


def vertex_cheeger_exact(
    g: HypergraphLike, limit: Optional[int] = None, threads: int = 1
) -> VertexCutReport:
    """Vertex Cheeger constant, computed directly and through the dual.

    Raises ``AssertionError`` if the two computations disagree.
    """
    view, d, mapping = _require_vertex_input(g)
    limit = default_limit() if limit is None else limit
    if view.m > limit:
        raise TooLarge(f"{view.m} edges exceeds the exhaustive limit {limit}")
    dual_report = cheeger_exact(mapping.dual, limit=limit, threads=threads)
    h_direct, mask = _direct_vertex_cheeger(view, d)
    assert h_direct == dual_report.h, (h_direct, dual_report.h)
    witness = tuple(j for j in range(view.m) if mask >> j & 1)
    return VertexCutReport("exact", d, h_direct, witness, dual_report, mapping)


def vertex_cut(g: HypergraphLike) -> VertexCutReport:
    """Spectral vertex cut: the dual's sign cut carried back to an edge set."""
    view, d, mapping = _require_vertex_input(g)
    cuts = spectral_cut(mapping.dual)
    witness = tuple(mapping.dual_vertices_to_edges(cuts.sign.witness.members))
    h_star = vertex_cut_value(view, witness)
    return VertexCutReport("sign", d, h_star, witness, cuts.sign, mapping)


# ---------------------------------------------------------------- graph oracle


def graph_isoperimetric_constant(n: int, edges: Sequence[tuple[int, int]]) -> Fraction:
    """``min |E(S, S')| / min(vol S, vol S')`` for a simple graph by brute force."""
    deg = [0] * n
    for u, w in edges:
        deg[u] += 1
        deg[w] += 1
    total = sum(deg)
    best = None
    for size in range(1, n):
        for subset in combinations(range(n), size):
            s = set(subset)
            crossing = sum(1 for u, w in edges if (u in s) != (w in s))
            vol = sum(deg[v] for v in s)
            value = Fraction(crossing, min(vol, total - vol))
            if best is None or value < best:
                best = value
    return best


def exact_with_spectrum(g: HypergraphLike, limit: Optional[int] = None):
    """Exact report together with the full spectrum it was checked against."""
    view = _require_cheeger_input(g)
    spec = spectrum(view)
    pair = second_largest_eigenpair(view, spec)
    return cheeger_exact(view, limit=limit, pair=pair), spec
