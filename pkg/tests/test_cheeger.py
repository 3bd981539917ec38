import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hypercut import (
    Cut,
    build,
    check_degree_assumption,
    cheeger_exact,
    connected_components,
    cut_profile,
    disjoint_union,
    sign_cut,
    spectral_cut,
    sweep_cut,
    verify_inequalities,
    vertex_cheeger_exact,
    vertex_cut,
    vertex_cut_value,
)
from hypercut.cheeger import exhaustive_minimum, graph_isoperimetric_constant
from hypercut.errors import (
    DegenerateFunction,
    InvalidCut,
    NotConnected,
    NotRegular,
    NotUniform,
    TooLarge,
)
from hypercut.generate import random_connected_uniform, random_regular

from . import oracles
from .conftest import uniform_hypergraphs

SQRT3 = math.sqrt(3)
REFERENCE_F = np.array(
    [-(1 + SQRT3) / 2, -(1 + SQRT3) / 2, -0.5, (1 + SQRT3) / 4, (1 + SQRT3) / 4, 1.0]
)


def test_cut_validation():
    with pytest.raises(InvalidCut):
        Cut.of(3, [])
    with pytest.raises(InvalidCut):
        Cut.of(3, [0, 1, 2])
    c = Cut.of(4, [1, 3])
    assert c.members == [1, 3] and c.complement.members == [0, 2] and len(c) == 2


def test_profile_example_first_edge(example):
    prof = cut_profile(example, [0, 1, 2])
    assert prof.counts == (1, 1, 0, 1)
    assert prof.vol_S == 4 and prof.boundary == 2 and prof.h == Fraction(1, 2)
    assert oracles.h_of_subset(6, oracles.edge_sets(example), [0, 1, 2], 3) == Fraction(1, 2)


def test_profile_example_single_vertex(example):
    prof = cut_profile(example, [2])
    assert prof.boundary == 4 and prof.vol_S == 2 and prof.h == 2


def test_profile_component_cut():
    g = disjoint_union(build(3, [[0, 1, 2]]), build(3, [[0, 1, 2]]))
    prof = cut_profile(g, [0, 1, 2])
    assert prof.boundary == 0 and prof.h == 0


@given(uniform_hypergraphs(), st.data())
def test_profile_invariants(g, data):
    assume(min(g.degrees) > 0)
    mask = data.draw(st.integers(min_value=1, max_value=(1 << g.n) - 2))
    cut = Cut(g.n, mask)
    k = g.cardinalities[0]
    prof = cut_profile(g, cut)
    other = cut_profile(g, cut.complement)
    assert sum(prof.counts) == g.m
    assert sum(r * c for r, c in enumerate(prof.counts)) == prof.vol_S
    assert prof.counts == tuple(reversed(other.counts))
    assert prof.h == other.h
    members = set(cut.members)
    union_of_components = all(
        set(c) <= members or not (set(c) & members) for c in connected_components(g)
    )
    assert (prof.h == 0) == union_of_components
    assert prof.h == oracles.h_of_subset(g.n, oracles.edge_sets(g), cut.members, k)


def test_exact_example(example):
    report = cheeger_exact(example)
    assert report.h == Fraction(1, 2)
    assert report.witness.members == [0, 1, 2]
    assert report.lower_bound == pytest.approx(0.0625, abs=1e-12)
    assert report.gap == pytest.approx((3 - SQRT3) / 2, abs=1e-9)
    assert report.upper_bound == pytest.approx(2.0, abs=1e-12)
    assert report.bounds_hold == (True, True)
    best, argmins = oracles.brute_cheeger(6, oracles.edge_sets(example), 3)
    assert best == report.h and (0, 1, 2) in argmins


def test_exact_single_edge(single_edge):
    report = cheeger_exact(single_edge)
    assert report.h == 1 and report.gap == pytest.approx(2, abs=1e-12)
    assert report.upper_bound == 2 and report.lower_bound == 0.5


def test_exact_single_three_edge():
    report = cheeger_exact(build(3, [[0, 1, 2]]))
    assert report.h == 2 and report.gap == pytest.approx(3, abs=1e-12)
    assert (report.lower_bound, report.upper_bound) == (1.0, 8.0)
    assert report.bounds_hold == (True, True)


def test_exact_preconditions(example):
    with pytest.raises(NotConnected):
        cheeger_exact(build(4, [[0, 1], [2, 3]]))
    with pytest.raises(NotUniform):
        cheeger_exact(build(3, [[0, 1], [0, 1, 2]]))
    with pytest.raises(NotUniform):
        cheeger_exact(build(1, [[0], [0]]))
    with pytest.raises(TooLarge):
        cheeger_exact(example, limit=5)


def test_degree_assumption_is_automatic_for_uniform():
    # deg(v) <= m while the other degrees sum to at least (k - 1) m
    for seed in range(50):
        g = random_connected_uniform(7, 3, 6, seed=seed)
        assert check_degree_assumption(g)


def test_exact_limit_from_environment(example, monkeypatch):
    monkeypatch.setenv("HYPERCUT_LIMIT", "4")
    with pytest.raises(TooLarge):
        cheeger_exact(example)


@given(st.integers(min_value=0, max_value=10_000))
def test_exact_matches_brute_force(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(2, 5))
    n = int(rng.integers(k, 9))
    m = int(rng.integers(max(1, -(-(n - 1) // (k - 1))), 10))
    g = random_connected_uniform(n, k, m, rng)
    assume(check_degree_assumption(g))
    report = cheeger_exact(g)
    best, argmins = oracles.brute_cheeger(n, oracles.edge_sets(g), k)
    assert report.h == best
    # vertex 0 side, smallest sorted member list
    with_zero = [list(s) if 0 in s else sorted(set(range(n)) - set(s)) for s in argmins]
    assert report.witness.members == min(with_zero)


def test_threads_do_not_change_result():
    g = random_connected_uniform(17, 3, 14, seed=5, assumption=True)
    a = cheeger_exact(g, threads=1)
    b = cheeger_exact(g, threads=4)
    assert a.h == b.h and a.witness == b.witness


def test_exhaustive_minimum_gray_blocks():
    g = random_connected_uniform(9, 2, 14, seed=2, assumption=True)
    h, mask = exhaustive_minimum(g.incidence, g.degrees, 2)
    best, _ = oracles.brute_cheeger(9, oracles.edge_sets(g), 2)
    assert h == best and mask & 1


def test_sign_cut():
    assert sign_cut(REFERENCE_F).members == [3, 4, 5]
    assert sign_cut([1, -1]).members == [0]
    assert sign_cut([0, 1, -1]).members == [0, 1]
    with pytest.raises(DegenerateFunction):
        sign_cut([1, 2, 3])


def test_sweep_example(example):
    report = sweep_cut(example, REFERENCE_F)
    assert report.h == Fraction(1, 2)
    assert report.witness.members == [3, 4, 5]
    assert report.method == "sweep"


def test_sweep_single_edge(single_edge):
    assert sweep_cut(single_edge, [0.5, -0.5]).h == 1


def test_sweep_rejects_constant(example):
    with pytest.raises(DegenerateFunction):
        sweep_cut(example, np.ones(6))


def test_spectral_cut_example(example):
    cuts = spectral_cut(example)
    assert sorted([cuts.sign.witness.members, cuts.sign.witness.complement.members]) == [
        [0, 1, 2],
        [3, 4, 5],
    ]
    assert cuts.sign.h == Fraction(1, 2) and cuts.sweep.h == Fraction(1, 2)


def test_spectral_cut_triangle(triangle):
    cuts = spectral_cut(triangle)
    assert cuts.sign.h == 1 and cuts.sweep.h == 1
    assert min(len(cuts.sign.witness), len(cuts.sign.witness.complement)) == 1
    assert cheeger_exact(triangle).h == 1


def test_spectral_cut_single_edge(single_edge):
    cuts = spectral_cut(single_edge)
    assert cuts.sign.h == 1 and len(cuts.sign.witness) == 1


def test_verify_inequalities():
    assert verify_inequalities(3, Fraction(1, 2), (3 + SQRT3) / 2) == (True, True)
    assert verify_inequalities(2, 1, 0.0) == (True, True)
    assert verify_inequalities(4, 0, 4.0) == (True, True)
    assert verify_inequalities(2, 1, 1.0) == (True, True)
    assert verify_inequalities(2, 0.1, 0.0) == (True, False)
    assert verify_inequalities(2, 3, 1.5) == (False, True)


@given(st.integers(min_value=0, max_value=10_000))
def test_ordering_chain_and_theorem(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(2, 5))
    n = int(rng.integers(max(k, 3), 10))
    m = int(rng.integers(-(-(n - 1) // (k - 1)), 12))
    g = random_connected_uniform(n, k, m, rng)
    assume(check_degree_assumption(g))
    exact = cheeger_exact(g)
    cuts = spectral_cut(g)
    assert exact.bounds_hold == (True, True)
    assert exact.h <= cuts.sweep.h <= cuts.sign.h
    assert cuts.sweep.bounds_hold[1]


@given(st.lists(st.floats(-10, 10, allow_nan=False), min_size=2, max_size=8), st.data())
def test_orthogonal_functions_take_both_signs(values, data):
    deg = np.array(data.draw(st.lists(st.integers(1, 5), min_size=len(values), max_size=len(values))))
    f = np.array(values) - np.dot(deg, values) / deg.sum()
    assume(np.max(np.abs(f)) > 1e-6)
    assert f.min() < 0 < f.max() or (f.min() < 0 and np.any(f >= 0))


def test_graph_oracle_agrees(triangle, cycle4):
    for g in (triangle, cycle4):
        pairs = [tuple(g.edge_vertices(j)) for j in range(g.m)]
        assert graph_isoperimetric_constant(g.n, pairs) == oracles.polya_szego(g.n, pairs)
        assert cheeger_exact(g).h == oracles.polya_szego(g.n, pairs)


# ---------------------------------------------------------------- vertex cuts


def test_vertex_cheeger_triangle(triangle):
    report = vertex_cheeger_exact(triangle)
    assert report.h_star == 1 and report.dual_report.h == 1
    assert report.d == 2 and report.bounds_hold == (True, True)


def test_vertex_cheeger_cycle4(cycle4):
    report = vertex_cheeger_exact(cycle4)
    assert report.h_star == Fraction(1, 2)
    assert report.h_star == oracles.vertex_cheeger_brute(cycle4)


def test_vertex_cut_value_triangle(triangle):
    assert vertex_cut_value(triangle, [0]) == 1


def test_vertex_cut_spectral(cycle4, triangle):
    rep = vertex_cut(cycle4)
    assert rep.h_star >= Fraction(1, 2)
    assert rep.h_star == vertex_cut_value(cycle4, rep.witness)
    assert vertex_cut(triangle).h_star == 1


def test_vertex_preconditions(single_edge, example):
    with pytest.raises(NotRegular):
        vertex_cheeger_exact(single_edge)
    with pytest.raises(NotRegular):
        vertex_cheeger_exact(example)
    with pytest.raises(NotConnected):
        vertex_cheeger_exact(build(6, [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]]))


@given(st.integers(min_value=0, max_value=10_000))
def test_vertex_cheeger_random_regular(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(2, 4))
    m = int(rng.integers(d + 1, 8))
    n = int(rng.integers(max(2, -(-(m - 1) // (d - 1))), 9))
    g = random_regular(n, d, m, rng)
    report = vertex_cheeger_exact(g)
    assert report.h_star == oracles.vertex_cheeger_brute(g)
    assert report.h_star == report.dual_report.h
    assert report.bounds_hold == (True, True)
