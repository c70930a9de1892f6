from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from hypfan import errors
from hypfan.fan import is_generic
from hypfan.flow import (FlowGraph, IndexCounts, assign_levels, attractor_pair_decomposition_s2,
                         check_domain_count, cycle_survey, detect_cycles, index_counts,
                         level_report, make_direction, morse_inequalities, orient_edges,
                         parse_direction, saddles_connected, vertex_index)
from hypfan.moves import random_inserts

wcoord = st.integers(-12, 12)


def vertex_on(c, a, b):
    return next(v for v in range(c.num_vertices) if set(c.vertex_loops(v)) == {a, b})


def graph(n, arcs):
    return FlowGraph(n, 2, (), tuple((t, h, i) for i, (t, h) in enumerate(arcs)))


def test_parse_direction():
    assert parse_direction("3/2,1") == (Fraction(3, 2), 1)
    with pytest.raises(ValueError):
        parse_direction("")


def test_vertex_index_examples(octa):
    c, fan = octa
    v = vertex_on(c, 1, 2)
    vi = vertex_index(c, v, fan, (2, 1))
    assert dict(zip(vi.labels, vi.alphas)) == {1: 2, 2: 1}
    assert vi.index == 2
    assert vertex_index(c, v, fan, (-2, -1)).index == 0


def test_vertex_index_3d(s3):
    c, fan = s3
    v = next(v for v in range(c.num_vertices)
             if c.vertex_labels(v) == {"H0", "H1_lambda", "H2_lambda"})
    vi = vertex_index(c, v, fan, (3, 1, 1))
    assert dict(zip(vi.labels, vi.alphas)) == {"H0": -5, "H1_lambda": -1, "H2_lambda": -1}
    assert vi.index == 0


def test_nongeneric_direction(octa):
    c, fan = octa
    with pytest.raises(errors.NonGenericDirection):
        make_direction((1, 0), fan, c)
    with pytest.raises(errors.NonGenericDirection):
        vertex_index(c, vertex_on(c, 1, 2), fan, (1, 0))


def test_octahedral_counts(octa):
    c, fan = octa
    assert tuple(index_counts(c, fan, (2, 1))) == (2, 2, 2)


def test_arcs_point_to_attractors(octa):
    c, fan = octa
    g = orient_edges(c, fan, (2, 1))
    assert len(g.arcs) == 12
    assert all(g.index(t) != 2 and g.index(h) != 0 for t, h, _ in g.arcs)
    for t, h, _ in g.arcs:
        if {g.index(t), g.index(h)} == {1, 2}:
            assert g.index(h) == 2


def test_levels_octahedral(octa):
    c, fan = octa
    g = orient_edges(c, fan, (2, 1))
    levels = assign_levels(g)
    top = max(levels.values())
    for v, lv in levels.items():
        if g.index(v) == 0:
            assert lv == 0
        if g.index(v) == 2:
            assert lv == top
    assert level_report(g, levels)["minima_are_repellers"]


def test_levels_synthetic():
    assert assign_levels(graph(1, [])) == {0: 0}
    chain = graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert assign_levels(chain) == {k: k for k in range(5)}
    with pytest.raises(errors.CyclicFlowGraph):
        assign_levels(graph(3, [(0, 1), (1, 2), (2, 0)]))


def test_detect_cycles_synthetic():
    cycles = detect_cycles(graph(3, [(0, 1), (1, 2), (2, 0)]))
    assert cycles == [[0, 1, 2, 0]]
    assert detect_cycles(graph(3, [(0, 1), (1, 2), (0, 2)])) == []


def test_domain_count_octahedral(octa):
    rep = check_domain_count(*octa, (2, 1))
    assert rep.ok
    assert rep.data["counts"] == [2, 2, 2] and rep.data["domains"] == 8


def test_domain_count_s3(s3):
    rep = check_domain_count(*s3, (3, 1, 1))
    assert rep.ok
    assert rep.data["domains"] == rep.data["counts"][3] * 8


def test_attractor_pairs(octa):
    rep = attractor_pair_decomposition_s2(*octa, (2, 1))
    assert rep.ok
    assert rep.data["contributing"] == [{"pair": [1, 2], "crossings": 2}]
    rep = attractor_pair_decomposition_s2(*octa, (-1, 3))
    assert rep.ok and rep.data["sum"] == 2


def test_morse_examples():
    assert morse_inequalities((2, 2, 2), (1, 0, 1)).ok
    assert morse_inequalities((1, 0, 1), (1, 0, 1)).ok
    assert not morse_inequalities((1, 3, 1), (1, 0, 1)).ok
    rep = morse_inequalities((2, 4, 2), (1, 2, 1), num_vertices=8)
    assert rep.ok
    bad = morse_inequalities((1, 1, 0), (1, 2, 1))
    assert not bad.ok


@settings(max_examples=40, deadline=None)
@given(wcoord, wcoord, st.integers(0, 2), st.integers(0, 20))
def test_flow_laws_on_sphere_examples(octa, a, b, steps, seed):
    c, fan = octa
    if steps:
        c, fan, _ = random_inserts(c, fan, steps, seed)
    w = (a, b)
    assume(is_generic(w, fan, c)[0])
    g = orient_edges(c, fan, w)
    counts = index_counts(c, fan, w, g.indices)
    assert counts.alternating_sum() == 2
    assert counts[0] == counts[2]
    assert c.num_faces == 4 * counts[2]
    assert detect_cycles(g) == []
    levels = assign_levels(g)
    assert all(levels[t] < levels[h] for t, h, _ in g.arcs)
    assert saddles_connected(g)
    assert check_domain_count(c, fan, w).ok
    assert attractor_pair_decomposition_s2(c, fan, w).ok
    neg = orient_edges(c, fan, (-a, -b))
    assert sorted((h, t) for t, h, _ in g.arcs) == sorted((t, h) for t, h, _ in neg.arcs)
    assert all(neg.index(v) == 2 - g.index(v) for v in range(c.num_vertices))


@settings(max_examples=20, deadline=None)
@given(wcoord, wcoord, st.lists(st.integers(1, 9), min_size=5, max_size=5))
def test_index_invariant_under_rescaling(octa, a, b, scales):
    c, fan = octa
    w = (a, b)
    assume(is_generic(w, fan, c)[0])
    scaled = fan.scaled(dict(zip(fan.labels(), scales)))
    assert [vertex_index(c, v, fan, w).index for v in range(c.num_vertices)] == \
        [vertex_index(c, v, scaled, w).index for v in range(c.num_vertices)]


@settings(max_examples=15, deadline=None)
@given(wcoord, wcoord, wcoord)
def test_3d_laws(s3, a, b, cc):
    c, fan = s3
    w = (a, b, cc)
    assume(is_generic(w, fan, c)[0])
    g = orient_edges(c, fan, w)
    counts = index_counts(c, fan, w, g.indices)
    assert counts.alternating_sum() == 0
    assert counts[0] == counts[3]
    assert c.num_domains == 8 * counts[3]
    assert check_domain_count(c, fan, w).ok
    assert morse_inequalities(counts, (1, 0, 0, 1)).ok


def test_cycle_survey_is_deterministic(s3):
    a = cycle_survey(*s3, 10, seed=3)
    b = cycle_survey(*s3, 10, seed=3, jobs=2)
    assert a == b
    assert a["samples"] == 10


def test_index_counts_type():
    ic = IndexCounts((2, 2, 2))
    assert ic.n == 2 and ic.alternating_sum() == 2
