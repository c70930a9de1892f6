from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hypfan import errors
from hypfan.generators import pretzel_complex
from hypfan.moves import insert_spheres, random_inserts, split_vertex_2d
from hypfan.sphere2 import (BLACK, WHITE, Eye, bicolor, color_balance, corner_pairing,
                            eye_checks, eyes, find_corner_pairing, loops_meet, parity_theorem,
                            s2_suite, sides, vertex_parities)
from helpers import digon_complex, great_circles


def test_bicolor_octahedral(octa):
    col = bicolor(octa.complex)
    assert col.count() == 4 and col.count(color=WHITE) == 4
    c = octa.complex
    for e in range(c.num_edges):
        a, b = c.edge_faces[e]
        assert col[a] != col[b]


def test_bicolor_after_insert(octa):
    c, fan, _ = insert_spheres(*octa, 2)
    col = bicolor(c)
    assert col.count() == col.count(color=WHITE) == 8


def test_not_bipartite_on_projective_plane():
    c, sigma = pretzel_complex(0)
    from hypfan.quotient import quotient_by_involution
    q = quotient_by_involution(c, sigma)
    with pytest.raises(errors.NotBipartite):
        bicolor(q)


def test_color_balance_octahedral(octa):
    c = octa.complex
    col = bicolor(c)
    assert color_balance(c, col).ok
    for i in c.loop_labels:
        rep = color_balance(c, col, i)
        assert rep.ok
        assert [v["black"] for v in rep.verdicts] == [2, 2]


def test_eyes_octahedral(octa):
    c = octa.complex
    es = eyes(c, 1, 2)
    assert len(es) == 4
    for eye in es:
        assert len(eye.corners) == 2 and not eye.raw
        assert len(eye.eyelashes[1]) == 1 and len(eye.eyelashes[2]) == 1
        assert eye_checks(c, eye, bicolor(c)).ok


def test_disjoint_loops():
    c, _ = split_vertex_2d(great_circles([(1, 0, 0), (0, 1, 0), (0, 0, 1)]), 0)
    with pytest.raises(errors.DisjointLoops):
        eyes(c, 4, 5)


def test_digon_eye_has_no_eyelashes():
    c = digon_complex()
    col = bicolor(c)
    es = eyes(c, 1, 2)
    assert all(len(e.corners) == 2 for e in es)
    assert all(len(e.eyelashes[k]) == 0 for e in es for k in (1, 2))
    assert all(not eye_checks(c, e, col).ok for e in es)


def test_raw_components_with_four_corners():
    # two loops meeting four times: two lunes each get split, and the four-corner
    # regions are reported raw
    c = great_circles([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    found_raw = False
    for i, j in combinations(c.loop_labels, 2):
        for e in eyes(c, i, j):
            assert len(e.corners) >= 2
            found_raw |= e.raw
    assert not found_raw  # great circles meet only twice
    c2, _ = split_vertex_2d(c, 0)
    for i, j in combinations(c2.loop_labels, 2):
        if loops_meet(c2, i, j):
            for e in eyes(c2, i, j):
                assert e.raw == (len(e.corners) != 2)


def test_synthetic_zero_eyelash_eye_fails():
    c = digon_complex()
    eye = Eye((1, 2), frozenset({0}), (0, 1), {1: [], 2: []})
    rep = eye_checks(c, eye, bicolor(c))
    assert not rep.ok


def test_vertex_parities_octahedral(octa):
    for i in octa.complex.loop_labels:
        rep = vertex_parities(octa.complex, i)
        assert rep.ok and rep.data["on_loop"] == 4
        assert [v["count"] for v in rep.verdicts if "odd" in v["check"]] == [1, 1]


def test_vertex_parities_two_vertex_loop_fails():
    rep = vertex_parities(digon_complex(), 1)
    assert not rep.ok


def test_parity_theorem_examples(octa):
    rep = parity_theorem(octa.complex)
    assert rep.ok and rep.data == {"N": 3, "V": 6, "F": 8}
    c, fan, _ = insert_spheres(*octa, 0)
    rep = parity_theorem(c)
    assert rep.ok and rep.data["N"] == 5 and rep.data["F"] == rep.data["V"] + 2


def test_parity_theorem_flags_unrealizable_arrangements():
    four = great_circles([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    rep = parity_theorem(four)
    assert not rep.ok and rep.verdicts[-1]["ok"]  # all three fail together
    five = great_circles([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, -2, 3)])
    assert not parity_theorem(five).verdicts[-1]["ok"]


def test_corner_pairing_octahedral(octa):
    pairing, rep = corner_pairing(octa.complex)
    assert rep.ok
    assert len(pairing.pairs) == 3
    assert sorted(v for p in pairing.pairs for v in p) == list(range(6))


def test_corner_pairing_is_lexicographically_least(octa):
    c = octa.complex
    from hypfan.sphere2 import eye_corner_pairs
    cand = eye_corner_pairs(c)
    best = find_corner_pairing(c).pairs
    from itertools import permutations
    brute = []
    for perm in permutations(range(6)):
        ps = tuple(sorted(tuple(sorted(perm[k:k + 2])) for k in range(0, 6, 2)))
        if all(p in cand for p in ps):
            brute.append(ps)
    assert best == min(brute)


def test_corner_pairing_single_loop_pair():
    c = digon_complex()
    p = find_corner_pairing(c)
    assert p.pairs == ((0, 1),)


def test_sides_first_contains_face_zero(octa):
    for i in octa.complex.loop_labels:
        assert 0 in sides(octa.complex, i)[0]


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 3), st.integers(0, 1000))
def test_suite_survives_random_moves(octa, steps, seed):
    c, fan, _ = random_inserts(*octa, steps, seed)
    rep = s2_suite(c, fan)
    assert rep.ok, [v for v in rep.verdicts if not v["ok"]]
    assert rep.data["pairing"] is not None


@settings(max_examples=10, deadline=None)
@given(st.permutations(range(6)))
def test_relabeling_invariance(octa, perm):
    from hypfan.surface import SurfaceComplex
    c = octa.complex
    rot = [None] * 6
    for v in range(6):
        rot[perm[v]] = c.rotations[v]
    d = SurfaceComplex(rot, c.edges)
    assert s2_suite(d).ok
    assert parity_theorem(d).data == parity_theorem(c).data


def test_suite_requires_sphere():
    c, _ = pretzel_complex(1)
    with pytest.raises(errors.SurfaceMismatch):
        s2_suite(c)


def test_colors_are_named():
    assert {BLACK, WHITE} == {"Black", "White"}
