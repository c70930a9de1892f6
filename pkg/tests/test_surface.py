import pytest
from hypothesis import given, settings, strategies as st

from hypfan import errors
from hypfan.generators import pretzel_complex
from hypfan.surface import SurfaceComplex, build_surface_complex, trace_loops
from helpers import digon_complex, great_circles


def assert_counts(c):
    assert c.num_edges == 2 * c.num_vertices
    assert c.num_faces == c.num_vertices + c.euler_characteristic()
    assert sum(len(f) for f in c.faces) == 2 * c.num_edges
    assert sum(len(lp) for lp in c.loops) == c.num_edges


def test_octahedral_counts(octa):
    c = octa.complex
    assert (c.num_vertices, c.num_edges, c.num_faces, len(c.loops)) == (6, 12, 8, 3)
    assert c.euler_characteristic() == 2
    assert [len(lp) for lp in trace_loops(c)] == [4, 4, 4]
    assert_counts(c)


def test_octahedral_matches_float_geometry(octa):
    g = great_circles([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert sorted(len(f) for f in g.faces) == sorted(len(f) for f in octa.complex.faces)
    assert g.num_faces == octa.complex.num_faces == 8


def test_empty_rejected():
    with pytest.raises(errors.EmptyComplex):
        SurfaceComplex([], [])


def test_non_quadrivalent():
    with pytest.raises(errors.NonQuadrivalentVertex):
        build_surface_complex([[0, 1, 2]], [(0, 1)])


def test_dangling_and_self_paired():
    with pytest.raises(errors.DanglingDart):
        build_surface_complex([[0, 1, 2, 3]], [(0, 1)])
    with pytest.raises(errors.SelfPairedDart):
        build_surface_complex([[0, 1, 2, 3]], [(0, 0), (1, 2)])
    with pytest.raises(errors.DanglingDart):
        build_surface_complex([[0, 1, 2, 3]], [(0, 1), (2, 9)])


def test_through_strand_rule(octa):
    c = octa.complex
    for lp in c.loops:
        darts = lp.darts
        for k in range(0, len(darts), 2):
            arrive = darts[k + 1]
            leave = darts[(k + 2) % len(darts)]
            assert c.dart_vertex[arrive] == c.dart_vertex[leave]
            assert (c.dart_pos[leave] - c.dart_pos[arrive]) % 4 == 2


def test_declared_surface_checked():
    c = pretzel_complex(1)[0]
    rot = [list(r) for r in c.rotations]
    SurfaceComplex(rot, c.edges, surface={"orientable": True, "genus_or_crosscaps": 1})
    with pytest.raises(errors.SurfaceMismatch):
        SurfaceComplex(rot, c.edges, surface={"orientable": True, "genus_or_crosscaps": 0})


def test_one_vertex_torus_is_flagged_not_rejected():
    c = SurfaceComplex([[0, 1, 2, 3]], [(0, 2), (1, 3)])
    assert c.euler_characteristic() == 0 and c.orientable
    kinds = {x["kind"] for x in c.issues()}
    assert {"SelfLoopEdge", "FaceRevisitsEdge"} <= kinds


def test_twisted_edges_give_projective_plane():
    c = SurfaceComplex([[0, 1, 2, 3]], [(0, 2), (1, 3)], twisted=[(0, 2), (1, 3)])
    assert not c.orientable
    assert c.euler_characteristic() == 1 and c.genus == 1


def test_face_reusing_a_dart_is_rejected():
    with pytest.raises(errors.NonDiskFace):
        SurfaceComplex([[0, 1, 2, 3]], [(0, 2), (1, 3)], twisted=[(0, 2)])


def test_digon_complex_is_a_sphere():
    c = digon_complex()
    assert c.euler_characteristic() == 2
    assert sorted(len(f) for f in c.faces) == [2, 2, 2, 2]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)),
                min_size=2, max_size=5, unique=True))
def test_great_circle_arrangements(normals):
    from hypfan.linalg import rank, cross3
    for i in range(len(normals)):
        for j in range(i + 1, len(normals)):
            if rank([normals[i], normals[j]]) < 2:
                return
        for j in range(i + 1, len(normals)):
            for k in range(j + 1, len(normals)):
                if rank([normals[i], normals[j], normals[k]]) < 3:
                    return
    if any(all(x == 0 for x in n) for n in normals):
        return
    c = great_circles(normals)
    n = len(normals)
    assert c.num_vertices == n * (n - 1)
    assert len(c.loops) == n
    assert c.orientable and c.euler_characteristic() == 2
    assert_counts(c)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("cut", [False, True])
def test_pretzel_counts(g, cut):
    c = pretzel_complex(g, cut)[0]
    assert c.orientable
    assert c.euler_characteristic() == 2 - 2 * g
    assert_counts(c)
