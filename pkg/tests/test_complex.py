import pytest

import oracles
from relfaces import EMPTY, VOID, ComplexError, RelativeComplex, build_complex, missing_faces, parse_complex, relative
from relfaces import constructions as C
from relfaces.complex import f_from_h, format_complex, h_from_f, mask_of


def test_duplicate_and_contained_facets_are_pruned():
    assert build_complex([(1, 2), (2, 3), (1, 2)]).facets == [(1, 2), (2, 3)]
    assert build_complex([(1, 2, 3), (1, 2)]).facets == [(1, 2, 3)]


def test_empty_facet_list_is_void():
    cx = build_complex([])
    assert cx.is_void and cx == VOID
    assert EMPTY.f_vector() == [1]


def test_f_vectors(four_cycle, tetra):
    assert C.boundary_of_simplex(3).f_vector() == [1, 4, 6, 4]
    assert four_cycle.f_vector() == [1, 4, 4]
    rel = RelativeComplex(tetra, C.boundary_of_simplex(3))
    assert rel.f_vector() == [0, 0, 0, 0, 1]


@pytest.mark.parametrize("make", [
    lambda: C.boundary_of_simplex(3),
    lambda: C.octahedron(),
    lambda: C.cyclic_polytope_boundary(4, 7),
    lambda: C.stacked_ball(3, 4, 2),
    lambda: C.minimal_rp2(),
])
def test_f_and_h_against_bruteforce(make):
    cx = make()
    faces = oracles.faces_of(cx.facets)
    f = oracles.f_vector(faces, cx.dim)
    assert cx.f_vector() == f
    assert RelativeComplex(cx).h_vector() == oracles.h_vector(f)


def test_h_vectors(tetra):
    assert RelativeComplex(C.boundary_of_simplex(3)).h_vector() == [1, 1, 1, 1]
    assert RelativeComplex(tetra, C.boundary_of_simplex(3)).h_vector() == [0, 0, 0, 0, 1]
    octa = RelativeComplex(C.octahedron())
    assert octa.h_vector() == [1, 3, 3, 1]
    assert octa.g_vector()[2] == 0


def test_h_f_roundtrip_small():
    f = [1, 7, 21, 28, 14]
    assert f_from_h(h_from_f(f)) == f


def test_link_and_induced(four_cycle, tetra):
    octa = C.octahedron()
    v = octa.vertices[0]
    lk = octa.link(1 << v)
    assert len(lk.vertices) == 4 and len(lk.facet_masks) == 4 and lk.dim == 1
    assert tetra.link(tetra.facet_masks[0]) == EMPTY
    sub = four_cycle.induced(mask_of([1, 3]))
    assert sub.facets == [(1,), (3,)]


def test_link_of_non_face_is_void(four_cycle):
    assert four_cycle.link(mask_of([1, 3])).is_void


def test_missing_faces(four_cycle, tetra):
    assert missing_faces(C.boundary_of_simplex(3), 3) == [(1, 2, 3, 4)]
    assert missing_faces(four_cycle, 1) == [(1, 3), (2, 4)]
    for k in range(5):
        assert missing_faces(tetra, k) == []


def test_relative_validation(four_cycle, tetra):
    assert relative(tetra, C.boundary_of_simplex(3)).f_vector() == [0, 0, 0, 0, 1]
    assert relative(four_cycle, VOID) == RelativeComplex(four_cycle)
    with pytest.raises(ComplexError, match=r"\(1, 2, 3\)"):
        relative(four_cycle, build_complex([(1, 2, 3)]))


def test_text_roundtrip_with_ghosts():
    cx = build_complex([(1, 2), (2, 5)], ground_set=[1, 2, 5, 9])
    again = parse_complex(format_complex(cx, "two edges"))
    assert again == cx and again.ground_set == (1, 2, 5, 9)


def test_parse_errors():
    with pytest.raises(ComplexError):
        parse_complex("1 2\nx y\n")
