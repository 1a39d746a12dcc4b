"""Tests for src.complex."""

import pytest
from hypothesis import given, settings, strategies as st

from src.complex import (
    alexander_dual, barycentric_subdivision, complex_from_dict, complex_to_dict, cone,
    degenerate_complex, face_lattice, face_poset, from_facets, join, link, order_complex,
    simplex, simplex_boundary, skeleton, suspension, upper_facets, void_complex,
)
from src.exceptions import ComplexError, DegenerateComplexError, FaceNotFoundError
from src.families import boolean
from src.poset import mobius_invariant, proper_part


@st.composite
def complexes(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    facets = draw(st.lists(st.sets(st.integers(min_value=0, max_value=n - 1), min_size=1, max_size=n),
                           min_size=1, max_size=5))
    return from_facets(n, [sorted(f) for f in facets])


def test_facets_are_made_maximal():
    delta = from_facets(3, [(0, 1), (0,), (1, 0)])
    assert delta.facets == ((0, 1),)


def test_vertex_out_of_range():
    with pytest.raises(ComplexError):
        from_facets(2, [(0, 2)])


def test_two_empty_complexes():
    assert void_complex().dim == -1
    assert void_complex().f_vector() == [1]
    assert degenerate_complex().dim == -2
    assert degenerate_complex().f_vector() == []
    with pytest.raises(DegenerateComplexError):
        degenerate_complex().h_vector()


def test_circle_counts(circle):
    assert circle.f_vector() == [1, 3, 3]
    assert circle.h_vector() == [1, 1, 1]
    assert circle.reduced_euler_characteristic() == -1


def test_suspension_of_circle_is_two_sphere(circle):
    sphere = suspension(circle)
    assert sphere.dim == 2
    assert sphere.reduced_euler_characteristic() == 1


def test_cone_is_acyclic(circle):
    assert cone(circle).reduced_euler_characteristic() == 0


def test_join_with_void_is_identity(circle):
    assert join(circle, void_complex()).facets == circle.facets
    assert join(circle, degenerate_complex()).is_degenerate


def test_link(circle):
    assert link(circle, (0,)).facets == ((1,), (2,))
    with pytest.raises(FaceNotFoundError):
        link(circle, (0, 1, 2))


def test_alexander_dual_of_two_edges(two_disjoint_edges):
    assert alexander_dual(two_disjoint_edges).facets == ((0, 2), (0, 3), (1, 2), (1, 3))


def test_alexander_dual_extremes():
    assert alexander_dual(simplex(3)).is_degenerate
    assert alexander_dual(degenerate_complex(3)).facets == ((0, 1, 2),)


def test_skeletons():
    assert skeleton(simplex(3), 0).facets == ((0,), (1,), (2,))
    mixed = from_facets(4, [(0, 1, 2), (2, 3)])
    assert upper_facets(mixed, 2).facets == ((0, 1, 2),)
    assert upper_facets(mixed, 3).facets == ((),)


def test_face_poset_and_subdivision(circle):
    P = face_poset(circle)
    assert len(P) == 6
    assert barycentric_subdivision(circle).f_vector() == [1, 6, 6]
    with pytest.raises(DegenerateComplexError):
        face_poset(degenerate_complex())


def test_face_lattice_mobius_is_reduced_euler(circle):
    assert mobius_invariant(face_lattice(circle)) == circle.reduced_euler_characteristic()


def test_order_complex_of_proper_boolean():
    delta = order_complex(proper_part(boolean(3)))
    assert delta.f_vector() == [1, 6, 6]


def test_io_round_trip(two_disjoint_edges):
    data = complex_to_dict(two_disjoint_edges)
    assert data == {"vertex_count": 4, "facets": [[0, 1], [2, 3]]}
    assert complex_from_dict(data) == two_disjoint_edges


@settings(max_examples=50, deadline=None)
@given(complexes(), complexes())
def test_join_multiplies_reduced_euler_characteristic(a, b):
    assert join(a, b).reduced_euler_characteristic() == \
        -a.reduced_euler_characteristic() * b.reduced_euler_characteristic()


@settings(max_examples=50, deadline=None)
@given(complexes())
def test_double_alexander_dual(delta):
    assert alexander_dual(alexander_dual(delta)).facets == delta.facets


def test_simplex_boundary_is_sphere():
    assert simplex_boundary(4).dim == 2
    assert simplex_boundary(4).reduced_euler_characteristic() == 1
