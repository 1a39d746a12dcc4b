"""Tests for src.homology: Smith normal form, homology groups, Laplacians, CM checks."""

from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from src.complex import degenerate_complex, from_facets, order_complex, simplex, void_complex
from src.exceptions import InfeasibleSizeError, NotASphereError
from src.families import boolean, k_equal_partition_lattice, partition_lattice, splitting_subposet
from src.homology import (
    SparseIntegerMatrix, betti_open_interval, chain_complex, cm_checks, cohomology, cycle_rank,
    fundamental_cycle, homology, independent_in_homology, integer_rank, is_homology_sphere,
    laplacian_betti, laplacian_spectrum, poset_homology, smith_normal_form,
)
from src.poset import proper_part

# Six-vertex real projective plane
RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
       (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)]


@pytest.fixture
def projective_plane():
    return from_facets(6, RP2)


# ---------- Smith normal form ----------

@pytest.mark.parametrize("dense,factors", [
    ([[2, 4], [6, 8]], [2, 4]),
    ([[2, 0], [0, 3]], [1, 6]),
    ([[1, 1], [1, 1]], [1]),
    ([[0, 0], [0, 0]], []),
])
def test_smith_normal_form(dense, factors):
    assert smith_normal_form(SparseIntegerMatrix.from_dense(dense)).invariant_factors == factors


@st.composite
def integer_matrices(draw):
    nrows = draw(st.integers(min_value=1, max_value=5))
    ncols = draw(st.integers(min_value=1, max_value=5))
    return [draw(st.lists(st.integers(min_value=-4, max_value=4), min_size=ncols, max_size=ncols))
            for _ in range(nrows)]


@settings(max_examples=80, deadline=None)
@given(integer_matrices())
def test_smith_form_is_a_divisibility_chain_of_the_right_rank(dense):
    from sympy import Matrix

    form = smith_normal_form(SparseIntegerMatrix.from_dense(dense))
    assert form.rank == Matrix(dense).rank()
    factors = form.invariant_factors
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


def test_integer_rank_of_transpose():
    matrix = SparseIntegerMatrix.from_dense([[1, 2, 3], [2, 4, 6]])
    assert integer_rank(matrix) == 1
    assert integer_rank(matrix.transpose()) == 1


# ---------- homology ----------

def test_empty_complex_conventions():
    assert homology(void_complex()).betti == {-1: 1}
    assert homology(degenerate_complex()).betti == {-2: 1}
    assert homology(simplex(4)).is_acyclic()


def test_circle_and_disjoint_edges(circle, two_disjoint_edges):
    assert homology(circle).betti == {1: 1}
    assert homology(two_disjoint_edges).betti == {0: 1}


def test_projective_plane_torsion(projective_plane):
    result = homology(projective_plane)
    assert result.betti == {}
    assert result.torsion == {1: [2]}
    assert result.to_dict() == {"dims": {"1": {"betti": 0, "torsion": [2]}}}
    # torsion moves up one degree in cohomology
    assert cohomology(projective_plane).torsion == {2: [2]}


def test_boundary_squared_is_zero(projective_plane):
    assert chain_complex(projective_plane).boundary_squared_is_zero()


def test_feasibility_guard(projective_plane):
    with pytest.raises(InfeasibleSizeError) as info:
        homology(projective_plane, max_elements=10)
    assert info.value.limit == 10


@pytest.mark.parametrize("n,dim,betti", [(3, 0, 2), (4, 1, 6), (5, 2, 24)])
def test_partition_lattice_homology(n, dim, betti):
    result = poset_homology(proper_part(partition_lattice(n)))
    assert result.betti == {dim: betti}
    assert result.is_torsion_free()


def test_open_interval_conventions():
    P = partition_lattice(4)
    bottom, top = P.bottom(), P.top()
    assert betti_open_interval(P, bottom, bottom).betti == {-2: 1}
    atom = P.upper_covers(bottom)[0]
    assert betti_open_interval(P, bottom, atom).betti == {-1: 1}
    assert betti_open_interval(P, bottom, top).betti == {1: 6}


def test_homology_sphere(circle, two_disjoint_edges):
    assert is_homology_sphere(circle)
    assert not is_homology_sphere(two_disjoint_edges)


# ---------- Laplacians ----------

@pytest.mark.parametrize("i", [-1, 0, 1, 2])
def test_laplacian_betti_matches_rational_homology(projective_plane, circle, i):
    for delta in (projective_plane, circle):
        assert laplacian_betti(delta, i) == homology(delta).betti_at(i)


def test_laplacian_spectrum_of_circle(circle):
    assert laplacian_spectrum(circle, 1) == {0: 1, 3: 2}


# ---------- Cohen-Macaulay ----------

def test_cm_checks(circle, two_disjoint_edges):
    assert cm_checks(circle).is_cm
    report = cm_checks(two_disjoint_edges)
    assert not report.is_cm and not report.is_sequentially_acyclic


def test_triangle_with_whisker_is_sequentially_cm():
    report = cm_checks(from_facets(4, [(0, 1, 2), (2, 3)]))
    assert report.to_dict() == {
        "is_CM_over_Q": False,
        "is_sequentially_acyclic_over_Q": True,
        "is_sequentially_CM_over_Q": True,
    }


def test_degenerate_complex_fails_all_checks():
    report = cm_checks(degenerate_complex())
    assert not (report.is_cm or report.is_sequentially_acyclic or report.is_sequentially_cm)


@pytest.mark.slow
def test_k_equal_partition_lattice_is_sequentially_cm():
    delta = order_complex(proper_part(k_equal_partition_lattice(6, 3)))
    report = cm_checks(delta)
    # facets of dimension 1 and 2, so not Cohen-Macaulay
    assert not report.is_cm
    assert report.is_sequentially_acyclic
    assert report.is_sequentially_cm


# ---------- cycles ----------

def test_fundamental_cycle_of_hexagon():
    P = proper_part(boolean(3))
    cycle = fundamental_cycle(P, range(len(P)))
    assert cycle.dim == 1
    assert len(cycle.coefficients) == 6
    assert set(abs(v) for v in cycle.coefficients.values()) == {1}
    assert independent_in_homology(P, [cycle])
    assert cycle_rank(P, [cycle, cycle]) == 1


def test_splitting_cycles_are_a_basis_of_partition_lattice_homology():
    P = proper_part(partition_lattice(4))
    sigmas = [list(head) + [4] for head in permutations([1, 2, 3])]
    cycles = [fundamental_cycle(P, splitting_subposet(P, sigma)) for sigma in sigmas]
    # each splitting family of a word of length 4 is a hexagon inside Pi_4-bar
    assert all(cycle.dim == 1 and len(cycle.coefficients) == 6 for cycle in cycles)
    assert cycle_rank(P, cycles) == 6
    assert independent_in_homology(P, cycles)
    assert poset_homology(P).betti == {1: 6}


def test_fundamental_cycle_needs_a_sphere():
    P = proper_part(boolean(3))
    with pytest.raises(NotASphereError):
        fundamental_cycle(P, [0, 1, 2])


def test_order_complex_homology_matches_poset_homology():
    P = proper_part(boolean(4))
    assert homology(order_complex(P)).betti == poset_homology(P).betti == {2: 1}
