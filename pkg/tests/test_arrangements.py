"""Tests for src.arrangements: exact subspaces, intersection lattices, region and Betti counts."""

import pytest
from sympy import symbols

from src.arrangements import (
    AffineSubspace, arrangement_from_dict, braid_partition, braid_partition_map, builtin_arrangement,
    characteristic_polynomial, goresky_macpherson_betti, intersection_semilattice, orlik_solomon_betti,
    read_arrangement, write_arrangement, zaslavsky,
)
from src.exceptions import ArrangementError, InconsistentSubspaceError, NotHyperplaneError
from src.families import partition_lattice
from src.poset import rank_sizes


# ---------- subspaces ----------

def test_affine_subspace_canonical_form():
    line = AffineSubspace.from_system([[1, -1]], [0])
    same = AffineSubspace.from_system([[2, -2]], [0])
    assert line == same
    assert line.is_hyperplane and line.is_central
    assert line.dim == 1 and line.codim == 1
    assert line.label() == "x1 - x2 = 0"


def test_intersections():
    x = AffineSubspace.from_system([[1, 0]], [1])
    y = AffineSubspace.from_system([[0, 1]], [1])
    point = x.intersect(y)
    assert point.dim == 0
    assert x.contains(point)
    assert not point.contains(x)
    assert x.intersect(AffineSubspace.from_system([[1, 0]], [-1])) is None
    with pytest.raises(InconsistentSubspaceError):
        AffineSubspace.from_system([[1, 0], [1, 0]], [0, 1])


def test_arrangement_io(tmp_path):
    A = builtin_arrangement("braid", 3)
    path = tmp_path / "braid.json"
    write_arrangement(A, path)
    B = read_arrangement(path)
    assert B.dim == 3
    assert B.subspaces == A.subspaces
    with pytest.raises(ArrangementError):
        arrangement_from_dict({"dim": 2})


@pytest.mark.parametrize("kind,n,k", [("k_equal", 3, 4), ("k_equal", 3, None), ("hexagonal", 3, None)])
def test_builtin_arrangement_errors(kind, n, k):
    with pytest.raises(ArrangementError):
        builtin_arrangement(kind, n, k)


# ---------- intersection lattice ----------

def test_braid_lattice_is_partition_lattice():
    L = intersection_semilattice(builtin_arrangement("braid", 4))
    Pi = partition_lattice(4)
    assert len(L) == 15
    assert rank_sizes(L) == rank_sizes(Pi)
    mapping = braid_partition_map(L, Pi)
    assert sorted(mapping) == list(range(15))
    assert all(Pi.leq(mapping[a], mapping[b]) for a, b in L.covers)
    assert braid_partition(L.elements[0]) == ((1,), (2,), (3,), (4,))


def test_affine_intersections_form_a_semilattice():
    L = intersection_semilattice(builtin_arrangement("type_b_coordinate", 2))
    # the plane, four lines, four points
    assert len(L) == 9
    assert L.top() is None


# ---------- invariants ----------

@pytest.mark.parametrize("kind,n,expected", [
    ("braid", 4, (24, 0)),
    ("type_b_braid", 2, (8, 0)),
    ("coordinate", 3, (8, 0)),
    ("type_b_coordinate", 1, (3, 1)),
    ("type_b_coordinate", 2, (9, 1)),
])
def test_zaslavsky(kind, n, expected):
    assert tuple(zaslavsky(builtin_arrangement(kind, n))) == expected


def test_zaslavsky_needs_hyperplanes():
    with pytest.raises(NotHyperplaneError):
        zaslavsky(builtin_arrangement("k_equal", 4, 3))


def test_characteristic_polynomial_of_braid():
    t = symbols("t")
    chi = characteristic_polynomial(builtin_arrangement("braid", 3))
    assert chi.as_expr().expand() == (t * (t - 1) * (t - 2)).expand()


def test_orlik_solomon_braid():
    assert orlik_solomon_betti(builtin_arrangement("braid", 3, complex_=True)) == {0: 1, 1: 3, 2: 2}


def test_goresky_macpherson():
    braid = builtin_arrangement("braid", 3)
    # six chambers
    assert goresky_macpherson_betti(braid) == {0: 5}
    assert goresky_macpherson_betti(braid, reduced=False) == {0: 6}
    assert goresky_macpherson_betti(builtin_arrangement("k_equal", 4, 3)) == {1: 7}
