"""Shared fixtures: small posets and complexes used across the test modules."""

import pytest

from src.complex import from_facets, simplex_boundary
from src.poset import from_covers


@pytest.fixture
def v_poset():
    """a < b, a < c."""
    return from_covers(["a", "b", "c"], [(0, 1), (0, 2)])


@pytest.fixture
def diamond():
    """Boolean lattice B_2 written out by hand."""
    return from_covers(["0", "x", "y", "1"], [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def circle():
    """Boundary of a triangle."""
    return simplex_boundary(3)


@pytest.fixture
def two_disjoint_edges():
    return from_facets(4, [(0, 1), (2, 3)])

