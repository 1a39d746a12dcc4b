"""Tests for src.identities: Euler, Kunneth, duality, fiber, closure and Lefschetz checks."""

import pytest
from hypothesis import given, settings

from src.complex import face_poset, from_facets, simplex_boundary
from src.exceptions import (
    HypothesisError, IdentityError, MissingBoundError, NotAClosureError, NotALatticeError,
    NotOrderPreservingError,
)
from src.families import (
    FamilySpec, boolean, build_family, chessboard_complex, partition_lattice, word_poset,
)
from src.identities import (
    GroupElementAction, PosetMap, alexander_duality_check, closure_check, compare, crosscut_check,
    crosscut_complex, euler_poincare_check, fixed_point_lefschetz, general_fiber_betti_check,
    inflation_betti_check, jsonable, kunneth_checks, mobius_betti_check, philip_hall_check,
    quillen_fiber_check, whitney_betti,
)
from src.pipeline.suites import v_inflation_map
from src.poset import antichain, bounded_extension, chain_poset, dual, from_covers, proper_part
from tests.strategies import posets


# ---------- results ----------

def test_compare_and_jsonable():
    check = compare("demo", {1: 2}, {1: 2})
    assert check
    assert check.to_dict() == {"name": "demo", "holds": True, "lhs": {"1": 2}, "rhs": {"1": 2}, "detail": ""}
    assert not compare("demo", 1, 2)
    assert jsonable({10: 1, 2: {3}}) == {"2": [3], "10": 1}


# ---------- Euler characteristic ----------

@settings(max_examples=40, deadline=None)
@given(posets())
def test_philip_hall_on_random_posets(P):
    assert philip_hall_check(P)


def test_philip_hall_on_empty_poset():
    check = philip_hall_check(antichain(0))
    assert check and check.lhs == -1


def test_euler_poincare(circle):
    check = euler_poincare_check(circle)
    assert check and check.lhs == -1
    assert euler_poincare_check(chessboard_complex(3, 3))


def test_mobius_betti():
    check = mobius_betti_check(proper_part(partition_lattice(4)))
    assert check and check.lhs == 6
    assert mobius_betti_check(antichain(3)).lhs == 2


def test_mobius_betti_needs_top_homology():
    # a 3-chain next to an isolated point
    P = from_covers(["a", "b", "c", "d"], [(0, 1), (1, 2)])
    with pytest.raises(HypothesisError):
        mobius_betti_check(P)


# ---------- Kunneth ----------

def test_kunneth_join_of_two_point_sets():
    check = kunneth_checks(antichain(2), antichain(2), "join")
    assert check
    assert check.lhs == {1: 1}


def test_kunneth_reduced_product(v_poset):
    check = kunneth_checks(v_poset, v_poset, "reduced_product")
    assert check
    assert check.rhs == {1: 1}


def test_kunneth_doubly_bounded():
    check = kunneth_checks(boolean(1), boolean(1), "doubly_bounded")
    assert check
    assert check.lhs == {0: 1}


def test_kunneth_ordinary_product():
    check = kunneth_checks(antichain(2), antichain(2), "ordinary_product")
    assert check
    assert check.lhs == {0: 4}


@pytest.mark.parametrize("kind", ["join", "ordinary_product"])
def test_kunneth_with_chains(kind):
    assert kunneth_checks(chain_poset(3), partition_lattice(3), kind)


def test_kunneth_errors():
    with pytest.raises(HypothesisError):
        kunneth_checks(antichain(2), boolean(1), "reduced_product")
    with pytest.raises(HypothesisError):
        kunneth_checks(antichain(0), boolean(1), "ordinary_product")
    with pytest.raises(IdentityError):
        kunneth_checks(boolean(1), boolean(1), "tensor")


# ---------- Alexander duality ----------

def test_alexander_duality_in_a_circle():
    ambient = proper_part(boolean(3))
    assert alexander_duality_check(ambient, range(len(ambient)))
    # one vertex against the remaining path
    assert alexander_duality_check(ambient, [0])


def test_alexander_duality_needs_a_sphere():
    with pytest.raises(HypothesisError):
        alexander_duality_check(antichain(3), [0])
    with pytest.raises(IdentityError):
        alexander_duality_check(proper_part(boolean(3)), [99])


# ---------- fibers ----------

def test_poset_map_validation(v_poset, diamond):
    with pytest.raises(NotOrderPreservingError):
        PosetMap(diamond, diamond, [3, 1, 2, 0])
    with pytest.raises(IdentityError):
        PosetMap(v_poset, v_poset, [0, 1])
    f = PosetMap.identity(diamond)
    assert f.fiber_ids(3, strict=True) == [0, 1, 2]


def test_quillen_fiber_lemma(diamond):
    assert quillen_fiber_check(PosetMap.identity(proper_part(boolean(3))))
    assert quillen_fiber_check(PosetMap.constant(diamond))
    with pytest.raises(HypothesisError):
        quillen_fiber_check(PosetMap.constant(antichain(2)))


def test_general_fiber_on_inflated_v():
    check = general_fiber_betti_check(v_inflation_map())
    assert check
    # K_{2,4} has 8 edges on 6 vertices
    assert check.lhs == {1: 3}


def test_inflation_betti(circle):
    assert inflation_betti_check(circle, [2, 1, 1])
    assert inflation_betti_check(chessboard_complex(2, 3), [2] * 6)
    with pytest.raises(HypothesisError):
        inflation_betti_check(from_facets(4, [(0, 1), (2, 3)]), [1, 1, 1, 1])


def test_closure_adding_an_element():
    B = boolean(4)
    keep = [x for x in range(len(B)) if B.elements[x] not in ((), (1, 2, 3), (1, 2, 3, 4))]
    P = B.induced(keep)
    index = {element: i for i, element in enumerate(P.elements)}
    cl = [index[tuple(sorted(set(element) | {4}))] for element in P.elements]
    check = closure_check(P, cl)
    assert check
    assert check.lhs == {"dims": {}}


def test_closure_validation(diamond):
    with pytest.raises(NotAClosureError):
        closure_check(diamond, [0, 1, 2])
    # not inflationary
    with pytest.raises(NotAClosureError):
        closure_check(diamond, [0, 0, 2, 3])
    # 0 -> 1 -> 3 is not idempotent
    with pytest.raises(NotAClosureError):
        closure_check(diamond, [1, 3, 2, 3])


def test_crosscut():
    gamma = crosscut_complex(boolean(3))
    assert gamma.vertex_count == 3
    assert gamma.facets == ((0, 1), (0, 2), (1, 2))
    assert crosscut_check(boolean(3))
    assert crosscut_check(partition_lattice(4))


def test_crosscut_needs_a_lattice(v_poset):
    with pytest.raises(NotALatticeError):
        crosscut_complex(v_poset)


# ---------- Lefschetz ----------

def test_lefschetz_transposition_on_hexagon():
    P = proper_part(boolean(3))
    g = GroupElementAction.from_letter_permutation(P, [2, 1, 3], "subset")
    # {3} and {1,2} are fixed and incomparable
    assert len(g.fixed_points()) == 2
    check = fixed_point_lefschetz(P, g)
    assert check
    assert check.rhs == 1


@pytest.mark.parametrize("letters", [[1, 2, 3, 4], [2, 3, 4, 1], [2, 1, 4, 3]])
def test_lefschetz_on_partition_lattice(letters):
    P = proper_part(partition_lattice(4))
    assert fixed_point_lefschetz(P, GroupElementAction.from_letter_permutation(P, letters, "partition"))


def test_lefschetz_transposition_on_injective_words():
    P = proper_part(word_poset(3, 3, "injective"))
    g = GroupElementAction.from_letter_permutation(P, [2, 1, 3], "word")
    # only the word 3 survives swapping the letters 1 and 2
    assert [P.elements[x] for x in g.fixed_points()] == [(3,)]
    check = fixed_point_lefschetz(P, g)
    assert check
    assert check.lhs == check.rhs == 0


def test_group_element_must_be_an_automorphism(diamond):
    with pytest.raises(IdentityError):
        GroupElementAction(diamond, [0, 0, 1, 2])
    with pytest.raises(NotOrderPreservingError):
        GroupElementAction(diamond, [3, 1, 2, 0])


# ---------- Whitney ----------

def test_whitney_on_two_atoms(v_poset):
    assert whitney_betti(v_poset) == {0: 1}


def test_whitney_on_dual_pairings():
    # the whole set below the three perfect pairings of [4] once reversed
    P = dual(build_family(FamilySpec.from_args("zero_mod", ["4", "2"])))
    assert whitney_betti(P) == {0: 2}


def test_whitney_needs_a_bottom():
    P = proper_part(boolean(3))
    with pytest.raises(MissingBoundError):
        whitney_betti(P)
    assert whitney_betti(boolean(2), assume_cm=True) == {}


def test_whitney_rejects_non_cm(two_disjoint_edges):
    # add a bottom below the face poset of two disjoint edges, drop the top
    hat = bounded_extension(face_poset(two_disjoint_edges))
    P = hat.induced(range(len(hat) - 1))
    with pytest.raises(HypothesisError):
        whitney_betti(P)


def test_simplex_boundary_euler():
    assert euler_poincare_check(simplex_boundary(5))
