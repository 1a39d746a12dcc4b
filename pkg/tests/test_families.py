"""Tests for src.families: constructors, guards, registry, labelings, actions."""

import pytest

from src.complex import simplex, simplex_boundary
from src.exceptions import FamilyError, InfeasibleSizeError, UnknownFamilyError, UnsupportedLabelingError
from src.families import (
    FamilySpec, boolean, bruhat, build_family, builtin_el_labeling, canonical, chessboard_complex,
    colored_chessboard_complex, cross_polytope_face_lattice, divisor_lattice, family_names, fixed_letters,
    gaussian_binomial, graph_property_poset, inflation, is_noncrossing, is_subword,
    k_equal_partition_lattice, letter_action, matching_complex, merged_pair, n_cycle, noncrossing,
    partition_lattice, refines, splitting_partitions, subspace_lattice, symmetric_group_generators,
    truncated_boolean, type_b_partition_lattice, word_count, word_poset,
)
from src.homology import homology, poset_homology
from src.poset import is_lattice, mobius_invariant, proper_part


# ---------- partitions ----------

@pytest.mark.parametrize("n,bell", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
def test_partition_lattice_sizes_are_bell_numbers(n, bell):
    assert len(partition_lattice(n)) == bell


def test_noncrossing_sizes_are_catalan_numbers():
    assert [len(noncrossing(n)) for n in range(1, 6)] == [1, 2, 5, 14, 42]


def test_partition_helpers():
    assert canonical([[3, 1], [2]]) == ((1, 3), (2,))
    assert not is_noncrossing(canonical([[1, 3], [2, 4]]))
    assert is_noncrossing(canonical([[1, 4], [2, 3]]))
    assert refines(canonical([[1], [2], [3]]), canonical([[1, 2, 3]]))
    assert not refines(canonical([[1, 2], [3]]), canonical([[1, 3], [2]]))
    assert merged_pair(canonical([[1], [2], [3]]), canonical([[1, 3], [2]])) == ((1,), (3,))
    with pytest.raises(FamilyError):
        merged_pair(canonical([[1], [2], [3]]), canonical([[1, 2, 3]]))


def test_splitting_partitions_form_a_boolean_family():
    parts = splitting_partitions([2, 1, 3])
    assert len(parts) == 4
    assert ((1, 2, 3),) in parts and ((1, 2), (3,)) in parts
    with pytest.raises(FamilyError):
        splitting_partitions([1, 1])


def test_block_restricted_families():
    # {1234} and the three perfect pairings
    assert len(build_family(FamilySpec.from_args("zero_mod", ["4", "2"]))) == 4
    # 1|2|3 and 123
    assert len(build_family(FamilySpec.from_args("one_mod", ["3", "2"]))) == 2
    # singletons, the four triples with a singleton, and the whole set
    assert len(k_equal_partition_lattice(4, 3)) == 6


def test_type_b_small_cases():
    assert len(type_b_partition_lattice(1)) == 2
    P = type_b_partition_lattice(2)
    assert len(P) == 6
    assert poset_homology(proper_part(P)).betti == {0: 3}


# ---------- lattices ----------

def test_boolean_ids_are_bitmasks():
    P = boolean(3)
    assert P.labels[5] == "{1,3}"
    assert P.leq(1, 5) and not P.leq(2, 5)
    assert len(boolean(0)) == 1


def test_truncated_boolean():
    P = truncated_boolean(4, 2)
    assert len(P) == 10
    # permutations of [4] with descent set {1, 2}
    assert poset_homology(P).betti == {1: 3}
    with pytest.raises(FamilyError):
        truncated_boolean(3, 3)


def test_subspace_lattice():
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 4, 2) == 0
    assert len(subspace_lattice(2, 2)) == 5
    P = subspace_lattice(3, 2)
    assert len(P) == 16
    assert mobius_invariant(P) == -(2 ** 3)


@pytest.mark.parametrize("n,size,mu", [(12, 6, 0), (30, 8, -1), (1, 1, 1)])
def test_divisor_lattice(n, size, mu):
    P = divisor_lattice(n)
    assert len(P) == size
    assert mobius_invariant(P) == mu


def test_cross_polytope_of_a_square():
    P = cross_polytope_face_lattice(2)
    # empty face, 4 vertices, 4 edges, the square
    assert len(P) == 10
    assert mobius_invariant(P) == -1


def test_bruhat_order_of_s3():
    P = bruhat(3)
    assert len(P) == 6
    assert not is_lattice(P)
    assert poset_homology(proper_part(P)).betti == {1: 1}


# ---------- words and graphs ----------

@pytest.mark.parametrize("n,k,kind,count", [
    (3, 3, "injective", 16),
    (3, 2, "normal", 10),
    (2, 2, "all", 7),
    (2, 3, "injective", 5),
])
def test_word_counts(n, k, kind, count):
    assert word_count(n, k, kind) == count
    assert len(word_poset(n, k, kind)) == count


def test_subword_order():
    assert is_subword((1, 3), (1, 2, 3))
    assert not is_subword((3, 1), (1, 2, 3))
    assert is_subword((), (2,))
    P = word_poset(3, 2)
    assert P.bottom() == 0 and P.labels[0] == "e"
    with pytest.raises(FamilyError):
        word_poset(2, 2, "cyclic")


def test_graph_property_posets():
    # the empty graph and the three single edges
    assert len(graph_property_poset(3, "disconnected")) == 4
    # three paths and the triangle
    assert len(graph_property_poset(3, "connected")) == 4
    assert len(graph_property_poset(4, "disconnected")) == 64 - 38
    with pytest.raises(FamilyError):
        graph_property_poset(3, "not_k_connected")
    with pytest.raises(FamilyError):
        graph_property_poset(3, "planar")


# ---------- complexes ----------

def test_matching_complexes():
    m4 = matching_complex(4)
    assert m4.vertex_count == 6 and len(m4.facets) == 3
    assert homology(m4).betti == {0: 2}
    m5 = matching_complex(5)
    assert m5.vertex_count == 10
    assert homology(m5).betti == {1: 6}


def test_chessboard_complexes():
    hexagon = chessboard_complex(2, 3)
    assert len(hexagon.facets) == 6
    assert homology(hexagon).betti == {1: 1}
    assert homology(chessboard_complex(3, 2)).betti == {1: 1}
    assert homology(chessboard_complex(1, 3)).betti == {0: 2}


def test_inflation():
    points = inflation(simplex(1), [3])
    assert homology(points).betti == {0: 2}
    circle = simplex_boundary(3)
    inflated = inflation(circle, [2, 1, 1])
    assert inflated.vertex_count == 4
    assert len(inflated.facets) == 5
    assert inflated.vertex_labels[:2] == ("0:1", "0:2")
    with pytest.raises(FamilyError):
        inflation(circle, [1, 1])
    with pytest.raises(FamilyError):
        inflation(circle, [1, 0, 1])


def test_colored_chessboard_facet_count():
    delta = colored_chessboard_complex(2, 3, 2)
    assert delta.vertex_count == 12
    assert len(delta.facets) == 6 * 4


# ---------- guards ----------

@pytest.mark.parametrize("build", [
    lambda: partition_lattice(10),
    lambda: boolean(15),
    lambda: type_b_partition_lattice(6),
    lambda: bruhat(6),
    lambda: matching_complex(10),
    lambda: chessboard_complex(8, 2),
    lambda: graph_property_poset(7, "connected"),
], ids=["partition", "boolean", "type_b", "bruhat", "matching", "chessboard", "graphs"])
def test_feasibility_guards(build):
    with pytest.raises(InfeasibleSizeError):
        build()


# ---------- registry ----------

def test_family_spec_parsing():
    assert FamilySpec.from_args("graphs", ["4", "connected"]).values == {"n": 4, "predicate": "connected"}
    spec = FamilySpec.from_args("block_sizes", ["6", "3", "4"])
    assert spec.values == {"n": 6, "sizes": (3, 4)}
    assert spec.describe() == "block_sizes 6 3 4"
    assert FamilySpec.from_args("partition", ["4"]).describe() == "partition 4"
    assert FamilySpec.from_args("matching", ["5"]).kind == "complex"


@pytest.mark.parametrize("name,tokens", [
    ("no_such_family", []),
    ("partition", []),
    ("partition", ["x"]),
    ("partition", ["4", "5"]),
])
def test_family_spec_errors(name, tokens):
    with pytest.raises(UnknownFamilyError):
        FamilySpec.from_args(name, tokens)


def test_build_family():
    assert len(build_family(FamilySpec.from_args("noncrossing", ["4"]))) == 14
    assert build_family(FamilySpec.from_args("chessboard", ["2", "3"])).vertex_count == 6
    assert "partition" in family_names() and "matching" in family_names()


# ---------- labelings ----------

def test_unknown_labeling():
    with pytest.raises(UnsupportedLabelingError):
        builtin_el_labeling("bruhat", bruhat(3))
    with pytest.raises(UnsupportedLabelingError):
        builtin_el_labeling("boolean", boolean(2), "lambda1")


# ---------- actions ----------

def test_letter_action_on_subsets():
    assert letter_action(boolean(2), [2, 1], "subset") == [0, 2, 1, 3]
    with pytest.raises(FamilyError):
        letter_action(boolean(2), [1, 1], "subset")


def test_letter_action_fixes_the_whole_set():
    P = partition_lattice(3)
    image = letter_action(P, n_cycle(3), "partition")
    assert sorted(image) == list(range(len(P)))
    assert image[P.top()] == P.top()
    assert image[P.bottom()] == P.bottom()


def test_permutation_helpers():
    assert n_cycle(3) == (2, 3, 1)
    assert fixed_letters((1, 3, 2)) == [1]
    assert symmetric_group_generators(1) == [(1,)]
    generators = symmetric_group_generators(4)
    assert all(sorted(g) == [1, 2, 3, 4] for g in generators)
