"""Tests for src.shelling: shellings, EL-labelings, recursive atom orderings, NBC bases."""

import pytest

from src.complex import from_facets, order_complex, simplex_boundary
from src.exceptions import (
    InvalidOrderError, MissingLabelError, NotBoundedError, NotELError, PosetError, PosetTopError,
)
from src.families import (
    boolean, builtin_el_labeling, k_equal_partition_lattice, noncrossing, noncrossing_stanley_labeling,
    partition_lattice,
)
from src.homology import poset_homology
from src.pipeline.suites import crosswise_poset
from src.poset import mobius_invariant, proper_part
from src.shelling import (
    FOUND, NONE, EdgeLabeling, LabelConvention, betti_from_el, decreasing_chains, descent_count,
    descent_set, find_shelling, is_geometric_lattice, is_shelling, lexicographic_chain_order,
    nbc_bases, rank_selected, search_recursive_atom_ordering, verify_el_labeling,
    verify_recursive_atom_ordering,
)


# ---------- shellings ----------

def test_circle_shelling_has_one_homology_facet(circle):
    report = is_shelling(circle, [(0, 1), (0, 2), (1, 2)])
    assert report
    assert report.homology_facet_counts() == {1: 1}


def test_disjoint_edges_are_not_shellable(two_disjoint_edges):
    report = is_shelling(two_disjoint_edges, [(0, 1), (2, 3)])
    assert not report
    assert report.first_violation == 1
    assert find_shelling(two_disjoint_edges).status == NONE


def test_find_shelling_of_sphere():
    result = find_shelling(simplex_boundary(4))
    assert result.status == FOUND
    assert result.homology_facet_counts == {2: 1}
    assert is_shelling(simplex_boundary(4), result.order)


def test_order_must_be_a_permutation(circle):
    with pytest.raises(InvalidOrderError):
        is_shelling(circle, [(0, 1), (0, 2)])


def test_order_complex_of_boolean_is_shellable():
    delta = order_complex(proper_part(boolean(3)))
    assert find_shelling(delta).status == FOUND


# ---------- EL-labelings ----------

@pytest.mark.parametrize("family,n,betti", [
    ("boolean", 3, {1: 1}),
    ("boolean", 4, {2: 1}),
    ("partition", 4, {1: 6}),
    ("noncrossing", 4, {1: 5}),
])
def test_betti_from_builtin_labeling(family, n, betti):
    P = partition_lattice(n) if family == "partition" else boolean(n) if family == "boolean" else noncrossing(n)
    labeling = builtin_el_labeling(family, P)
    assert verify_el_labeling(P, labeling)
    assert betti_from_el(P, labeling) == betti
    assert poset_homology(proper_part(P)).betti == betti


@pytest.mark.parametrize("name", ["lambda1", "lambda2"])
def test_both_partition_labelings_are_el(name):
    P = partition_lattice(4)
    labeling = builtin_el_labeling("partition", P, name)
    assert verify_el_labeling(P, labeling)
    assert len(decreasing_chains(P, labeling)) == 6


def test_stanley_labeling_counts_catalan_chains_but_is_not_el():
    P = noncrossing(4)
    labeling = noncrossing_stanley_labeling(P)
    assert len(decreasing_chains(P, labeling)) == abs(mobius_invariant(P)) == 5
    assert not verify_el_labeling(P, labeling)


def test_constant_labeling_is_not_el(diamond):
    labeling = EdgeLabeling({edge: (0,) for edge in diamond.covers})
    report = verify_el_labeling(diamond, labeling)
    assert not report
    assert report.failing_interval == (0, 3)
    with pytest.raises(NotELError):
        betti_from_el(diamond, labeling)


def test_labeling_must_cover_every_edge(diamond):
    with pytest.raises(MissingLabelError):
        verify_el_labeling(diamond, EdgeLabeling({(0, 1): (1,)}))


def test_el_needs_bounds(v_poset):
    with pytest.raises(NotBoundedError):
        verify_el_labeling(v_poset, EdgeLabeling({edge: (1,) for edge in v_poset.covers}))


def test_descent_set_conventions():
    assert descent_set([(3,), (1,), (2,)]) == (1,)
    assert descent_set([(1,), (1,)]) == (1,)
    assert descent_set([(1,), (1,)], LabelConvention.WEAK_ASCENT) == ()


def test_lexicographic_first_chain_is_increasing():
    P = boolean(3)
    labeling = builtin_el_labeling("boolean", P)
    first = lexicographic_chain_order(P, labeling)[0]
    assert labeling.word(first.elements) == ((1,), (2,), (3,))


EL_FAMILIES = {
    "partition_4": ("partition", lambda: partition_lattice(4), {1: 6}),
    "boolean_4": ("boolean", lambda: boolean(4), {2: 1}),
    "k_equal_5_3": ("k_equal", lambda: k_equal_partition_lattice(5, 3), {1: 6}),
    "k_equal_6_3": ("k_equal", lambda: k_equal_partition_lattice(6, 3), {1: 10, 2: 10}),
}


def _proper_facets(P, chains):
    """Maximal chains of P with their bounds dropped, in the ids of proper_part(P)."""
    Q = proper_part(P)
    position = {old: new for new, old in enumerate(Q.parent_ids)}
    return Q, [tuple(position[x] for x in chain.elements[1:-1]) for chain in chains]


@pytest.mark.parametrize("name", sorted(EL_FAMILIES))
def test_lexicographic_order_shells_both_order_complexes(name):
    family, build, betti = EL_FAMILIES[name]
    P = build()
    order = lexicographic_chain_order(P, builtin_el_labeling(family, P))

    bounded = is_shelling(order_complex(P), [chain.elements for chain in order])
    assert bounded
    # Delta(P) is a cone over the bottom
    assert bounded.homology_facet_counts() == {}

    Q, facets = _proper_facets(P, order)
    proper = is_shelling(order_complex(Q), facets)
    assert proper
    assert proper.homology_facet_counts() == betti == poset_homology(Q).betti


@pytest.mark.parametrize("name", ["boolean_4", "k_equal_5_3", "partition_4"])
def test_shelling_search_agrees_with_atom_orderings(name):
    family, build, betti = EL_FAMILIES[name]
    P = build()
    shelling = find_shelling(order_complex(proper_part(P)))
    atoms = search_recursive_atom_ordering(P)
    assert shelling.status == FOUND
    assert (atoms.status == FOUND) == (shelling.status == FOUND)
    assert verify_recursive_atom_ordering(P, atoms.certificate)
    assert shelling.homology_facet_counts == betti


# ---------- rank selection ----------

@pytest.mark.parametrize("ranks,count", [((1,), 3), ((1, 3), 5), ((2,), 5), ((1, 2, 3), 1)])
def test_boolean_rank_selection_counts_descent_classes(ranks, count):
    P = boolean(4)
    labeling = builtin_el_labeling("boolean", P)
    assert descent_count(P, labeling, ranks) == count
    assert poset_homology(rank_selected(P, ranks)).betti == {len(ranks) - 1: count}


@pytest.mark.parametrize("ranks", [[3], [0, 1], [-1]])
def test_rank_selection_rejects_bounds(ranks):
    with pytest.raises(PosetError) as excinfo:
        rank_selected(boolean(3), ranks)
    assert isinstance(excinfo.value, PosetTopError)
    assert "1..2" in str(excinfo.value)


# ---------- recursive atom orderings ----------

def test_boolean_has_a_recursive_atom_ordering():
    P = boolean(3)
    result = search_recursive_atom_ordering(P)
    assert result.status == FOUND
    assert verify_recursive_atom_ordering(P, result.certificate)


def test_crosswise_poset_has_none():
    result = search_recursive_atom_ordering(crosswise_poset())
    assert result.status == NONE
    assert not result


# ---------- NBC bases ----------

@pytest.mark.parametrize("P", [boolean(3), partition_lattice(4)], ids=["boolean_3", "partition_4"])
def test_nbc_count_is_mobius(P):
    assert is_geometric_lattice(P)
    assert len(nbc_bases(P)) == abs(mobius_invariant(P))


def test_noncrossing_is_not_geometric():
    assert not is_geometric_lattice(noncrossing(4))


def test_non_pure_complex_shelling():
    # triangle then a dangling edge: a nonpure shelling
    delta = from_facets(4, [(0, 1, 2), (2, 3)])
    assert is_shelling(delta, [(0, 1, 2), (2, 3)])
