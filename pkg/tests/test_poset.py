"""Tests for src.poset: construction, derived posets, Mobius function, structure."""

import pytest
from hypothesis import given, settings

from src.complex import order_complex
from src.exceptions import CycleError, IncomparableError, NotBoundedError, PosetError
from src.families import boolean, partition_lattice
from src.poset import (
    antichain, bounded_extension, chain_poset, derive, direct_product, dual, from_covers,
    is_lattice, maximal_chains, mobius, mobius_hat, mobius_invariant, open_interval,
    ordinal_join, poset_from_dict, poset_to_dict, proper_part, rank_sizes, structure_queries,
)
from tests.strategies import posets


# ---------- construction ----------

def test_from_covers_reduces_redundant_pairs():
    P = from_covers(["a", "b", "c"], [(0, 1), (1, 2), (0, 2)])
    assert P.covers == ((0, 1), (1, 2))
    assert P.leq(0, 2)


def test_from_covers_rejects_cycle():
    with pytest.raises(CycleError) as info:
        from_covers(["a", "b", "c"], [(0, 1), (1, 2), (2, 0)])
    assert info.value.cycle[0] == info.value.cycle[-1]


@pytest.mark.parametrize("pairs", [[(0, 3)], [(1, 1)]])
def test_from_covers_rejects_bad_pairs(pairs):
    with pytest.raises(PosetError):
        from_covers(["a", "b", "c"], pairs)


def test_bounds(v_poset, diamond):
    assert v_poset.bottom() == 0
    assert v_poset.top() is None
    assert not v_poset.is_bounded()
    assert diamond.is_bounded()
    assert antichain(0).bottom() is None


def test_meet_and_join(diamond, v_poset):
    assert diamond.join(1, 2) == 3
    assert diamond.meet(1, 2) == 0
    assert v_poset.join(1, 2) is None


def test_io_round_trip_keeps_order():
    P = partition_lattice(3)
    Q = poset_from_dict(poset_to_dict(P))
    assert Q.labels == P.labels
    assert Q.covers == P.covers


def test_from_dict_needs_keys():
    with pytest.raises(PosetError):
        poset_from_dict({"labels": ["a"]})


# ---------- derived posets ----------

def test_proper_part_of_boolean():
    P = proper_part(boolean(3))
    assert len(P) == 6
    assert P.bottom() is None and P.top() is None


def test_proper_part_drops_only_existing_bounds(v_poset):
    assert len(proper_part(v_poset)) == 2


def test_bounded_extension_adds_fresh_bounds(diamond):
    hat = bounded_extension(diamond)
    assert len(hat) == 6
    assert hat.labels[0] == "0^" and hat.labels[-1] == "1^"
    assert hat.parent_ids[1:-1] == (0, 1, 2, 3)


def test_open_interval_of_cover_is_empty(diamond):
    assert len(open_interval(diamond, 0, 1)) == 0
    assert len(open_interval(diamond, 0, 3)) == 2
    with pytest.raises(IncomparableError):
        open_interval(diamond, 1, 2)


def test_dual_reverses_order(v_poset):
    D = dual(v_poset)
    assert D.top() == 0
    assert D.leq(1, 0)


def test_derive_dispatch(diamond):
    assert len(derive(diamond, "upper_set", 1)) == 2
    assert len(derive(diamond, "lower_set", 3, strict=True)) == 3
    with pytest.raises(PosetError):
        derive(diamond, "open_interval", 0)
    with pytest.raises(PosetError):
        derive(diamond, "no_such_kind")


# ---------- Mobius ----------

@pytest.mark.parametrize("n", range(0, 6))
def test_boolean_mobius(n):
    assert mobius_invariant(boolean(n)) == (-1) ** n


@pytest.mark.parametrize("n,expected", [(1, 1), (2, -1), (3, 2), (4, -6), (5, 24)])
def test_partition_lattice_mobius(n, expected):
    assert mobius_invariant(partition_lattice(n)) == expected


def test_chain_mobius():
    assert mobius_invariant(chain_poset(2)) == -1
    assert mobius_invariant(chain_poset(4)) == 0


@pytest.mark.parametrize("n", range(0, 5))
def test_antichain_mobius_hat(n):
    assert mobius_hat(antichain(n)) == n - 1


def test_mobius_needs_comparable_pair(v_poset):
    with pytest.raises(IncomparableError):
        mobius(v_poset, 1, 2)
    with pytest.raises(NotBoundedError):
        mobius_invariant(v_poset)


def test_mobius_is_multiplicative_on_products():
    P, Q = boolean(2), partition_lattice(3)
    assert mobius_invariant(direct_product(P, Q)) == mobius_invariant(P) * mobius_invariant(Q)


def test_ordinal_join_of_antichains():
    # 0 < two atoms < three elements < 1
    P = ordinal_join(antichain(2), antichain(3))
    assert mobius_hat(P) == -(1 * 2)


@settings(max_examples=60, deadline=None)
@given(posets())
def test_mobius_hat_is_reduced_euler_characteristic(P):
    assert mobius_hat(P) == order_complex(P).reduced_euler_characteristic()


@settings(max_examples=40, deadline=None)
@given(posets())
def test_dual_has_same_mobius_hat(P):
    assert mobius_hat(dual(P)) == mobius_hat(P)


# ---------- structure ----------

def test_structure_of_boolean_3():
    report = structure_queries(boolean(3))
    assert report.is_lattice and report.is_bounded and report.is_pure
    assert report.length == 3
    assert len(report.atoms) == 3
    assert len(report.maximal_chains) == 6
    assert report.to_dict()["rank"] == {"0": 0, "1": 1, "2": 1, "3": 2, "4": 1, "5": 2, "6": 2, "7": 3}


def test_rank_sizes_of_partition_lattice():
    assert rank_sizes(partition_lattice(4)) == [1, 6, 7, 1]


def test_non_lattice(v_poset):
    assert not is_lattice(v_poset)
    assert len(maximal_chains(v_poset)) == 2
