"""Tests for src.oracles: counting formulas, integer partitions, truncated series, Betti generating functions."""

import pytest
from hypothesis import given, settings
from sympy import Rational, Symbol, expand

from src.exceptions import InfeasibleSizeError, OracleError
from src.oracles import (
    IntegerPartition, TruncatedSeries, alternating_permutations, betti_gf, bouc_betti, catalan,
    chessboard_connectivity, cos_series, counting, d_euler, d_euler_enumerated, derangements,
    derangements_enumerated, descent_class, descent_class_enumerated, descent_class_q,
    descent_class_q_enumerated, double_factorial, euler_number, exp_series, k_equal_betti,
    laplacian_eigenvalue, matching_partitions, partition_tools, partitions_of, signed_descent_class,
    signed_descent_class_enumerated, sin_series, tangent_numbers, zigzag_numbers,
)
from tests.strategies import integer_partitions

EULER = [1, 1, 1, 2, 5, 16, 61, 272]


# ---------- counting ----------

def test_derangements():
    assert [derangements(n) for n in range(7)] == [1, 0, 1, 2, 9, 44, 265]
    assert derangements_enumerated(5) == 44
    with pytest.raises(OracleError):
        derangements(-1)


def test_euler_numbers_three_ways():
    assert [euler_number(m) for m in range(8)] == EULER
    assert zigzag_numbers(7) == EULER
    assert alternating_permutations(5) == 16
    assert tangent_numbers(3) == [1, 2, 16]


@pytest.mark.parametrize("n,d,expected", [(2, 2, 2), (3, 2, 16), (2, 3, 9)])
def test_d_euler(n, d, expected):
    assert d_euler(n, d) == expected
    assert d_euler_enumerated(n, d) == expected


def test_d_euler_needs_blocks_of_two_or_more():
    with pytest.raises(OracleError):
        d_euler(3, 1)


@pytest.mark.parametrize("R,count", [((1,), 3), ((2,), 5), ((1, 3), 5), ((1, 2), 3), ((1, 2, 3), 1), ((), 1)])
def test_descent_class(R, count):
    assert descent_class(4, R) == count
    assert descent_class_enumerated(4, R) == count


def test_descent_class_q():
    q = Symbol("q")
    # 213 and 312
    assert expand(descent_class_q(3, [1]) - (q + q ** 2)) == 0
    assert descent_class_q(3, [1], q=1) == 2
    assert expand(descent_class_q(4, [2]) - descent_class_q_enumerated(4, [2])) == 0


def test_descent_positions_are_checked():
    with pytest.raises(OracleError):
        descent_class(4, [4])
    with pytest.raises(OracleError):
        signed_descent_class(3, [3])


def test_signed_descent_classes():
    assert signed_descent_class(2, []) == 1
    assert signed_descent_class(2, [0, 1]) == 1
    assert sum(signed_descent_class(2, R) for R in ([], [0], [1], [0, 1])) == 8
    for R in ([], [0], [1, 2], [0, 1, 2]):
        assert signed_descent_class(3, R) == signed_descent_class_enumerated(3, R)


def test_enumeration_guards():
    with pytest.raises(InfeasibleSizeError):
        derangements_enumerated(10)
    with pytest.raises(InfeasibleSizeError):
        signed_descent_class_enumerated(8, [0])


def test_classical_numbers():
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [double_factorial(n) for n in (-1, 0, 5, 6, 7)] == [1, 1, 15, 48, 105]
    with pytest.raises(OracleError):
        double_factorial(-2)


@pytest.mark.parametrize("n,k,betti", [
    (3, 3, {-1: 1}),
    (4, 3, {0: 3}),
    (4, 2, {1: 6}),
    (6, 3, {1: 10, 2: 10}),
])
def test_k_equal_betti(n, k, betti):
    assert k_equal_betti(n, k) == betti


def test_chessboard_connectivity():
    assert chessboard_connectivity(5, 5) == 2
    assert chessboard_connectivity(2, 3) == chessboard_connectivity(3, 2) == 1


def test_counting_dispatch():
    assert counting("derangements", 4) == 9
    assert counting("catalan", 3) == 5
    with pytest.raises(OracleError):
        counting("fibonacci", 3)
    with pytest.raises(OracleError):
        counting("catalan", "x")


# ---------- integer partitions ----------

def test_integer_partition_tools():
    tools = partition_tools([3, 1])
    assert tools["conjugate"] == [2, 1, 1]
    assert tools["durfee_rank"] == 1
    assert tools["frobenius"] == [[2], [1]]
    assert tools["hook_lengths"] == [[4, 2, 1], [1]]
    assert tools["dim_specht"] == 3
    assert tools["content"] == 2
    assert not tools["is_self_conjugate"]
    assert IntegerPartition.from_parts([2, 2]).is_self_conjugate()


@pytest.mark.parametrize("parts", [[1, 2], [2, 0]])
def test_invalid_partitions(parts):
    with pytest.raises(OracleError):
        IntegerPartition.from_parts(parts)


def test_partitions_of_four():
    parts = [lam.parts for lam in partitions_of(4)]
    assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@settings(max_examples=60, deadline=None)
@given(integer_partitions())
def test_content_sum_is_negated_by_conjugation(parts):
    lam = IntegerPartition.from_parts(parts)
    assert laplacian_eigenvalue(lam.parts) == lam.content_sum()
    assert laplacian_eigenvalue(lam.conjugate().parts) == -lam.content_sum()
    assert lam.conjugate().conjugate() == lam


def test_matching_partitions_keep_alpha_dominant_shapes():
    shapes = matching_partitions(4)
    assert [lam.parts for lam in shapes] == [(4,), (3, 1), (2, 2)]
    assert [laplacian_eigenvalue(lam.parts) for lam in shapes] == [6, 2, 0]
    # (2,2,2), (3,1,1,1) and (2,2,1,1) have alpha_1 < beta_1
    assert {laplacian_eigenvalue(lam.parts) for lam in matching_partitions(6)} == {0, 3, 5, 9, 15}
    assert matching_partitions(0) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_matching_partition_contents_are_nonnegative(n):
    assert all(lam.content_sum() >= 0 for lam in matching_partitions(n))
    assert all(lam.durfee_rank() >= 1 for lam in matching_partitions(n))


@pytest.mark.parametrize("n,k,beta", [(3, 1, 2), (4, 1, 2), (4, 2, 0), (5, 2, 6)])
def test_bouc_betti(n, k, beta):
    assert bouc_betti(n, k) == beta


# ---------- series ----------

def test_series_identities():
    order = 8
    u = TruncatedSeries.variable(order)
    assert exp_series(order).log() == u
    assert cos_series(order) ** 2 + sin_series(order) ** 2 == TruncatedSeries.constant(1, order)
    arcsin = sin_series(order).compositional_inverse()
    assert arcsin[3] == Rational(1, 6)
    assert sin_series(order).compose(arcsin) == u
    assert u.exp() == exp_series(order)


def test_series_errors():
    with pytest.raises(OracleError):
        TruncatedSeries.zero(3).reciprocal()
    with pytest.raises(OracleError):
        exp_series(3).exp()
    with pytest.raises(OracleError):
        exp_series(3)[4]


# ---------- Betti generating functions ----------

@pytest.mark.parametrize("family,n,d,k,betti", [
    ("zero_mod_d", 2, 2, None, {0: 2}),
    ("zero_mod_d", 3, 2, None, {1: 16}),
    ("one_mod_d", 1, 2, None, {-1: 1}),
    ("one_mod_d", 2, 2, None, {0: 9}),
    ("k_mod_d", 1, 4, 2, {0: 14}),
    ("k_mod_d", 2, 3, 2, {0: 104}),
    ("at_least_k", 6, None, 3, {0: 9}),
])
def test_betti_gf(family, n, d, k, betti):
    assert betti_gf(family, n, d=d, k=k) == betti


def test_betti_gf_errors():
    with pytest.raises(OracleError):
        betti_gf("two_mod_d", 3, d=2)
    with pytest.raises(OracleError):
        betti_gf("k_mod_d", 3, d=2)
