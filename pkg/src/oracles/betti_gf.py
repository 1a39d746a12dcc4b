"""
Betti Numbers from Exponential Generating Functions

LEARNING: Restricted block-size partition posets have Betti numbers that can
be read off power series, with no chain complex at all

What we're building:
- at_least_k(n, k): partitions of [n] into blocks of size >= k, from
  -ln(1 + sum_{j>=k} t^floor(j/k) u^j / j!)
- zero_mod_d(n, d): blocks of size divisible by d, N = nd, from
  -ln(sum_j (-1)^j u^jd / (jd)!)
- one_mod_d(n, d): blocks of size 1 mod d, N = nd + 1, from the
  compositional inverse of sum_j (-1)^j u^(jd+1) / (jd+1)!
- k_mod_d(n, d, k): blocks of size k mod d, N = nd + k, with 1 <= k <= d
- betti_gf(family, ...): one entry point for the CLI and the suites

Key Concept:
- Every table is dim -> reduced Betti number of the proper part of the poset
  with a bottom element adjoined
- The proper part of the single-element poset is the empty complex,
  reported as {-1: 1}; a one-element poset of size N = 1 with both bounds
  equal is reported as {-2: 1}
"""

import logging
from math import factorial, gcd
from typing import Dict, List, Optional

from sympy import Integer, S, expand

from src.exceptions import OracleError
from src.oracles.series import T, TruncatedSeries, alternating_block_series

# Set up module logger
logger = logging.getLogger(__name__)

BETTI_GF_FAMILIES = ("at_least_k", "zero_mod_d", "one_mod_d", "k_mod_d")


def _table(values: Dict[int, int]) -> Dict[int, int]:
    return {dim: int(value) for dim, value in sorted(values.items()) if value != 0}


def at_least_k(n: int, k: int) -> Dict[int, int]:
    """
    beta_{m-2} = (-1)^m n! [t^m u^n] of -ln(1 + sum_{j>=k} t^floor(j/k) u^j / j!).

    Raises:
        OracleError: Unless 2 <= k <= n
    """
    if k < 2 or n < k:
        raise OracleError(f"at_least_k needs 2 <= k <= n, got n={n}, k={k}")
    inner = TruncatedSeries.from_function(
        lambda j: T ** (j // k) / factorial(j) if j >= k else (1 if j == 0 else 0), n)
    top = (-inner.log()).egf_coefficient(n)
    return _table({m - 2: (-1) ** m * top.coeff(T, m) for m in range(0, n + 1)})


def zero_mod_d(n: int, d: int) -> Dict[int, int]:
    """beta_{n-2} of the proper part for N = nd."""
    if n < 1 or d < 1:
        raise OracleError(f"zero_mod_d needs n, d >= 1, got n={n}, d={d}")
    size = n * d
    series = -alternating_block_series(d, 0, size).log()
    return _table({n - 2: series.egf_coefficient(size)})


def _one_mod_coefficients(d: int, count: int) -> List[int]:
    """
    c_0..c_count with sum c_r u^(rd+1) / (rd+1)! the compositional inverse of
    sum_r (-1)^r u^(rd+1) / (rd+1)!.
    """
    order = count * d + 1
    inverse = alternating_block_series(d, 1, order).compositional_inverse()
    return [int(inverse.egf_coefficient(r * d + 1)) for r in range(count + 1)]


def one_mod_d(n: int, d: int) -> Dict[int, int]:
    """beta_{n-2} of the proper part for N = nd + 1 (n = 0 gives the {-2: 1} convention)."""
    if n < 0 or d < 1:
        raise OracleError(f"one_mod_d needs n >= 0, d >= 1, got n={n}, d={d}")
    return _table({n - 2: _one_mod_coefficients(d, n)[n]})


def k_mod_d(n: int, d: int, k: int) -> Dict[int, int]:
    """
    Betti numbers for blocks of size k mod d on N = nd + k points.

    LEARNING POINT:
    - Above a partition x with b blocks the poset looks like the 1 mod d0
      partition poset on b points, d0 = d / gcd(k, d); its top Betti number
      is c_r with r = (b - 1) / d0
    - A block of size s = id + k can be refined through floor(i / k0)
      levels, k0 = k / gcd(k, d)
    - Summing (-1)^{m + r} c_r over x by the exponential formula gives
      G = sum_r c_r t^r W^(r d0 + 1) / (r d0 + 1)!, with
      W = sum_i (-t)^floor(i / k0) u^(id+k) / (id+k)!
    - When 1 = k mod d the all-singletons partition is a bottom element: its
      term is removed and every chain loses one level

    Raises:
        OracleError: Unless n >= 0 and 1 <= k <= d
    """
    if n < 0 or d < 1 or not 1 <= k <= d:
        raise OracleError(f"k_mod_d needs n >= 0 and 1 <= k <= d, got n={n}, d={d}, k={k}")
    size = n * d + k
    if size == 1:
        return {-2: 1}
    g = gcd(k, d)
    d0, k0 = d // g, k // g

    blocks = [S.Zero] * (size + 1)
    for i in range((size - k) // d + 1):
        s = i * d + k
        blocks[s] = (-T) ** (i // k0) / Integer(factorial(s))
    W = TruncatedSeries(blocks, size)

    most = (size - 1) // d0
    c = _one_mod_coefficients(d0, most)
    G = TruncatedSeries.zero(size)
    power = W
    W_step = W ** d0
    for r in range(most + 1):
        b = r * d0 + 1
        if b * k > size:
            break
        G = G + power * (c[r] * T ** r / Integer(factorial(b)))
        power = power * W_step
    top = expand(G[size] * factorial(size))

    if (1 - k) % d:
        return _table({m - 1: top.coeff(T, m) for m in range(0, size + 1)})
    bottom_r = (size - 1) // d0
    betti = {}
    for m in range(0, size + 1):
        value = -top.coeff(T, m + 1)
        if m + 1 == bottom_r:
            value += c[bottom_r]
        betti[m - 1] = value
    return _table(betti)


def betti_gf(family: str, n: int, d: Optional[int] = None, k: Optional[int] = None) -> Dict[int, int]:
    """
    Predicted Betti table for a restricted block-size family.

    Args:
        family: One of BETTI_GF_FAMILIES
        n: Points for at_least_k, number of d-steps otherwise
        d: Modulus for the mod families
        k: Least block size (at_least_k) or residue (k_mod_d)

    Raises:
        OracleError: For an unknown family or missing parameters
    """
    needs = {"at_least_k": ("k",), "zero_mod_d": ("d",), "one_mod_d": ("d",), "k_mod_d": ("d", "k")}
    if family not in needs:
        raise OracleError(f"unknown generating function family {family!r}, "
                          f"expected one of {', '.join(BETTI_GF_FAMILIES)}")
    given = {"d": d, "k": k}
    missing = [p for p in needs[family] if given[p] is None]
    if missing:
        raise OracleError(f"{family} needs parameter(s) {', '.join(missing)}")

    if family == "at_least_k":
        table = at_least_k(n, k)
    elif family == "zero_mod_d":
        table = zero_mod_d(n, d)
    elif family == "one_mod_d":
        table = one_mod_d(n, d)
    else:
        table = k_mod_d(n, d, k)
    logger.info("betti_gf %s n=%s d=%s k=%s -> %s", family, n, d, k, table)
    return table
