"""
Counting Sequence Oracles

LEARNING: Compute each sequence twice, once by formula and once by brute force

What we're building:
- derangements, Euler (zigzag) numbers, tangent numbers, d-Euler numbers
- Catalan numbers and double factorials (from sympy)
- descent_class(n, R): permutations with descent set R, by inclusion-exclusion
  and by enumeration; the q-analogue weighted by inversions
- signed_descent_class(n, R): the same count for signed permutations
- k_equal_betti(n, k): Betti numbers of the k-equal lattice from compositions
- chessboard_connectivity(m, n): the vanishing bound for chessboard complexes

Key Concept:
- Positions are 1-based: i is a descent of sigma when sigma(i) > sigma(i+1).
  For signed permutations position 0 is a descent when sigma(1) < 0
"""

import logging
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Callable, Dict, FrozenSet, Iterable, List, Sequence, Union

from sympy import Expr, Symbol, cancel, catalan as sympy_catalan, expand, factorial2, sympify
from sympy.functions.combinatorial.factorials import subfactorial

from src.exceptions import InfeasibleSizeError, OracleError
from src.oracles.series import alternating_block_series, cos_series, sin_series

# Set up module logger
logger = logging.getLogger(__name__)

MAX_ENUMERATION_N = 9  # 9! = 362880 permutations, 2^9 * 9! signed ones is too many
MAX_SIGNED_ENUMERATION_N = 7

Q = Symbol("q")


def _guard(n: int, limit: int = MAX_ENUMERATION_N) -> None:
    if n > limit:
        raise InfeasibleSizeError("permutation enumeration n", n, limit)


def _descent_set(n: int, positions: Iterable[int]) -> FrozenSet[int]:
    R = frozenset(int(r) for r in positions)
    if any(r < 1 or r >= n for r in R):
        raise OracleError(f"descent positions must lie in 1..{n - 1}, got {sorted(R)}")
    return R


def descents(sigma: Sequence[int]) -> FrozenSet[int]:
    return frozenset(i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def inversions(sigma: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(sigma)), 2) if sigma[i] > sigma[j])


# ---- derangements ----

def derangements(n: int) -> int:
    """d_0 = 1, d_n = n d_{n-1} + (-1)^n."""
    if n < 0:
        raise OracleError(f"derangements need n >= 0, got {n}")
    d = 1
    for i in range(1, n + 1):
        d = i * d + (-1) ** i
    if d != int(subfactorial(n)):
        raise OracleError(f"derangement recurrence disagrees with subfactorial at n={n}")
    return d


def derangements_enumerated(n: int) -> int:
    _guard(n)
    return sum(1 for sigma in permutations(range(n)) if all(sigma[i] != i for i in range(n)))


# ---- Euler and tangent numbers ----

def euler_number(m: int) -> int:
    """
    E_m, the number of alternating permutations sigma(1) < sigma(2) > sigma(3) < ...

    Computed with the Seidel-Entringer boustrophedon triangle.
    """
    if m < 0:
        raise OracleError(f"Euler numbers need m >= 0, got {m}")
    row = [1]
    for n in range(1, m + 1):
        new = [0]
        for k in range(1, n + 1):
            new.append(new[k - 1] + row[n - k])
        row = new
    return row[-1]


def alternating_permutations(m: int) -> int:
    """E_m by enumeration: descent set exactly {2, 4, 6, ...}."""
    _guard(m)
    even = frozenset(range(2, m, 2))
    return sum(1 for sigma in permutations(range(1, m + 1)) if descents(sigma) == even)


def zigzag_numbers(order: int) -> List[int]:
    """E_0..E_order as egf coefficients of tan u + sec u = (1 + sin u) / cos u."""
    egf = (sin_series(order) + 1) / cos_series(order)
    return [int(egf.egf_coefficient(n)) for n in range(order + 1)]


def tangent_numbers(count: int) -> List[int]:
    """
    E_1, E_3, ..., E_{2 count - 1} from -ln cos u.

    LEARNING POINT:
    - d/du (-ln cos u) = tan u, so (2n)! [u^2n](-ln cos u) = E_{2n-1}
    """
    order = 2 * count
    series = -cos_series(order).log()
    return [int(series.egf_coefficient(2 * n)) for n in range(1, count + 1)]


def d_euler(n: int, d: int) -> int:
    """
    E^d_{dn-1}: permutations of [dn - 1] with descent set {d, 2d, ..., (n-1)d}.

    Read from -ln(sum_j (-1)^j u^(jd) / (jd)!) at u^(dn) / (dn)!.
    """
    if n < 1 or d < 2:
        raise OracleError(f"d_euler needs n >= 1 and d >= 2, got n={n}, d={d}")
    order = d * n
    series = -alternating_block_series(d, 0, order).log()
    return int(series.egf_coefficient(order))


def d_euler_enumerated(n: int, d: int) -> int:
    return descent_class(d * n - 1, range(d, d * n - 1, d))


# ---- descent classes ----

def _compositions_of_subset(n: int, S: Sequence[int]) -> List[int]:
    cuts = [0] + sorted(S) + [n]
    return [b - a for a, b in zip(cuts, cuts[1:])]


def _multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def _subsets(R: Iterable[int]):
    items = sorted(R)
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def descent_class(n: int, R: Iterable[int]) -> int:
    """
    beta_n(R) = sum over S in R of (-1)^{|R - S|} alpha_n(S), alpha_n(S) a multinomial.
    """
    R = _descent_set(n, R)
    total = 0
    for S in _subsets(R):
        total += (-1) ** (len(R) - len(S)) * _multinomial(_compositions_of_subset(n, S))
    return total


def descent_class_enumerated(n: int, R: Iterable[int]) -> int:
    R = _descent_set(n, R)
    _guard(n)
    return sum(1 for sigma in permutations(range(1, n + 1)) if descents(sigma) == R)


def _q_factorial(k: int, q) -> Expr:
    out = sympify(1)
    for i in range(1, k + 1):
        out *= sum(q ** j for j in range(i))
    return out


def descent_class_q(n: int, R: Iterable[int], q: Union[int, Expr] = Q) -> Expr:
    """
    sum over sigma with descent set R of q^inv(sigma), by q-multinomials.

    Pass an integer q to evaluate, or leave the default symbol for the polynomial.
    """
    R = _descent_set(n, R)
    total = sympify(0)
    for S in _subsets(R):
        parts = _compositions_of_subset(n, S)
        term = _q_factorial(n, Q)
        for p in parts:
            term /= _q_factorial(p, Q)
        total += (-1) ** (len(R) - len(S)) * cancel(term)
    return expand(cancel(total).subs(Q, q))


def descent_class_q_enumerated(n: int, R: Iterable[int], q: Union[int, Expr] = Q) -> Expr:
    R = _descent_set(n, R)
    _guard(n)
    total = sum(sympify(q) ** inversions(sigma) for sigma in permutations(range(1, n + 1))
                if descents(sigma) == R)
    return expand(total)


def signed_descents(sigma: Sequence[int]) -> FrozenSet[int]:
    out = {0} if sigma and sigma[0] < 0 else set()
    out.update(i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])
    return frozenset(out)


def signed_descent_class(n: int, R: Iterable[int]) -> int:
    """
    Signed permutations of [n] with type B descent set R, R inside {0, ..., n-1}.

    LEARNING POINT:
    - Descent set inside S: the letters split into increasing runs cut at S;
      every run may carry any signs except the first run (positions 1..min S),
      which must stay positive when 0 is not in S
    """
    R = frozenset(int(r) for r in R)
    if any(r < 0 or r >= n for r in R):
        raise OracleError(f"signed descent positions must lie in 0..{n - 1}, got {sorted(R)}")
    total = 0
    for S in _subsets(R):
        positive = [s for s in S if s > 0]
        parts = _compositions_of_subset(n, positive)
        first = 0 if 0 in S else parts[0]
        total += (-1) ** (len(R) - len(S)) * _multinomial(parts) * 2 ** (n - first)
    return total


def signed_descent_class_enumerated(n: int, R: Iterable[int]) -> int:
    R = frozenset(int(r) for r in R)
    _guard(n, MAX_SIGNED_ENUMERATION_N)
    count = 0
    for sigma in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            if signed_descents([s * v for s, v in zip(signs, sigma)]) == R:
                count += 1
    return count


# ---- classical numbers ----

def catalan(n: int) -> int:
    return int(sympy_catalan(n))


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    if n < -1:
        raise OracleError(f"double factorial needs n >= -1, got {n}")
    return 1 if n <= 0 else int(factorial2(n))


# ---- topology-facing formulas ----

def _compositions(n: int, least: int):
    """Compositions of n into parts >= least."""
    if n == 0:
        yield ()
        return
    for first in range(least, n + 1):
        for rest in _compositions(n - first, least):
            yield (first,) + rest


def k_equal_betti(n: int, k: int) -> Dict[int, int]:
    """
    Reduced Betti numbers of the proper part of the k-equal lattice.

    beta_{n-3-t(k-2)} = sum over compositions j_1 + ... + j_t = n with every
    j_i >= k of (n-1)! / ((j_1 - 1)! j_2! ... j_t!) * prod C(j_i - 1, k - 1).
    """
    if k < 2 or n < k:
        raise OracleError(f"k_equal_betti needs 2 <= k <= n, got n={n}, k={k}")
    betti: Dict[int, int] = {}
    for parts in _compositions(n, k):
        t = len(parts)
        term = factorial(n - 1) // factorial(parts[0] - 1)
        for j in parts[1:]:
            term //= factorial(j)
        for j in parts:
            term *= comb(j - 1, k - 1)
        dim = n - 3 - t * (k - 2)
        betti[dim] = betti.get(dim, 0) + term
    return {dim: value for dim, value in sorted(betti.items()) if value}


def chessboard_connectivity(m: int, n: int) -> int:
    """nu_{m,n} = min(m, floor((m + n + 1) / 3)) - 1; reduced homology vanishes below it."""
    if m > n:
        m, n = n, m
    return min(m, (m + n + 1) // 3) - 1


COUNTING_KINDS = (
    "derangements", "euler", "alternating", "tangent", "d_euler", "double_factorial", "catalan",
    "descent_class", "descent_class_q", "signed_descent_class",
)


def counting(kind: str, *params) -> Union[int, Expr, List[int]]:
    """
    Dispatch a counting oracle by name.

    Args:
        kind: One of COUNTING_KINDS
        params: Positional integers; descent classes take n then the positions,
            descent_class_q takes n, q, then the positions

    Raises:
        OracleError: For an unknown kind or a wrong number of parameters
    """
    try:
        return _dispatch(kind, params)
    except ValueError:
        raise OracleError(f"{kind} expects integer parameters, got {' '.join(str(p) for p in params)}")


def _dispatch(kind: str, params: Sequence) -> Union[int, Expr, List[int]]:
    simple: Dict[str, Callable[..., Union[int, List[int]]]] = {
        "derangements": derangements,
        "euler": euler_number,
        "alternating": alternating_permutations,
        "tangent": tangent_numbers,
        "d_euler": d_euler,
        "double_factorial": double_factorial,
        "catalan": catalan,
    }
    arity = {"d_euler": 2}
    if kind in simple:
        expected = arity.get(kind, 1)
        if len(params) != expected:
            raise OracleError(f"{kind} takes {expected} parameter(s), got {len(params)}")
        return simple[kind](*(int(p) for p in params))
    if kind in ("descent_class", "signed_descent_class"):
        if not params:
            raise OracleError(f"{kind} needs n")
        n, positions = int(params[0]), [int(p) for p in params[1:]]
        return descent_class(n, positions) if kind == "descent_class" else signed_descent_class(n, positions)
    if kind == "descent_class_q":
        if len(params) < 2:
            raise OracleError("descent_class_q needs n and q")
        q = Q if str(params[1]) == "q" else int(params[1])
        return descent_class_q(int(params[0]), [int(p) for p in params[2:]], q)
    raise OracleError(f"unknown counting kind {kind!r}, expected one of {', '.join(COUNTING_KINDS)}")
