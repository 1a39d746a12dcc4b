"""
Classical Lattices

LEARNING: Build each family straight from its cover relation

What we're building:
- boolean(n) and truncated_boolean(n, k)
- subspace_lattice(n, q): subspaces of GF(q)^n keyed by reduced row-echelon form
- divisor_lattice(n)
- cross_polytope_face_lattice(n): admissible signed subsets plus a top
- bruhat(n): the symmetric group in Bruhat order
- classical_lattice(name, ...): one entry point that also dispatches to the
  partition lattices

Key Concept:
- Every constructor lists ids in a linear extension and hands covers to Poset,
  which computes the order closure once
"""

import logging
from itertools import combinations, permutations
from typing import Dict, List, Tuple

from sympy import divisors, factorint, primefactors

from src.exceptions import FamilyError, InfeasibleSizeError, UnknownFamilyError
from src.families.fields import FiniteField, rref_matrices
from src.families.partitions import noncrossing, partition_lattice, type_b_partition_lattice
from src.poset import Poset
from src.poset.derive import TOP_LABEL
from src.shelling import rank_selected

# Set up module logger
logger = logging.getLogger(__name__)

MAX_BOOLEAN_N = 14
MAX_SUBSPACES = 5_000       # elements of a subspace lattice
MAX_CROSS_POLYTOPE_N = 7
MAX_BRUHAT_N = 5
MAX_DIVISOR_COUNT = 5_000

Permutation = Tuple[int, ...]


def set_label(subset) -> str:
    return "{" + ",".join(str(v) for v in subset) + "}"


def boolean(n: int) -> Poset:
    """
    B_n, subsets of [n] by inclusion.

    The id of a subset is its bitmask (bit i-1 for element i), so ids increase
    along every chain.
    """
    if n < 0:
        raise FamilyError(f"n must be nonnegative, got {n}")
    if n > MAX_BOOLEAN_N:
        raise InfeasibleSizeError("boolean lattice n", n, MAX_BOOLEAN_N)
    subsets = [tuple(i + 1 for i in range(n) if mask >> i & 1) for mask in range(1 << n)]
    covers = [(mask, mask | 1 << i) for mask in range(1 << n) for i in range(n) if not mask >> i & 1]
    P = Poset([set_label(s) for s in subsets], covers, elements=subsets)
    logger.info("Built B_%d with %d elements", n, len(P))
    return P


def truncated_boolean(n: int, k: int) -> Poset:
    """Subsets of [n] with 1..k elements (B_n rank-selected at ranks 1..k)."""
    if not 1 <= k < n:
        raise FamilyError(f"truncation needs 1 <= k < n, got n={n}, k={k}")
    return rank_selected(boolean(n), range(1, k + 1))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    numerator, denominator = 1, 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def _row_label(rows, q: int) -> str:
    sep = "," if q > 10 else ""
    return "(" + ";".join(sep.join(str(a) for a in row) for row in rows) + ")"


def subspace_lattice(n: int, q: int) -> Poset:
    """
    B_n(q): subspaces of GF(q)^n ordered by inclusion.

    LEARNING POINT:
    - A subspace is stored as its reduced row-echelon basis, so equal
      subspaces are equal tuples
    - U is covered by W iff dim W = dim U + 1 and every row of U reduces to
      zero against W

    Raises:
        InfeasibleSizeError: If the lattice would exceed MAX_SUBSPACES elements
        FamilyError: If q is not a prime power
    """
    if n < 0:
        raise FamilyError(f"n must be nonnegative, got {n}")
    total = sum(gaussian_binomial(n, k, q) for k in range(n + 1)) if q >= 2 else 0
    if total > MAX_SUBSPACES:
        raise InfeasibleSizeError("subspace lattice size", total, MAX_SUBSPACES)
    field = FiniteField(q)
    layers: List[List] = [list(rref_matrices(field, n, k)) for k in range(n + 1)]
    ordered = [rows for layer in layers for rows in layer]
    index = {rows: i for i, rows in enumerate(ordered)}
    covers = []
    for k in range(n):
        for lower in layers[k]:
            for upper in layers[k + 1]:
                if all(field.in_span(row, upper) for row in lower):
                    covers.append((index[lower], index[upper]))
    P = Poset([_row_label(rows, q) for rows in ordered], covers, elements=ordered)
    logger.info("Built B_%d(%d) with %d elements", n, q, len(P))
    return P


def divisor_lattice(n: int) -> Poset:
    """D_n, divisors of n by divisibility."""
    if n < 1:
        raise FamilyError(f"divisor lattice needs n >= 1, got {n}")
    values = divisors(n)
    if len(values) > MAX_DIVISOR_COUNT:
        raise InfeasibleSizeError("divisor lattice size", len(values), MAX_DIVISOR_COUNT)
    ordered = sorted(values, key=lambda d: (sum(factorint(d).values()), d))
    index = {d: i for i, d in enumerate(ordered)}
    covers = [(index[d], index[d * p]) for d in ordered for p in primefactors(n) if n % (d * p) == 0]
    return Poset([str(d) for d in ordered], covers, elements=ordered)


def cross_polytope_face_lattice(n: int) -> Poset:
    """
    C_n: faces of the n-dimensional cross-polytope plus the polytope itself.

    Proper faces are admissible signed subsets of {+-1..+-n} (never both i and
    -i), ordered by inclusion; the top has payload None.
    """
    if n < 0:
        raise FamilyError(f"n must be nonnegative, got {n}")
    if n > MAX_CROSS_POLYTOPE_N:
        raise InfeasibleSizeError("cross-polytope n", n, MAX_CROSS_POLYTOPE_N)
    faces: List[Tuple[int, ...]] = []
    for size in range(n + 1):
        for support in combinations(range(1, n + 1), size):
            for signs in range(1 << size):
                faces.append(tuple(sorted(-v if signs >> i & 1 else v for i, v in enumerate(support))))
    faces.sort(key=lambda f: (len(f), f))
    index = {f: i for i, f in enumerate(faces)}
    top = len(faces)
    covers = []
    for f in faces:
        used = {abs(v) for v in f}
        if len(f) == n:
            covers.append((index[f], top))
            continue
        for v in range(1, n + 1):
            if v not in used:
                covers.append((index[f], index[tuple(sorted(f + (v,)))]))
                covers.append((index[f], index[tuple(sorted(f + (-v,)))]))
    labels = [set_label(f) for f in faces] + [TOP_LABEL]
    P = Poset(labels, covers, elements=list(faces) + [None])
    logger.info("Built cross-polytope face lattice C_%d with %d elements", n, len(P))
    return P


def inversions(sigma: Permutation) -> int:
    return sum(1 for i, j in combinations(range(len(sigma)), 2) if sigma[i] > sigma[j])


def bruhat(n: int) -> Poset:
    """
    S_n in Bruhat order.

    tau covers sigma iff tau = t sigma for a transposition t (swap two values
    in one-line notation) and inv(tau) = inv(sigma) + 1.
    """
    if n < 1:
        raise FamilyError(f"Bruhat order needs n >= 1, got {n}")
    if n > MAX_BRUHAT_N:
        raise InfeasibleSizeError("Bruhat order n", n, MAX_BRUHAT_N)
    perms = sorted(permutations(range(1, n + 1)), key=lambda s: (inversions(s), s))
    length = {s: inversions(s) for s in perms}
    index = {s: i for i, s in enumerate(perms)}
    covers = []
    for sigma in perms:
        for a, b in combinations(range(1, n + 1), 2):
            tau = tuple(b if v == a else a if v == b else v for v in sigma)
            if length[tau] == length[sigma] + 1:
                covers.append((index[sigma], index[tau]))
    P = Poset(["".join(str(v) for v in s) for s in perms], covers, elements=perms)
    logger.info("Built Bruhat order on S_%d with %d covers", n, len(covers))
    return P


CLASSICAL_LATTICES = ("boolean", "subspace", "divisor", "partition", "type_b", "cross_polytope",
                      "noncrossing", "bruhat")


def classical_lattice(name: str, n: int, q: int = 2) -> Poset:
    """
    Dispatch to a classical family by name.

    Raises:
        UnknownFamilyError: If `name` is not in CLASSICAL_LATTICES
    """
    builders: Dict[str, object] = {
        "boolean": lambda: boolean(n),
        "subspace": lambda: subspace_lattice(n, q),
        "divisor": lambda: divisor_lattice(n),
        "partition": lambda: partition_lattice(n),
        "type_b": lambda: type_b_partition_lattice(n),
        "cross_polytope": lambda: cross_polytope_face_lattice(n),
        "noncrossing": lambda: noncrossing(n),
        "bruhat": lambda: bruhat(n),
    }
    if name not in builders:
        raise UnknownFamilyError(name, f"expected one of {', '.join(CLASSICAL_LATTICES)}")
    return builders[name]()