"""
Integer Partition Oracles

LEARNING: Young diagrams give closed forms to test homology against

What we're building:
- IntegerPartition: weakly decreasing positive parts with conjugate, Durfee
  rank, Frobenius notation and hook lengths
- partitions_of(n): every partition of n, from sympy's generator
- partition_tools(parts): the record the oracle CLI prints
- bouc_betti(n, k): Betti numbers of matching complexes from self-conjugate shapes
- laplacian_eigenvalue(parts): c_lambda from Frobenius notation
- matching_partitions(n): the shapes whose c_lambda can be a matching-complex eigenvalue

Key Concept:
- dim S^lambda = n! / prod of hook lengths, exact integer arithmetic
"""

import logging
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Any, Dict, List, Sequence, Tuple

from sympy.utilities.iterables import partitions as sympy_partitions

from src.exceptions import OracleError

# Set up module logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegerPartition:
    """A partition lambda = (lambda_1 >= lambda_2 >= ... > 0)."""
    parts: Tuple[int, ...]

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "IntegerPartition":
        """
        Validate and build a partition.

        Raises:
            OracleError: If a part is not positive or the parts increase somewhere
        """
        values = tuple(int(p) for p in parts)
        if any(p <= 0 for p in values):
            raise OracleError(f"partition parts must be positive, got {list(values)}")
        if any(a < b for a, b in zip(values, values[1:])):
            raise OracleError(f"partition parts must be weakly decreasing, got {list(values)}")
        return cls(values)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "IntegerPartition":
        if not self.parts:
            return self
        return IntegerPartition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def is_self_conjugate(self) -> bool:
        return self.conjugate() == self

    def durfee_rank(self) -> int:
        """Size of the main diagonal of the Young diagram."""
        return sum(1 for i, p in enumerate(self.parts) if p > i)

    def frobenius(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """
        (alpha | beta) with alpha_i = lambda_i - i and beta_i = lambda'_i - i
        (rows and columns counted from 1).
        """
        r = self.durfee_rank()
        transpose = self.conjugate().parts
        alpha = tuple(self.parts[i] - i - 1 for i in range(r))
        beta = tuple(transpose[i] - i - 1 for i in range(r))
        return alpha, beta

    def hook_lengths(self) -> List[List[int]]:
        transpose = self.conjugate().parts
        return [[(row - j - 1) + (transpose[j] - i - 1) + 1 for j in range(row)]
                for i, row in enumerate(self.parts)]

    def dim_specht(self) -> int:
        """Number of standard Young tableaux, by the hook length formula."""
        hooks = prod(h for row in self.hook_lengths() for h in row)
        return factorial(self.size) // hooks

    def content_sum(self) -> int:
        return sum(j - i for i, row in enumerate(self.parts) for j in range(row))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions_of(n: int) -> List[IntegerPartition]:
    """All partitions of n, largest parts first (reverse lexicographic)."""
    if n < 0:
        raise OracleError(f"cannot partition a negative integer {n}")
    out = []
    # sympy reuses the yielded dict, copy before reading
    for multiplicities in sympy_partitions(n):
        counts = dict(multiplicities)
        counts.pop(0, None)
        parts = sorted((p for p, c in counts.items() for _ in range(c)), reverse=True)
        out.append(IntegerPartition(tuple(parts)))
    out.sort(key=lambda lam: lam.parts, reverse=True)
    return out


def laplacian_eigenvalue(parts: Sequence[int]) -> int:
    """
    c_lambda = sum over the diagonal of C(alpha_i + 1, 2) - C(beta_i + 1, 2).

    Equal to the content sum of the diagram, and negated by conjugation.
    """
    alpha, beta = IntegerPartition.from_parts(parts).frobenius()
    return sum(comb(a + 1, 2) - comb(b + 1, 2) for a, b in zip(alpha, beta))


def matching_partitions(n: int) -> List[IntegerPartition]:
    """
    Partitions (alpha | beta) of n with Durfee rank at least 1 and alpha_i >= beta_i on the whole diagonal.

    Their c_lambda are the eigenvalues the Laplacians of the matching complex M_n can take.
    """
    out = []
    for lam in partitions_of(n):
        alpha, beta = lam.frobenius()
        if alpha and all(a >= b for a, b in zip(alpha, beta)):
            out.append(lam)
    return out


def partition_tools(parts: Sequence[int]) -> Dict[str, Any]:
    lam = IntegerPartition.from_parts(parts)
    alpha, beta = lam.frobenius()
    return {
        "partition": list(lam.parts),
        "conjugate": list(lam.conjugate().parts),
        "is_self_conjugate": lam.is_self_conjugate(),
        "durfee_rank": lam.durfee_rank(),
        "frobenius": [list(alpha), list(beta)],
        "hook_lengths": lam.hook_lengths(),
        "dim_specht": lam.dim_specht(),
        "content": laplacian_eigenvalue(lam.parts),
    }


def bouc_betti(n: int, k: int) -> int:
    """
    Sum of dim S^lambda over self-conjugate lambda of n with Durfee rank n - 2k.

    This is the (k-1)-st reduced Betti number of the matching complex M_n.

    Raises:
        OracleError: If n < 1
    """
    if n < 1:
        raise OracleError(f"bouc_betti needs n >= 1, got {n}")
    target = n - 2 * k
    if target < 1:
        return 0
    total = sum(lam.dim_specht() for lam in partitions_of(n)
                if lam.is_self_conjugate() and lam.durfee_rank() == target)
    logger.debug("bouc_betti(%d, %d) = %d", n, k, total)
    return total
