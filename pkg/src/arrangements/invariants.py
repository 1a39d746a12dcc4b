"""
Complement Invariants

LEARNING: Counting regions and Betti numbers from the intersection semilattice

What we're building:
- characteristic_polynomial: chi_A(t) = sum_x mu(0, x) t^{dim x}
- zaslavsky: regions r = sum |mu(0, x)|, bounded regions b = |mu(L + top)|
- orlik_solomon_betti: beta_i of a complex hyperplane complement
- goresky_macpherson_betti: cohomology ranks of a real subspace complement
  from the homology of the intervals (0, x)

Key Concept:
- mu(L + top)(0, top) = -sum_x mu(0, x), so the bounded count needs no extra
  poset; a central arrangement has a top already and gives b = 0
"""

import logging
from collections import Counter
from typing import Dict, NamedTuple, Optional

from sympy import Poly, Symbol

from src.arrangements.lattice import intersection_semilattice
from src.arrangements.subspaces import Arrangement
from src.exceptions import NotHyperplaneError
from src.homology import betti_open_interval
from src.poset import Poset, mobius_row

# Set up module logger
logger = logging.getLogger(__name__)

t = Symbol("t")


class RegionCount(NamedTuple):
    regions: int
    bounded: int


def _require_hyperplanes(A: Arrangement) -> None:
    for i, member in enumerate(A.subspaces):
        if not member.is_hyperplane:
            raise NotHyperplaneError(i)


def _lattice(A: Arrangement, L: Optional[Poset]) -> Poset:
    return L if L is not None else intersection_semilattice(A)


def characteristic_polynomial(A: Arrangement, L: Optional[Poset] = None) -> Poly:
    """chi_A(t) as an integer sympy Poly in t."""
    L = _lattice(A, L)
    row = mobius_row(L, 0)
    expr = sum((row[x] * t ** L.elements[x].dim for x in row), 0 * t)
    return Poly(expr, t)


def zaslavsky(A: Arrangement, L: Optional[Poset] = None) -> RegionCount:
    """
    Regions and bounded regions of a real hyperplane arrangement.

    Raises:
        NotHyperplaneError: If some member has codimension other than 1
    """
    _require_hyperplanes(A)
    L = _lattice(A, L)
    row = mobius_row(L, 0)
    regions = sum(abs(v) for v in row.values())
    bounded = abs(sum(row.values()))
    logger.info("Zaslavsky counts for %s: r = %d, b = %d", A.name or "arrangement", regions, bounded)
    return RegionCount(regions, bounded)


def orlik_solomon_betti(A: Arrangement, L: Optional[Poset] = None) -> Dict[int, int]:
    """
    beta_i(M_A) = sum over x of codimension i of |mu(0, x)|, for complex hyperplanes.

    Raises:
        NotHyperplaneError: If some member has codimension other than 1
    """
    _require_hyperplanes(A)
    L = _lattice(A, L)
    totals: Counter = Counter()
    for x, value in mobius_row(L, 0).items():
        totals[L.elements[x].codim] += abs(value)
    return {i: b for i, b in sorted(totals.items()) if b}


def goresky_macpherson_betti(A: Arrangement, L: Optional[Poset] = None, reduced: bool = True) -> Dict[int, int]:
    """
    rank H^i(M_A) = sum over x != 0 of beta_{codim x - 2 - i}((0, x)).

    Args:
        A: Real subspace arrangement
        L: Precomputed intersection semilattice
        reduced: Reduced cohomology (default); otherwise add 1 in degree 0

    Returns:
        degree -> rank, nonzero entries only
    """
    L = _lattice(A, L)
    totals: Counter = Counter()
    for x in range(1, len(L)):
        codim = L.elements[x].codim
        for j, b in betti_open_interval(L, 0, x).betti.items():
            totals[codim - 2 - j] += b
    if not reduced:
        totals[0] += 1
    ranks = {i: b for i, b in sorted(totals.items()) if b}
    logger.debug("Goresky-MacPherson ranks for %s: %s", A.name or "arrangement", ranks)
    return ranks
