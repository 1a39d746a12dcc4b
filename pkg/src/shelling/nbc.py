"""
NBC Bases of Geometric Lattices

LEARNING: Independence and broken circuits through joins of atoms

What we're building:
- is_geometric_lattice: atomic and semimodular
- nbc_bases: maximal independent atom sets containing no broken circuit

Key Concept:
- An atom set A is independent iff rank(join A) = |A|
- An independent A contains a broken circuit iff some B inside A and some
  atom b earlier than every atom of B satisfy b <= join B
"""

import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from src.exceptions import NotALatticeError
from src.poset import Poset, atoms, is_lattice

# Set up module logger
logger = logging.getLogger(__name__)


def join_all(L: Poset, elements: Sequence[int]) -> int:
    """Join of a set of elements in a lattice (the bottom for the empty set)."""
    result = L.require_bottom()
    for x in elements:
        joined = L.join(result, x)
        if joined is None:
            raise NotALatticeError(f"no join of {result} and {x}")
        result = joined
    return result


def is_semimodular(L: Poset) -> bool:
    """x covers x ^ y implies x v y covers y, for all x, y."""
    n = len(L)
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            m = L.meet(x, y)
            if m is not None and L.is_cover(m, x):
                j = L.join(x, y)
                if j is None or not L.is_cover(y, j):
                    return False
    return True


def is_atomic(L: Poset) -> bool:
    bottom = L.require_bottom()
    atom_list = atoms(L)
    for x in range(len(L)):
        if x == bottom:
            continue
        below = [a for a in atom_list if L.leq(a, x)]
        if join_all(L, below) != x:
            return False
    return True


def is_geometric_lattice(L: Poset) -> bool:
    if not is_lattice(L):
        return False
    return is_atomic(L) and is_semimodular(L)


def nbc_bases(L: Poset, atom_order: Optional[Sequence[int]] = None) -> List[Tuple[int, ...]]:
    """
    All NBC bases with respect to an atom order.

    Args:
        L: A lattice (geometric for the count to equal |mu(L)|)
        atom_order: Atom ids, earliest first (default: increasing id)

    Returns:
        NBC bases, each listed in atom order, in lexicographic order of positions

    Raises:
        NotALatticeError: If L is not a lattice
    """
    if not is_lattice(L):
        raise NotALatticeError()
    order = list(atom_order) if atom_order is not None else atoms(L)
    position = {a: i for i, a in enumerate(order)}
    full_rank = L.height(L.require_top())

    def has_broken_circuit(chosen: Tuple[int, ...], new: int) -> bool:
        # only subsets B containing the newest atom can be new offenders
        rest = chosen
        for size in range(0, len(rest) + 1):
            for others in combinations(rest, size):
                B = others + (new,)
                earliest = min(position[a] for a in B)
                top = join_all(L, B)
                if any(L.leq(b, top) for b in order[:earliest]):
                    return True
        return False

    bases: List[Tuple[int, ...]] = []

    def grow(chosen: Tuple[int, ...], current_join: int) -> None:
        if len(chosen) == full_rank:
            bases.append(chosen)
            return
        start = position[chosen[-1]] + 1 if chosen else 0
        for k in range(start, len(order)):
            a = order[k]
            joined = L.join(current_join, a)
            if joined is None or L.height(joined) != len(chosen) + 1:
                continue
            if has_broken_circuit(chosen, a):
                continue
            grow(chosen + (a,), joined)

    grow((), L.require_bottom())
    logger.debug("Found %d NBC bases", len(bases))
    return bases
