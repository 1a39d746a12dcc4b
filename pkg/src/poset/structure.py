"""
Structure Queries

LEARNING: One report object instead of a dozen boolean helpers at call sites

What we're building:
- is_pure / is_bounded / is_lattice / is_meet_semilattice
- atoms, coatoms, length, rank function
- Maximal chains in lexicographic order of their id sequences
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

from src.exceptions import MissingBoundError, NotPureError
from src.poset.core import Chain, Poset

# Set up module logger
logger = logging.getLogger(__name__)


@dataclass
class StructureReport:
    """Summary of the order-theoretic shape of a poset."""
    size: int
    is_pure: bool
    is_bounded: bool
    is_lattice: bool
    is_meet_semilattice: bool
    length: int
    atoms: List[int] = field(default_factory=list)
    coatoms: List[int] = field(default_factory=list)
    rank: Optional[Dict[int, int]] = None
    maximal_chains: List[Chain] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "size": self.size,
            "is_pure": self.is_pure,
            "is_bounded": self.is_bounded,
            "is_lattice": self.is_lattice,
            "is_meet_semilattice": self.is_meet_semilattice,
            "length": self.length,
            "atoms": self.atoms,
            "coatoms": self.coatoms,
            "rank": {str(k): v for k, v in sorted(self.rank.items())} if self.rank is not None else None,
            "maximal_chain_count": len(self.maximal_chains),
        }


def atoms(P: Poset) -> List[int]:
    """Elements covering the bottom (empty if there is no bottom)."""
    bottom = P.bottom()
    return sorted(P.upper_covers(bottom)) if bottom is not None else []


def coatoms(P: Poset) -> List[int]:
    """Elements covered by the top (empty if there is no top)."""
    top = P.top()
    return sorted(P.lower_covers(top)) if top is not None else []


def is_meet_semilattice(P: Poset) -> bool:
    n = len(P)
    if n == 0:
        return False
    return all(P.meet(x, y) is not None for x in range(n) for y in range(x + 1, n))


def is_lattice(P: Poset) -> bool:
    """Every pair has a meet and a join."""
    n = len(P)
    if n == 0:
        return False
    for x in range(n):
        for y in range(x + 1, n):
            if P.meet(x, y) is None or P.join(x, y) is None:
                return False
    return True


def rank_function(P: Poset) -> Dict[int, int]:
    """
    Rank of every element of a pure poset with a bottom.

    Raises:
        MissingBoundError: If P has no bottom
        NotPureError: If P is not pure
    """
    if P.bottom() is None:
        raise MissingBoundError("bottom")
    if not P.is_pure():
        raise NotPureError("poset")
    return {x: P.height(x) for x in range(len(P))}


def iter_maximal_chains(P: Poset, start: Optional[int] = None) -> Iterator[Chain]:
    """
    Yield maximal chains in lexicographic order of id sequences.

    LEARNING POINT:
    - A maximal chain starts at a minimal element, climbs by covers and ends
      at a maximal element; iterating covers in increasing id order with an
      explicit stack gives lexicographic output without sorting
    - With `start`, only chains beginning at that element are produced
    """
    if len(P) == 0:
        yield Chain(())
        return
    roots = [start] if start is not None else sorted(P.minimal_elements())
    for root in roots:
        path = [root]
        stack = [iter(sorted(P.upper_covers(root)))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                if not P.upper_covers(path[-1]):
                    yield Chain(tuple(path))
                stack.pop()
                path.pop()
                continue
            path.append(nxt)
            stack.append(iter(sorted(P.upper_covers(nxt))))


def maximal_chains(P: Poset) -> List[Chain]:
    return list(iter_maximal_chains(P))


def structure_queries(P: Poset, with_chains: bool = True) -> StructureReport:
    """
    Collect the standard structure record for P.

    Args:
        P: The poset
        with_chains: Enumerate maximal chains too (skip for large posets)

    Returns:
        StructureReport; `rank` is None unless P is pure with a bottom
    """
    pure = P.is_pure()
    rank = None
    if pure and P.bottom() is not None:
        rank = rank_function(P)
    report = StructureReport(
        size=len(P),
        is_pure=pure,
        is_bounded=P.is_bounded(),
        is_lattice=is_lattice(P),
        is_meet_semilattice=is_meet_semilattice(P),
        length=P.length(),
        atoms=atoms(P),
        coatoms=coatoms(P),
        rank=rank,
        maximal_chains=maximal_chains(P) if with_chains else [],
    )
    logger.debug("Structure of %r: pure=%s lattice=%s length=%d",
                 P, report.is_pure, report.is_lattice, report.length)
    return report


def rank_sizes(P: Poset) -> List[int]:
    """Number of elements per rank of a pure poset with a bottom."""
    ranks = rank_function(P)
    sizes = [0] * (max(ranks.values()) + 1 if ranks else 0)
    for r in ranks.values():
        sizes[r] += 1
    return sizes
