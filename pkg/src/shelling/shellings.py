"""
Shelling Module

LEARNING: Verify a certificate cheaply, search for one with memoized backtracking

What we're building:
- is_shelling(Delta, order): pure codimension-one intersections, with the
  restriction face and the homology-facet flags of every step
- find_shelling(Delta): depth-first search for a shelling

Key Concept:
- F_k meets the earlier facets in a pure (|F_k|-2)-dimensional complex iff
  every F_i n F_k (i < k) lies inside some F_j n F_k of size |F_k| - 1
- Restriction R(F_k) = {v in F_k : F_k - v lies in an earlier facet};
  F_k is a homology facet when R(F_k) = F_k, and the homology-facet count per
  dimension equals the Betti numbers
- Whether F can come next depends only on the SET of earlier facets, so
  dead sets are remembered
- Facets can be taken in order of weakly decreasing dimension without
  losing any shellable complex, so the search only tries those orders
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set

from src.complex import Face, SimplicialComplex, face_mask
from src.config import get_settings
from src.exceptions import InfeasibleSizeError, InvalidOrderError

# Set up module logger
logger = logging.getLogger(__name__)

FOUND = "found"
NONE = "none"
INDETERMINATE = "indeterminate"


@dataclass
class ShellingReport:
    """Outcome of checking one facet order."""
    is_shelling: bool
    first_violation: Optional[int] = None
    restrictions: List[Face] = field(default_factory=list)
    homology_facets: List[int] = field(default_factory=list)
    order: List[Face] = field(default_factory=list)

    def homology_facet_counts(self) -> Dict[int, int]:
        """dimension -> number of homology facets of that dimension."""
        counts: Dict[int, int] = {}
        for k in self.homology_facets:
            d = len(self.order[k]) - 1
            counts[d] = counts.get(d, 0) + 1
        return counts

    def __bool__(self) -> bool:
        return self.is_shelling


@dataclass
class ShellingSearchResult:
    status: str
    order: Optional[List[Face]] = None
    homology_facet_counts: Dict[int, int] = field(default_factory=dict)
    nodes: int = 0


def _can_follow(mask: int, size: int, earlier: Sequence[int]) -> bool:
    """Codimension-one purity test for a facet (bitmask, size) after `earlier`."""
    if not earlier:
        return True
    intersections = [mask & other for other in earlier]
    big = [m for m in intersections if bin(m).count("1") == size - 1]
    for m in intersections:
        if not any(m & b == m for b in big):
            return False
    return True


def _restriction(facet: Face, earlier: Sequence[int]) -> Face:
    mask = face_mask(facet)
    out = []
    for v in facet:
        rest = mask & ~(1 << v)
        if any(other & rest == rest for other in earlier):
            out.append(v)
    return tuple(out)


def is_shelling(complex_: SimplicialComplex, facet_order: Sequence[Sequence[int]]) -> ShellingReport:
    """
    Check whether `facet_order` is a shelling of the complex.

    Args:
        complex_: The complex
        facet_order: Every facet exactly once

    Returns:
        ShellingReport (truthy iff the order is a shelling)

    Raises:
        InvalidOrderError: If the order is not a permutation of the facets
    """
    order = [tuple(sorted(f)) for f in facet_order]
    if sorted(order) != sorted(complex_.facets) or len(set(order)) != len(order):
        raise InvalidOrderError("not a permutation of the facets")

    masks = [face_mask(f) for f in order]
    restrictions: List[Face] = []
    homology_facets: List[int] = []
    for k, facet in enumerate(order):
        earlier = masks[:k]
        if not _can_follow(masks[k], len(facet), earlier):
            logger.debug("Facet %s at position %d breaks the shelling", facet, k)
            return ShellingReport(False, first_violation=k, restrictions=restrictions,
                                  homology_facets=homology_facets, order=order)
        restriction = _restriction(facet, earlier) if k else ()
        restrictions.append(restriction)
        if restriction == facet:
            homology_facets.append(k)
    return ShellingReport(True, restrictions=restrictions, homology_facets=homology_facets, order=order)


def find_shelling(complex_: SimplicialComplex, max_facets: Optional[int] = None,
                  budget: Optional[int] = None) -> ShellingSearchResult:
    """
    Search for a shelling.

    LEARNING POINT:
    - Candidates are tried in lexicographic facet order, so the result is deterministic
    - "none" is an exhaustive answer; "indeterminate" means the node budget ran out

    Args:
        complex_: The complex
        max_facets: Facet-count bound (default from settings)
        budget: Search-node budget (default from settings)

    Returns:
        ShellingSearchResult with status found / none / indeterminate

    Raises:
        InfeasibleSizeError: If the complex has more facets than the bound
    """
    settings = get_settings()
    max_facets = max_facets if max_facets is not None else settings.max_shelling_facets
    budget = budget if budget is not None else settings.shelling_budget
    facets = sorted(complex_.facets, key=lambda f: (-len(f), f))
    n = len(facets)
    if n > max_facets:
        raise InfeasibleSizeError("shelling search", n, max_facets)
    if n == 0:
        return ShellingSearchResult(NONE)

    masks = [face_mask(f) for f in facets]
    sizes = [len(f) for f in facets]
    dead: Set[int] = set()
    path: List[int] = []
    nodes = 0

    def extend(used: int) -> Optional[bool]:
        nonlocal nodes
        if len(path) == n:
            return True
        if used in dead:
            return False
        nodes += 1
        if nodes > budget:
            return None
        largest = max(sizes[i] for i in range(n) if not used >> i & 1)
        earlier = [masks[i] for i in path]
        for i in range(n):
            if used >> i & 1 or sizes[i] != largest:
                continue
            if not _can_follow(masks[i], sizes[i], earlier):
                continue
            path.append(i)
            outcome = extend(used | (1 << i))
            if outcome is None:
                return None
            if outcome:
                return True
            path.pop()
        dead.add(used)
        return False

    outcome = extend(0)
    if outcome is None:
        logger.warning("Shelling search budget of %d nodes exhausted", budget)
        return ShellingSearchResult(INDETERMINATE, nodes=nodes)
    if not outcome:
        logger.info("No shelling exists (%d nodes searched)", nodes)
        return ShellingSearchResult(NONE, nodes=nodes)
    order = [facets[i] for i in path]
    report = is_shelling(complex_, order)
    return ShellingSearchResult(FOUND, order=order,
                                homology_facet_counts=report.homology_facet_counts(), nodes=nodes)
