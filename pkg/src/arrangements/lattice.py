"""
Intersection Semilattices

LEARNING: Breadth-first closure instead of enumerating all 2^m sub-collections

What we're building:
- intersection_semilattice(A): nonempty intersections ordered by reverse
  inclusion, bottom = the ambient space
- braid_partition: the set partition of [n] recorded by a braid intersection
- braid_partition_map: ids of L(braid(n)) mapped to ids of Pi_n

Key Concept:
- Every intersection is reached from the ambient space by intersecting with
  one member at a time, so a queue over canonical keys finds them all
- Proper containment of affine subspaces drops the dimension, so sorting by
  decreasing dimension is a linear extension
"""

import logging
from collections import deque
from typing import Dict, List

from src.arrangements.subspaces import AffineSubspace, Arrangement
from src.exceptions import ArrangementError, InfeasibleSizeError
from src.families.partitions import SetPartition, canonical
from src.poset import Poset, from_order

# Set up module logger
logger = logging.getLogger(__name__)

MAX_INTERSECTIONS = 20_000


def intersection_semilattice(A: Arrangement) -> Poset:
    """
    L(A): nonempty intersections of sub-collections, ordered by reverse inclusion.

    LEARNING POINT:
    - Element payloads are AffineSubspace objects, labels their equations
    - The empty sub-collection gives the ambient space, id 0

    Raises:
        InfeasibleSizeError: If more than MAX_INTERSECTIONS intersections appear
    """
    ambient = A.ambient()
    seen: Dict[AffineSubspace, None] = {ambient: None}
    queue = deque([ambient])
    while queue:
        x = queue.popleft()
        for member in A.subspaces:
            y = x.intersect(member)
            if y is None or y in seen:
                continue
            seen[y] = None
            if len(seen) > MAX_INTERSECTIONS:
                raise InfeasibleSizeError("intersection lattice", len(seen), MAX_INTERSECTIONS)
            queue.append(y)

    elements = sorted(seen, key=lambda s: (-s.dim, s.rows))
    L = from_order([s.label() for s in elements], lambda i, j: elements[i].contains(elements[j]),
                   elements=elements)
    logger.info("Intersection semilattice of %s: %d elements", A.name or "arrangement", len(L))
    return L


def braid_partition(x: AffineSubspace) -> SetPartition:
    """
    Blocks of coordinates forced equal on x.

    Raises:
        ArrangementError: If x is not an intersection of braid hyperplanes
    """
    n = x.dim_ambient
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            row = [0] * (n + 1)
            row[i], row[j] = 1, -1
            if _forces(x, row):
                parent[find(j)] = find(i)
    blocks: Dict[int, List[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i + 1)
    partition = canonical(blocks.values())
    if len(partition) != x.dim:
        raise ArrangementError(f"{x.label()} is not a braid intersection")
    return partition


def _forces(x: AffineSubspace, row: List[int]) -> bool:
    """True iff the equation row already holds on all of x."""
    widened = x.intersect(AffineSubspace.from_system([row[:-1]], [row[-1]], x.dim_ambient))
    return widened == x


def braid_partition_map(L: Poset, partitions: Poset) -> List[int]:
    """Id in the partition lattice per id of L(braid(n))."""
    return [partitions.index_of_element(braid_partition(x)) for x in L.elements]
