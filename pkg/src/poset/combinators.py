"""
Poset Combinators

LEARNING: Building new posets out of old ones

What we're building:
- Direct product P x Q (componentwise order)
- Ordinal sum (join) P * Q, every element of P below every element of Q
- A check that a given bijection is an order isomorphism
- Seeded random posets for property tests
"""

import logging
import random
from typing import Optional, Sequence

from src.poset.core import Poset, from_covers

# Set up module logger
logger = logging.getLogger(__name__)


def direct_product(P: Poset, Q: Poset) -> Poset:
    """
    P x Q with (p1,q1) <= (p2,q2) iff p1 <= p2 and q1 <= q2.

    LEARNING POINT:
    - Id of (p, q) is p * |Q| + q
    - Covers of a product change exactly one coordinate by a cover, so the
      reduced cover set is produced directly
    """
    m = len(Q)
    labels = [f"({P.labels[p]},{Q.labels[q]})" for p in range(len(P)) for q in range(m)]
    covers = []
    for p in range(len(P)):
        for q in range(m):
            here = p * m + q
            covers.extend((here, p2 * m + q) for p2 in P.upper_covers(p))
            covers.extend((here, p * m + q2) for q2 in Q.upper_covers(q))
    elements = None
    if P.elements is not None and Q.elements is not None:
        elements = [(P.elements[p], Q.elements[q]) for p in range(len(P)) for q in range(m)]
    product = Poset(labels, covers, elements=elements)
    logger.debug("Direct product of sizes %d x %d -> %d", len(P), m, len(product))
    return product


def ordinal_join(P: Poset, Q: Poset) -> Poset:
    """P * Q: disjoint union, P-ids first, every P-element below every Q-element."""
    n = len(P)
    labels = list(P.labels) + list(Q.labels)
    covers = list(P.covers) + [(a + n, b + n) for a, b in Q.covers]
    covers.extend((a, b + n) for a in P.maximal_elements() for b in Q.minimal_elements())
    elements = None
    if P.elements is not None and Q.elements is not None:
        elements = list(P.elements) + list(Q.elements)
    return Poset(labels, covers, elements=elements)


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    n = len(P)
    return Poset(list(P.labels) + list(Q.labels),
                 list(P.covers) + [(a + n, b + n) for a, b in Q.covers])


def antichain(n: int) -> Poset:
    return Poset([str(i) for i in range(n)], [])


def chain_poset(n: int) -> Poset:
    """Chain 0 < 1 < ... < n-1 (length n-1)."""
    return Poset([str(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def is_order_isomorphism(P: Poset, Q: Poset, mapping: Sequence[int]) -> bool:
    """
    True iff `mapping` (id of Q per id of P) is an order isomorphism P -> Q.

    A bijection is an order isomorphism iff it carries covers onto covers.
    """
    if len(P) != len(Q) or len(mapping) != len(P):
        return False
    if sorted(mapping) != list(range(len(Q))):
        return False
    image = {(mapping[a], mapping[b]) for a, b in P.covers}
    return image == set(Q.covers)


def random_poset(n: int, density: float = 0.3, seed: Optional[int] = None) -> Poset:
    """
    Random poset on n elements: each pair i < j is an order pair with probability `density`.

    Ids follow a natural linear extension; the pairs are transitively reduced.
    """
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return from_covers([str(i) for i in range(n)], pairs)
