"""
Betti Numbers from Interval Homology

LEARNING: Sequentially Cohen-Macaulay posets with a bottom need only their
lower intervals

What we're building:
- whitney_betti(P): beta_{m-1}(P - 0) = sum over x with m(x) = m of
  (-1)^{m + r(x)} beta_{r(x)-2}(0, x)
- m(x) is the length of the longest chain of P through x, r(x) the rank of x

Key Concept:
- The sum runs over every x, the bottom included, with the conventions
  beta_{-2}(0, 0) = 1 and beta_{-1}(0, x) = 1 for an atom x
- For a pure Cohen-Macaulay P every m(x) equals l(P), which is the pure form
  of the same recursion
"""

import logging
from collections import Counter
from typing import Dict

from src.complex import order_complex
from src.exceptions import HypothesisError
from src.homology import betti_open_interval, cm_checks
from src.poset import Poset

# Set up module logger
logger = logging.getLogger(__name__)


def whitney_betti(P: Poset, assume_cm: bool = False) -> Dict[int, int]:
    """
    Betti numbers of P - 0-hat computed from the intervals (0-hat, x).

    Args:
        P: Semipure poset with a bottom element
        assume_cm: Skip the sequential Cohen-Macaulay verification

    Returns:
        dim -> beta (nonzero entries only)

    Raises:
        MissingBoundError: If P has no bottom
        NotPureError: If some lower set P_{<=x} is not pure
        HypothesisError: If P - 0-hat is not sequentially Cohen-Macaulay over Q
    """
    bottom = P.require_bottom()
    # P.rank raises NotPureError unless every lower set is pure
    ranks = {x: P.rank(x) for x in range(len(P))}

    if not assume_cm:
        rest = P.induced(x for x in range(len(P)) if x != bottom)
        if not cm_checks(order_complex(rest)).is_sequentially_cm:
            raise HypothesisError("whitney_betti", "poset is not sequentially Cohen-Macaulay over Q")

    totals: Counter = Counter()
    for x in range(len(P)):
        m = P.height(x) + P.depth(x)
        r = ranks[x]
        beta = betti_open_interval(P, bottom, x).betti_at(r - 2)
        totals[m] += (-1) ** ((m + r) % 2) * beta
    betti = {m - 1: value for m, value in sorted(totals.items()) if value}
    logger.debug("Whitney recursion on %r: %s", P, betti)
    return betti
