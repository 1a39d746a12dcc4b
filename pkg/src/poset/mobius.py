"""
Mobius Function Module

LEARNING: Memoized recursion over an order relation

What we're building:
- mu(x, y) by the defining recursion mu(x,x)=1, mu(x,y) = -sum_{x<=z<y} mu(x,z)
- The Mobius invariant mu(P) = mu(0, 1) of a bounded poset
- mu of the bounded extension, mu(P-hat), without building P-hat twice

Key Concept:
- One row {y: mu(x, y)} is filled per bottom element x, in a linear extension
  order, so every z below y is finished before y is reached
- No closed forms here; those live in src.oracles as independent checks
"""

import logging
from typing import Dict

from src.exceptions import IncomparableError, NotBoundedError
from src.poset.core import Poset

# Set up module logger
logger = logging.getLogger(__name__)


def mobius(P: Poset, x: int, y: int) -> int:
    """
    Mobius function value mu_P(x, y).

    Args:
        P: The poset
        x: Lower element id
        y: Upper element id

    Returns:
        Exact integer mu(x, y)

    Raises:
        IncomparableError: If x <= y fails
    """
    if not P.leq(x, y):
        raise IncomparableError(x, y)
    return P._mobius_row(x)[y]


def mobius_row(P: Poset, x: int) -> Dict[int, int]:
    """All values mu(x, y) for y >= x, as a fresh dict."""
    return dict(P._mobius_row(x))


def mobius_invariant(P: Poset) -> int:
    """
    mu(P) := mu_P(0, 1) for a bounded poset.

    Raises:
        NotBoundedError: If P lacks a unique bottom or top
    """
    bottom, top = P.bottom(), P.top()
    if bottom is None or top is None:
        raise NotBoundedError("Mobius invariant")
    return mobius(P, bottom, top)


def mobius_hat(P: Poset) -> int:
    """
    mu of the bounded extension P-hat = P + {0, 1}, fresh bounds always added.

    LEARNING POINT:
    - mu_hat(0, x) for x in P is -(sum over the strict lower set), which is
      computed in one pass over a linear extension
    - The empty poset gives mu of a 2-chain, i.e. -1
    """
    from_bottom: Dict[int, int] = {}
    for z in P.linear_extension():
        below = P.down_mask(z, strict=True)
        total = 1  # mu(0-hat, 0-hat)
        while below:
            low = below & -below
            total += from_bottom[low.bit_length() - 1]
            below ^= low
        from_bottom[z] = -total
    value = -(1 + sum(from_bottom.values()))
    logger.debug("mu(P-hat) = %d for poset of %d elements", value, len(P))
    return value
