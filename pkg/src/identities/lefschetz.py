"""
Fixed-Point Mobius Identity

LEARNING: A trace at chain level equals a Mobius number of the fixed subposet

What we're building:
- fixed_point_lefschetz(P, g): sum over chains of P fixed setwise by g of
  (-1)^dim, the empty chain included, against mu of the bounded extension of P^g

Key Concept:
- g is order-preserving, so a chain fixed as a set is fixed pointwise and
  contributes +1 to the trace in its dimension
"""

import logging

from src.complex import order_complex
from src.identities.maps import GroupElementAction
from src.identities.results import IdentityCheck, compare
from src.poset import Poset, mobius_hat

# Set up module logger
logger = logging.getLogger(__name__)


def fixed_point_lefschetz(P: Poset, g: GroupElementAction) -> IdentityCheck:
    """
    Reduced Lefschetz number of g on Delta(P) against mu(P^g-hat).

    Args:
        P: The poset
        g: Automorphism of P (validated when it was built)

    Returns:
        IdentityCheck with lhs the chain-level trace and rhs the Mobius number
    """
    if g.poset is not P:
        g = GroupElementAction(P, g.images)
    trace = 0
    for chain in order_complex(P).all_faces():
        if g.fixes_setwise(chain):
            trace += 1 if (len(chain) - 1) % 2 == 0 else -1
    fixed = g.fixed_subposet()
    rhs = mobius_hat(fixed)
    logger.debug("Lefschetz: %d fixed elements, trace %d, mu %d", len(fixed), trace, rhs)
    return compare("fixed_point_lefschetz", trace, rhs, f"|P^g| = {len(fixed)}")
