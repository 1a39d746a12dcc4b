"""
Euler Characteristic Identities

LEARNING: Two independent code paths must meet at the same integer

What we're building:
- philip_hall_check: mu(P-hat) by the Mobius recursion vs. the reduced Euler
  characteristic of Delta(P) from face counts
- euler_poincare_check: alternating face counts vs. alternating Betti numbers
- mobius_betti_check: top Betti number from mu when homology is concentrated
  in the top dimension
"""

import logging

from src.complex import SimplicialComplex, order_complex
from src.exceptions import HypothesisError
from src.homology import homology, poset_homology, sphere_profile
from src.identities.results import IdentityCheck, compare
from src.poset import Poset, mobius_hat

# Set up module logger
logger = logging.getLogger(__name__)


def philip_hall_check(P: Poset) -> IdentityCheck:
    """
    mu(P-hat) = reduced Euler characteristic of Delta(P).

    The empty poset gives mu of a 2-chain on the left and chi({emptyset}) on
    the right, both -1.
    """
    lhs = mobius_hat(P)
    rhs = order_complex(P).reduced_euler_characteristic()
    return compare("philip_hall", lhs, rhs, f"poset with {len(P)} elements")


def euler_poincare_check(delta: SimplicialComplex) -> IdentityCheck:
    """
    sum_i (-1)^i f_i = sum_i (-1)^i beta_i, both reduced (i >= -1).

    The degenerate complex has no faces and contributes 0 to both sides.
    """
    lhs = delta.reduced_euler_characteristic()
    result = homology(delta)
    rhs = sum(b if d % 2 == 0 else -b for d, b in result.betti.items() if d >= -1)
    return compare("euler_poincare", lhs, rhs, repr(delta))


def mobius_betti_check(P: Poset) -> IdentityCheck:
    """
    beta_{l(P)}(P) = (-1)^{l(P)} mu(P-hat).

    Raises:
        HypothesisError: If rational homology lives below the top dimension
    """
    length = P.length()
    result = poset_homology(P)
    lower = [d for d in result.betti if d != length]
    if lower:
        raise HypothesisError("mobius_betti", f"homology below dimension {length}: {sphere_profile(result)}")
    lhs = result.betti_at(length)
    rhs = (-1) ** (length % 2) * mobius_hat(P)
    return compare("mobius_betti", lhs, rhs, f"top dimension {length}")
