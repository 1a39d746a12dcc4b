"""
Duality and Product Identities

LEARNING: Betti tables of joins and products are convolutions

What we're building:
- alexander_duality_check: H_i(Q) against H^{n-i-1}(P - Q) inside a homology
  n-sphere Delta(P), torsion included
- kunneth_checks: join, product minus the bottom pair, doubly bounded product
  and the ordinary product

Key Concept:
- A Betti table is a dim -> rank dict; the identities compare such dicts with
  zero entries stripped
- beta_{-1} of the empty poset is 1, which makes the join identity hold with
  an empty factor too
"""

import logging
from collections import Counter
from typing import Dict, Iterable

from src.complex import order_complex
from src.exceptions import HypothesisError, IdentityError
from src.homology import HomologyResult, cohomology, homology, is_homology_sphere, poset_homology, sphere_profile
from src.identities.results import IdentityCheck, compare
from src.poset import Poset, direct_product, ordinal_join, proper_part

# Set up module logger
logger = logging.getLogger(__name__)

KUNNETH_KINDS = ("join", "reduced_product", "doubly_bounded", "ordinary_product")


def _table(counts: Dict[int, int]) -> Dict[int, int]:
    return {d: v for d, v in sorted(counts.items()) if v}


def _convolve(left: Dict[int, int], right: Dict[int, int], shift: int) -> Dict[int, int]:
    """(left * right)_r = sum_i left_i right_{r-i-shift}."""
    out: Counter = Counter()
    for i, a in left.items():
        for j, b in right.items():
            out[i + j + shift] += a * b
    return _table(out)


def alexander_duality_check(ambient: Poset, sub_ids: Iterable[int]) -> IdentityCheck:
    """
    Alexander duality inside a poset whose order complex is a homology sphere.

    LEARNING POINT:
    - Q is the induced subposet on sub_ids, P - Q the induced subposet on the rest
    - Both sides are (betti, torsion) per dimension i in -1..n
    - Q = P leaves the empty complement, whose {emptyset} carries H^{-1}

    Raises:
        HypothesisError: If Delta(ambient) is not a homology sphere
        IdentityError: If sub_ids mentions an unknown element
    """
    sub = set(sub_ids)
    if any(not 0 <= x < len(ambient) for x in sub):
        raise IdentityError("subposet ids out of range")
    delta = order_complex(ambient)
    if not is_homology_sphere(delta):
        raise HypothesisError("alexander_duality", f"ambient is not a homology sphere: "
                                                   f"{sphere_profile(homology(delta))}")
    n = delta.dim
    inside = poset_homology(ambient.induced(sub))
    outside = cohomology(order_complex(ambient.induced(x for x in range(len(ambient)) if x not in sub)))
    lhs, rhs = {}, {}
    for i in range(-1, n + 1):
        j = n - i - 1
        if inside.betti_at(i) or inside.torsion_at(i):
            lhs[i] = (inside.betti_at(i), inside.torsion_at(i))
        if outside.betti_at(j) or outside.torsion_at(j):
            rhs[i] = (outside.betti_at(j), outside.torsion_at(j))
    return compare("alexander_duality", lhs, rhs, f"sphere dimension {n}, |Q| = {len(sub)}")


def _without(P: Poset, drop: Iterable[int]) -> Poset:
    dropped = set(drop)
    return P.induced(x for x in range(len(P)) if x not in dropped)


def _unreduced(result: HomologyResult) -> Dict[int, int]:
    table = {d: b for d, b in result.betti.items() if d >= 0}
    table[0] = table.get(0, 0) + 1
    return table


def kunneth_checks(P: Poset, Q: Poset, kind: str) -> IdentityCheck:
    """
    Kunneth-type identity for rational Betti numbers.

    Args:
        P: First poset
        Q: Second poset
        kind: One of KUNNETH_KINDS
            - join: beta_r(P * Q) = sum beta_i(P) beta_{r-i-1}(Q)
            - reduced_product: P, Q with bottoms;
              beta_r(P x Q - (0,0)) = sum beta_i(P - 0) beta_{r-i-1}(Q - 0)
            - doubly_bounded: P, Q bounded with at least two elements;
              beta_r(proper part of P x Q) = sum beta_i(P-bar) beta_{r-i-2}(Q-bar)
            - ordinary_product: unreduced b_r(P x Q) = sum b_i(P) b_{r-i}(Q)

    Raises:
        HypothesisError: If the bounds (or nonemptiness) a kind needs are missing
        IdentityError: For an unknown kind
    """
    if kind == "join":
        lhs = poset_homology(ordinal_join(P, Q)).betti
        rhs = _convolve(poset_homology(P).betti, poset_homology(Q).betti, 1)
    elif kind == "reduced_product":
        p0, q0 = P.bottom(), Q.bottom()
        if p0 is None or q0 is None:
            raise HypothesisError("kunneth_reduced_product", "both posets need a bottom element")
        product = direct_product(P, Q)
        lhs = poset_homology(_without(product, [p0 * len(Q) + q0])).betti
        rhs = _convolve(poset_homology(_without(P, [p0])).betti,
                        poset_homology(_without(Q, [q0])).betti, 1)
    elif kind == "doubly_bounded":
        if not (P.is_bounded() and Q.is_bounded()) or len(P) < 2 or len(Q) < 2:
            raise HypothesisError("kunneth_doubly_bounded", "both posets need distinct bottom and top")
        lhs = poset_homology(proper_part(direct_product(P, Q))).betti
        rhs = _convolve(poset_homology(proper_part(P)).betti, poset_homology(proper_part(Q)).betti, 2)
    elif kind == "ordinary_product":
        if len(P) == 0 or len(Q) == 0:
            raise HypothesisError("kunneth_ordinary_product", "both posets must be nonempty")
        lhs = _unreduced(poset_homology(direct_product(P, Q)))
        rhs = _convolve(_unreduced(poset_homology(P)), _unreduced(poset_homology(Q)), 0)
    else:
        raise IdentityError(f"unknown Kunneth kind {kind!r}, expected one of {', '.join(KUNNETH_KINDS)}")
    lhs = _table(lhs)
    logger.debug("Kunneth %s: lhs %s rhs %s", kind, lhs, rhs)
    return compare(f"kunneth_{kind}", lhs, rhs, f"|P| = {len(P)}, |Q| = {len(Q)}")
