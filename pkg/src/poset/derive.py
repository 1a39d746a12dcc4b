"""
Derived Posets

LEARNING: Small constructors that return new immutable posets

What we're building:
- dual, proper part, bounded extension
- open and closed intervals, strict and weak upper/lower sets
- A single derive(P, kind, ...) dispatcher for the CLI and suites

Every result carries parent_ids mapping its ids back to P
(None for freshly adjoined bounds).
"""

import logging
from typing import Optional

from src.exceptions import IncomparableError, PosetError
from src.poset.core import Poset, iter_bits

# Set up module logger
logger = logging.getLogger(__name__)

BOTTOM_LABEL = "0^"  # label of an adjoined bottom
TOP_LABEL = "1^"     # label of an adjoined top

DERIVE_KINDS = (
    "dual", "proper_part", "bounded_extension", "open_interval",
    "closed_interval", "upper_set", "lower_set",
)


def dual(P: Poset) -> Poset:
    """The dual poset P*: same ids, order reversed."""
    covers = [(b, a) for a, b in P.covers]
    return Poset(P.labels, covers, elements=P.elements, parent_ids=list(range(len(P))),
                 _order=(list(P._down), list(P._up)))


def proper_part(P: Poset) -> Poset:
    """
    P-bar: P with its bottom and top removed, whichever exist.

    A poset with only one of the two bounds loses just that one.
    """
    drop = set()
    bottom, top = P.bottom(), P.top()
    if bottom is not None:
        drop.add(bottom)
    if top is not None:
        drop.add(top)
    return P.induced(x for x in range(len(P)) if x not in drop)


def bounded_extension(P: Poset) -> Poset:
    """
    P-hat := P + {0, 1}, adjoining fresh bounds even if P already has them.

    Id 0 is the new bottom, ids 1..n are P's elements, id n+1 the new top.
    """
    n = len(P)
    labels = [BOTTOM_LABEL] + list(P.labels) + [TOP_LABEL]
    covers = [(a + 1, b + 1) for a, b in P.covers]
    if n == 0:
        covers.append((0, 1))
    covers.extend((0, m + 1) for m in P.minimal_elements())
    covers.extend((m + 1, n + 1) for m in P.maximal_elements())

    full = (1 << (n + 2)) - 1
    up = [full]
    down = [1]
    for x in range(n):
        up.append((P.up_mask(x) << 1) | (1 << (n + 1)))
        down.append((P.down_mask(x) << 1) | 1)
    up.append(1 << (n + 1))
    down.append(full)

    elements = None
    if P.elements is not None:
        elements = [None] + list(P.elements) + [None]
    parent_ids = [None] + list(range(n)) + [None]
    return Poset(labels, covers, elements=elements, parent_ids=parent_ids, _order=(up, down))


def open_interval(P: Poset, x: int, y: int) -> Poset:
    """(x, y) = {z : x < z < y}; empty when x = y or x covers y."""
    if not P.leq(x, y):
        raise IncomparableError(x, y)
    if x == y:
        return P.induced([])
    return P.induced(iter_bits(P.interval_mask(x, y, open_=True)))


def closed_interval(P: Poset, x: int, y: int) -> Poset:
    """[x, y] = {z : x <= z <= y}."""
    return P.induced(iter_bits(P.interval_mask(x, y)))


def upper_set(P: Poset, x: int, strict: bool = False) -> Poset:
    """P_{>=x}, or P_{>x} when strict."""
    return P.induced(iter_bits(P.up_mask(x, strict=strict)))


def lower_set(P: Poset, x: int, strict: bool = False) -> Poset:
    """P_{<=x}, or P_{<x} when strict."""
    return P.induced(iter_bits(P.down_mask(x, strict=strict)))


def derive(P: Poset, kind: str, x: Optional[int] = None, y: Optional[int] = None,
           strict: bool = False) -> Poset:
    """
    Dispatch to one of the derived-poset constructors by name.

    Args:
        P: Source poset
        kind: One of DERIVE_KINDS
        x: First element for intervals and upper/lower sets
        y: Second element for intervals
        strict: Strictness for upper_set / lower_set

    Returns:
        The derived poset with parent_ids mapping back to P

    Raises:
        PosetError: Unknown kind or missing element arguments
        IncomparableError: Interval endpoints not comparable
    """
    logger.debug("derive(%s) on %r", kind, P)
    if kind == "dual":
        return dual(P)
    if kind == "proper_part":
        return proper_part(P)
    if kind == "bounded_extension":
        return bounded_extension(P)
    if kind in ("open_interval", "closed_interval"):
        if x is None or y is None:
            raise PosetError(f"{kind} needs two elements")
        return open_interval(P, x, y) if kind == "open_interval" else closed_interval(P, x, y)
    if kind in ("upper_set", "lower_set"):
        if x is None:
            raise PosetError(f"{kind} needs an element")
        return upper_set(P, x, strict) if kind == "upper_set" else lower_set(P, x, strict)
    raise PosetError(f"unknown derived poset kind: {kind}")
