"""
Built-in Edge Labelings

LEARNING: Labelings read the mathematical payload behind each id

What we're building:
- boolean: the element added along the edge
- partitions: lambda1 = max(min B1, min B2), lambda2 = max(B1 u B2)
- geometric lattices: least atom position i with x v a_i = y
- k-equal partitions: the three-case labeling over a barred alphabet
- noncrossing partitions: Stanley's labeling max{i in B1 : i < min B2}
- builtin_el_labeling(family, P, name): the registry

Key Concept:
- Labels are int tuples. The barred letter i-bar is (0, i) and the plain
  letter i is (1, i), so every bar sorts below every plain letter
"""

import logging
from typing import Callable, Dict, Optional, Sequence, Tuple

from src.exceptions import FamilyError, UnsupportedLabelingError
from src.families.partitions import SetPartition, merged_pair
from src.poset import Poset, atoms
from src.shelling import EdgeLabeling

# Set up module logger
logger = logging.getLogger(__name__)

BAR = 0
PLAIN = 1


def _payload(P: Poset):
    if P.elements is None:
        raise FamilyError("poset carries no element payload for labeling")
    return P.elements


def boolean_labeling(P: Poset) -> EdgeLabeling:
    """lambda(S, T) = the single element of T - S."""
    elements = _payload(P)

    def label(x: int, y: int) -> Tuple[int]:
        added = set(elements[y]) - set(elements[x])
        return (added.pop(),)

    return EdgeLabeling.from_function(P, label)


def partition_lambda1(P: Poset) -> EdgeLabeling:
    elements = _payload(P)

    def label(x: int, y: int) -> Tuple[int]:
        b1, b2 = merged_pair(elements[x], elements[y])
        return (max(min(b1), min(b2)),)

    return EdgeLabeling.from_function(P, label)


def partition_lambda2(P: Poset) -> EdgeLabeling:
    elements = _payload(P)

    def label(x: int, y: int) -> Tuple[int]:
        b1, b2 = merged_pair(elements[x], elements[y])
        return (max(b1 + b2),)

    return EdgeLabeling.from_function(P, label)


def geometric_labeling(L: Poset, atom_order: Optional[Sequence[int]] = None) -> EdgeLabeling:
    """
    lambda(x, y) = least i with x v a_i = y, for a chosen atom order.

    Raises:
        FamilyError: If some cover edge is not reached by joining an atom
    """
    order = list(atom_order) if atom_order is not None else atoms(L)

    def label(x: int, y: int) -> Tuple[int]:
        for i, a in enumerate(order, start=1):
            if L.join(x, a) == y:
                return (i,)
        raise FamilyError(f"cover ({x}, {y}) is not reached by an atom join")

    return EdgeLabeling.from_function(L, label)


def _new_block(lower: SetPartition, upper: SetPartition):
    new_blocks = [b for b in upper if b not in lower]
    if len(new_blocks) != 1:
        raise FamilyError("edge does not create exactly one block")
    block = new_blocks[0]
    parts = [b for b in lower if set(b) <= set(block)]
    return block, parts


def k_equal_labeling(P: Poset) -> EdgeLabeling:
    """
    Edges of Pi_{n,k}:
    - a new block B formed from singletons -> max B
    - a nonsingleton block merged with a singleton {a} -> a
    - two nonsingleton blocks merged -> max(B1 u B2), barred
    """
    elements = _payload(P)

    def label(x: int, y: int) -> Tuple[int, int]:
        block, parts = _new_block(elements[x], elements[y])
        big = [b for b in parts if len(b) > 1]
        if not big:
            return (PLAIN, max(block))
        if len(big) == 1 and len(parts) == 2:
            single = next(b for b in parts if len(b) == 1)
            return (PLAIN, single[0])
        if len(big) == 2 and len(parts) == 2:
            return (BAR, max(block))
        raise FamilyError(f"unexpected k-equal cover {P.labels[x]} < {P.labels[y]}")

    return EdgeLabeling.from_function(P, label)


def noncrossing_stanley_labeling(P: Poset) -> EdgeLabeling:
    """
    lambda(x, y) = max{i in B1 : i < min B2} where min B1 < min B2.

    Its weakly decreasing chains are counted by a Catalan number, but some
    interval has its lexicographically first chain weakly increasing without
    being strictly increasing, so use lambda1 when an EL-labeling is needed.
    """
    elements = _payload(P)

    def label(x: int, y: int) -> Tuple[int]:
        b1, b2 = merged_pair(elements[x], elements[y])
        return (max(i for i in b1 if i < b2[0]),)

    return EdgeLabeling.from_function(P, label)


LABELINGS: Dict[str, Dict[str, Callable[..., EdgeLabeling]]] = {
    "boolean": {"new-element": boolean_labeling, "geometric": geometric_labeling},
    "partition": {"lambda1": partition_lambda1, "lambda2": partition_lambda2, "geometric": geometric_labeling},
    "subspace": {"geometric": geometric_labeling},
    "k_equal": {"k-equal": k_equal_labeling},
    "noncrossing": {"lambda1": partition_lambda1, "stanley": noncrossing_stanley_labeling},
}

DEFAULT_LABELING = {
    "boolean": "new-element",
    "partition": "lambda1",
    "subspace": "geometric",
    "k_equal": "k-equal",
    "noncrossing": "lambda1",
}


def builtin_el_labeling(family: str, P: Poset, name: Optional[str] = None,
                        atom_order: Optional[Sequence[int]] = None) -> EdgeLabeling:
    """
    Built-in labeling of a family poset.

    Args:
        family: Family name (boolean, partition, subspace, k_equal, noncrossing)
        P: The family poset, with its element payload
        name: Labeling name (default per family)
        atom_order: Atom order for the geometric labeling

    Raises:
        UnsupportedLabelingError: If the family has no labeling of that name
    """
    choices = LABELINGS.get(family)
    name = name or DEFAULT_LABELING.get(family)
    if choices is None or name not in choices:
        raise UnsupportedLabelingError(family, str(name))
    logger.debug("Labeling %s with %s", family, name)
    if name == "geometric":
        return geometric_labeling(P, atom_order)
    return choices[name](P)
