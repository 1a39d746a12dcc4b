"""
Poset Maps and Group Elements

LEARNING: Validate the hypothesis once, at construction

What we're building:
- PosetMap: an order-preserving map f: P -> Q given as target ids, with its
  fibers f^-1(Q_{<=q}) and f^-1(Q_{<q})
- GroupElementAction: an order automorphism of P given as a permutation of ids,
  with its fixed subposet P^g

Key Concept:
- Order preservation only needs checking on cover pairs; transitivity does the rest
- A bijection of a finite poset with x < y => gx < gy is an automorphism, so the
  same cover test validates group elements
"""

import logging
from typing import Iterable, List, Sequence

from src.exceptions import IdentityError, NotOrderPreservingError
from src.families.actions import letter_action
from src.poset import Poset

# Set up module logger
logger = logging.getLogger(__name__)


class PosetMap:
    """
    Order-preserving map between posets.

    Attributes:
        source: The poset P
        target: The poset Q
        mapping: Target id per source id
    """

    def __init__(self, source: Poset, target: Poset, mapping: Sequence[int]):
        self.source = source
        self.target = target
        self.mapping = tuple(int(v) for v in mapping)
        if len(self.mapping) != len(source):
            raise IdentityError(f"map needs {len(source)} images, got {len(self.mapping)}")
        if any(not 0 <= v < len(target) for v in self.mapping):
            raise IdentityError("map sends an element outside the target")
        for a, b in source.covers:
            if not target.leq(self.mapping[a], self.mapping[b]):
                raise NotOrderPreservingError(a, b)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def __repr__(self) -> str:
        return f"PosetMap({self.source!r} -> {self.target!r})"

    def fiber_ids(self, q: int, strict: bool = False) -> List[int]:
        """Ids p with f(p) <= q (or f(p) < q when strict)."""
        test = self.target.lt if strict else self.target.leq
        return [p for p, image in enumerate(self.mapping) if test(image, q)]

    def fiber(self, q: int, strict: bool = False) -> Poset:
        """The fiber f^-1(Q_{<=q}) as an induced subposet of P."""
        return self.source.induced(self.fiber_ids(q, strict=strict))

    @classmethod
    def identity(cls, P: Poset) -> "PosetMap":
        return cls(P, P, range(len(P)))

    @classmethod
    def constant(cls, P: Poset) -> "PosetMap":
        """P -> a one-element poset."""
        return cls(P, Poset(["*"], []), [0] * len(P))


class GroupElementAction:
    """A poset automorphism given by the image id of every element."""

    def __init__(self, poset: Poset, images: Sequence[int]):
        """
        Raises:
            IdentityError: If the images are not a permutation of the ids
            NotOrderPreservingError: If some cover is not sent to a strict relation
        """
        self.poset = poset
        self.images = tuple(int(v) for v in images)
        if sorted(self.images) != list(range(len(poset))):
            raise IdentityError("group element must permute the element ids")
        for a, b in poset.covers:
            if not poset.lt(self.images[a], self.images[b]):
                raise NotOrderPreservingError(a, b)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def fixed_points(self) -> List[int]:
        return [x for x, gx in enumerate(self.images) if gx == x]

    def fixed_subposet(self) -> Poset:
        """P^g, the induced subposet of fixed elements."""
        return self.poset.induced(self.fixed_points())

    def fixes_setwise(self, chain: Iterable[int]) -> bool:
        chain = set(chain)
        return {self.images[x] for x in chain} == chain

    @classmethod
    def from_letter_permutation(cls, P: Poset, letters: Sequence[int], kind: str) -> "GroupElementAction":
        """
        The action of a letter permutation on a family poset.

        Args:
            P: Poset with subset, word or partition payloads
            letters: Images of 1..n
            kind: "subset", "word" or "partition"

        Raises:
            FamilyError: If the permutation does not act on P
        """
        images = letter_action(P, letters, kind)
        logger.debug("Letter permutation %s acts with %d fixed elements", list(letters),
                     sum(1 for x, gx in enumerate(images) if x == gx))
        return cls(P, images)
