"""
Recursive Atom Orderings

LEARNING: A recursive certificate checked and searched by the same recursion

What we're building:
- RAOCertificate: an atom order for [x, 1] plus child certificates for [a_j, 1]
- verify_recursive_atom_ordering: conditions (i) and (ii) along the tree
- search_recursive_atom_ordering: backtracking with a memo keyed by
  (interval bottom, atoms required to come first)

Key Concept:
- Intervals of length at most 2 accept any atom order
- For atom a_j, the atoms of [a_j, 1] that cover an EARLIER atom must come
  first in the child order; call that set Z_j
- Condition (ii): whenever a_i, a_j < y with i < j, some z in Z_j has z <= y
  (y = 1 included)
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from src.config import get_settings
from src.exceptions import CertificateError, NotBoundedError
from src.poset import Poset

# Set up module logger
logger = logging.getLogger(__name__)


@dataclass
class RAOCertificate:
    """Atom order of [x, 1] and certificates for the intervals above each atom."""
    atoms: Tuple[int, ...]
    children: Dict[int, "RAOCertificate"] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            "atoms": list(self.atoms),
            "children": {str(a): child.to_dict() for a, child in sorted(self.children.items())},
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "RAOCertificate":
        children = {int(a): cls.from_dict(child) for a, child in data.get("children", {}).items()}
        return cls(tuple(data["atoms"]), children)


@dataclass
class RAOSearchResult:
    status: str
    certificate: Optional[RAOCertificate] = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.certificate is not None


def _required_after(P: Poset, order: Sequence[int], j: int) -> frozenset:
    """Z_j: atoms of [a_j, 1] covering some a_k with k < j."""
    earlier = order[:j]
    return frozenset(z for z in P.upper_covers(order[j]) if any(P.lt(a, z) for a in earlier))


def _condition_ii(P: Poset, order: Sequence[int], j: int, required: frozenset) -> bool:
    a_j = order[j]
    for i in range(j):
        common = P.up_mask(order[i]) & P.up_mask(a_j)
        while common:
            low = common & -common
            y = low.bit_length() - 1
            common ^= low
            if not any(P.leq(z, y) for z in required):
                return False
    return True


def _required_first(order: Sequence[int], required: frozenset) -> bool:
    return all(a in required for a in order[:len(required)])


def verify_recursive_atom_ordering(P: Poset, certificate: RAOCertificate) -> bool:
    """
    Check a certificate on a bounded poset.

    Returns:
        True iff conditions (i) and (ii) hold along the whole recursion

    Raises:
        NotBoundedError: If P is not bounded
        CertificateError: If an interval of length > 2 has no atom order
    """
    if not P.is_bounded():
        raise NotBoundedError("recursive atom ordering")

    def check(x: int, cert: Optional[RAOCertificate], required: frozenset, path: Tuple[int, ...]) -> bool:
        atoms = sorted(P.upper_covers(x))
        if P.depth(x) <= 2:
            if cert is None:
                return True
            return sorted(cert.atoms) == atoms and _required_first(cert.atoms, required)
        if cert is None:
            raise CertificateError(path)
        if sorted(cert.atoms) != atoms:
            raise CertificateError(path, "atom list is not a permutation of the atoms")
        if not _required_first(cert.atoms, required):
            logger.debug("Required atoms not first at %s", path)
            return False
        for j, a in enumerate(cert.atoms):
            z_j = _required_after(P, cert.atoms, j)
            if not _condition_ii(P, cert.atoms, j, z_j):
                logger.debug("Condition (ii) fails for atom %d at %s", a, path)
                return False
            if not check(a, cert.children.get(a), z_j, path + (a,)):
                return False
        return True

    return check(P.require_bottom(), certificate, frozenset(), ())


def search_recursive_atom_ordering(P: Poset, budget: Optional[int] = None,
                                   root_order: Optional[Sequence[int]] = None) -> RAOSearchResult:
    """
    Backtracking search for a recursive atom ordering.

    Args:
        P: Bounded poset
        budget: Node budget (default from settings)
        root_order: Fix the atom order of the whole poset and search only below it

    Returns:
        RAOSearchResult with status found / none / indeterminate
    """
    if not P.is_bounded():
        raise NotBoundedError("recursive atom ordering")
    budget = budget if budget is not None else get_settings().rao_budget
    if root_order is not None and sorted(root_order) != sorted(P.upper_covers(P.require_bottom())):
        raise CertificateError((), "root order is not a permutation of the atoms")
    memo: Dict[Tuple[int, frozenset], Optional[RAOCertificate]] = {}
    nodes = 0

    class _Budget(Exception):
        pass

    def search(x: int, required: frozenset, fixed: Optional[Sequence[int]] = None) -> Optional[RAOCertificate]:
        nonlocal nodes
        key = (x, required)
        if fixed is None and key in memo:
            return memo[key]
        atoms = sorted(P.upper_covers(x))
        if P.depth(x) <= 2:
            ordered = tuple(sorted(required)) + tuple(a for a in atoms if a not in required)
            return RAOCertificate(ordered)

        order: List[int] = []
        children: Dict[int, RAOCertificate] = {}

        def extend() -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise _Budget()
            j = len(order)
            if j == len(atoms):
                return True
            if fixed is not None:
                candidates = [fixed[j]]
            else:
                pending = [a for a in atoms if a in required and a not in order]
                candidates = pending or [a for a in atoms if a not in order]
            for a in candidates:
                order.append(a)
                z_j = _required_after(P, order, j)
                if _condition_ii(P, order, j, z_j):
                    child = search(a, z_j)
                    if child is not None:
                        children[a] = child
                        if extend():
                            return True
                        children.pop(a, None)
                order.pop()
            return False

        if fixed is not None and not _required_first(fixed, required):
            result = None
        else:
            result = RAOCertificate(tuple(order), dict(children)) if extend() else None
        if fixed is None:
            memo[key] = result
        return result

    try:
        certificate = search(P.require_bottom(), frozenset(), tuple(root_order) if root_order is not None else None)
    except _Budget:
        logger.warning("Recursive atom ordering search exhausted its budget of %d nodes", budget)
        return RAOSearchResult("indeterminate", nodes=nodes)
    status = "found" if certificate is not None else "none"
    logger.info("Recursive atom ordering search: %s after %d nodes", status, nodes)
    return RAOSearchResult(status, certificate, nodes)


def all_root_orders(P: Poset):
    """Every ordering of the atoms of a bounded poset."""
    return permutations(sorted(P.upper_covers(P.require_bottom())))
