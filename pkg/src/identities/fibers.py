"""
Fiber Theorems

LEARNING: Check the hypothesis first, then assert the identity

What we're building:
- quillen_fiber_check: acyclic fibers f^-1(Q_{<=q}) force equal Betti numbers
- general_fiber_betti_check: Betti numbers of P from Q, the fibers and the
  upper sets Q_{>q}, when each fiber is acyclic up to the length of f^-1(Q_{<q})
- inflation_betti_check: Betti numbers of Delta_m from links of Delta
- closure_check: P and its closed elements cl(P) have the same homology
- crosscut_check: a lattice's proper part against its coatom crosscut complex

Key Concept:
- A failed hypothesis raises HypothesisError; a failed identity is an
  IdentityCheck with holds=False
- Only the homology shadow of the connectivity hypotheses is verified
"""

import logging
from collections import Counter
from typing import Dict, List, Sequence

from src.complex import SimplicialComplex, link
from src.exceptions import HypothesisError, NotAClosureError, NotALatticeError
from src.families.complexes import inflation
from src.homology import homology, poset_homology, sphere_profile
from src.identities.maps import PosetMap
from src.identities.results import IdentityCheck, compare
from src.poset import Poset, coatoms, is_lattice, proper_part, upper_set

# Set up module logger
logger = logging.getLogger(__name__)


def _table(counts: Dict[int, int]) -> Dict[int, int]:
    return {d: v for d, v in sorted(counts.items()) if v}


def quillen_fiber_check(f: PosetMap) -> IdentityCheck:
    """
    Quillen fiber lemma, homology version over Q.

    Raises:
        HypothesisError: If some fiber f^-1(Q_{<=q}) has rational homology
    """
    target = f.target
    for q in range(len(target)):
        fiber = poset_homology(f.fiber(q))
        if not fiber.is_rationally_acyclic():
            raise HypothesisError("quillen_fiber", f"fiber over {target.labels[q]} is not acyclic: "
                                                   f"{sphere_profile(fiber)}")
    lhs = poset_homology(f.source).betti
    rhs = poset_homology(target).betti
    return compare("quillen_fiber", lhs, rhs, f"{len(target)} acyclic fibers")


def general_fiber_betti_check(f: PosetMap) -> IdentityCheck:
    """
    beta_r(P) = beta_r(Q) + sum_q sum_i beta_i(F_q) beta_{r-i-1}(Q_{>q}).

    LEARNING POINT:
    - F_q = f^-1(Q_{<=q}) must have beta_i = 0 for i <= l(f^-1(Q_{<q}))
    - An empty fiber has beta_{-1} = 1 and fails the hypothesis

    Raises:
        HypothesisError: Naming the first fiber and degree that break acyclicity
    """
    target = f.target
    fibers = []
    for q in range(len(target)):
        bound = f.fiber(q, strict=True).length()
        fiber = poset_homology(f.fiber(q))
        bad = sorted(d for d in fiber.betti if d <= bound)
        if bad:
            raise HypothesisError("general_fiber", f"fiber over {target.labels[q]} has beta_{bad[0]} != 0 "
                                                   f"but must be acyclic through degree {bound}")
        fibers.append(fiber)

    rhs: Counter = Counter(poset_homology(target).betti)
    for q, fiber in enumerate(fibers):
        if not fiber.betti:
            continue
        above = poset_homology(upper_set(target, q, strict=True))
        for i, a in fiber.betti.items():
            for j, b in above.betti.items():
                rhs[i + j + 1] += a * b
    lhs = poset_homology(f.source).betti
    return compare("general_fiber", lhs, _table(rhs), "homology version of the connectivity hypothesis")


def _nu(face: Sequence[int], multiplicities: Sequence[int]) -> int:
    value = 1
    for v in face:
        value *= multiplicities[v] - 1
    return value


def inflation_betti_check(delta: SimplicialComplex, multiplicities: Sequence[int]) -> IdentityCheck:
    """
    beta_r(Delta_m) = beta_r(Delta) + sum_{F != 0} nu(F, m) beta_{r-|F|}(lk F),
    nu(F, m) = prod_{i in F} (m_i - 1).

    Raises:
        HypothesisError: If Delta is not connected
    """
    m = [int(v) for v in multiplicities]
    base = homology(delta)
    if delta.is_degenerate or delta.dim < 0 or base.betti_at(0):
        raise HypothesisError("inflation", "complex must be nonempty and connected")

    rhs: Counter = Counter(base.betti)
    for face in delta.all_faces():
        if not face:
            continue
        weight = _nu(face, m)
        if not weight:
            continue
        for d, b in homology(link(delta, face)).betti.items():
            rhs[d + len(face)] += weight * b
    lhs = homology(inflation(delta, m)).betti
    return compare("inflation", lhs, _table(rhs), f"m = {m}")


def _validate_closure(P: Poset, cl: Sequence[int]) -> List[int]:
    images = [int(v) for v in cl]
    if len(images) != len(P):
        raise NotAClosureError(f"need {len(P)} images, got {len(images)}")
    for x, cx in enumerate(images):
        if not 0 <= cx < len(P):
            raise NotAClosureError(f"image of {x} is out of range")
        if not P.leq(x, cx):
            raise NotAClosureError(f"{P.labels[x]} is not below its closure")
        if images[cx] != cx:
            raise NotAClosureError(f"closure of {P.labels[x]} is not closed")
    for a, b in P.covers:
        if not P.leq(images[a], images[b]):
            raise NotAClosureError(f"not order-preserving on ({P.labels[a]}, {P.labels[b]})")
    return images


def closure_check(P: Poset, cl: Sequence[int]) -> IdentityCheck:
    """
    Integral homology of P equals that of the closed elements cl(P).

    Raises:
        NotAClosureError: If cl is not inflationary, idempotent and order-preserving
    """
    images = _validate_closure(P, cl)
    closed = sorted(set(images))
    lhs = poset_homology(P)
    rhs = poset_homology(P.induced(closed))
    return compare("closure", lhs.to_dict(), rhs.to_dict(), f"{len(closed)} closed elements")


def crosscut_complex(L: Poset) -> SimplicialComplex:
    """
    Gamma(L): vertices are the coatoms, faces the coatom sets whose meet is not the bottom.

    Raises:
        NotALatticeError: If L is not a lattice
    """
    if not is_lattice(L):
        raise NotALatticeError("crosscut complex needs a lattice")
    bottom = L.require_bottom()
    top = L.require_top()
    tops = [c for c in coatoms(L) if c != bottom]
    faces = []

    def extend(start: int, chosen: List[int], meet: int) -> None:
        grown = False
        for i in range(start, len(tops)):
            lower = L.meet(meet, tops[i])
            if lower != bottom:
                grown = True
                extend(i + 1, chosen + [i], lower)
        if not grown:
            faces.append(tuple(chosen))

    extend(0, [], top)
    gamma = SimplicialComplex(len(tops), faces, [L.labels[c] for c in tops])
    logger.debug("Crosscut complex on %d coatoms: %r", len(tops), gamma)
    return gamma


def crosscut_check(L: Poset) -> IdentityCheck:
    """Integral homology of the proper part of L equals that of Gamma(L)."""
    lhs = poset_homology(proper_part(L))
    rhs = homology(crosscut_complex(L))
    return compare("crosscut", lhs.to_dict(), rhs.to_dict(), f"{len(coatoms(L))} coatoms")
