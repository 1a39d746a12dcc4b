"""
Cohen-Macaulay Checks

LEARNING: Brute force over links, with a cache keyed by the link itself

What we're building:
- Cohen-Macaulay over Q: H_i(lk F) = 0 for i < dim lk F, every face F
- Sequentially acyclic over Q: H_i(Delta^<m>) = 0 for i < m, every m
- Sequentially Cohen-Macaulay over Q: every link is sequentially acyclic
"""

import logging
from dataclasses import dataclass
from typing import Dict

from src.complex import SimplicialComplex, link, upper_facets
from src.homology.groups import homology

# Set up module logger
logger = logging.getLogger(__name__)


@dataclass
class CMReport:
    is_cm: bool
    is_sequentially_acyclic: bool
    is_sequentially_cm: bool

    def to_dict(self) -> Dict:
        return {
            "is_CM_over_Q": self.is_cm,
            "is_sequentially_acyclic_over_Q": self.is_sequentially_acyclic,
            "is_sequentially_CM_over_Q": self.is_sequentially_cm,
        }


def _vanishes_below(complex_: SimplicialComplex, bound: int) -> bool:
    """Rational reduced homology vanishes in every dimension < bound."""
    betti = homology(complex_).betti
    return all(b == 0 for d, b in betti.items() if d < bound)


def is_sequentially_acyclic(complex_: SimplicialComplex) -> bool:
    if complex_.is_degenerate:
        return False
    return all(_vanishes_below(upper_facets(complex_, m), m) for m in range(0, complex_.dim + 1))


def cm_checks(complex_: SimplicialComplex) -> CMReport:
    """
    Cohen-Macaulay and sequential properties over the rationals.

    The degenerate complex fails all three; {emptyset} passes all three.
    """
    if complex_.is_degenerate:
        return CMReport(False, False, False)

    cm_cache: Dict[SimplicialComplex, bool] = {}
    seq_cache: Dict[SimplicialComplex, bool] = {}
    is_cm = complex_.is_pure()
    is_seq_cm = True
    for face in complex_.all_faces():
        lk = link(complex_, face)
        if is_cm:
            if lk not in cm_cache:
                cm_cache[lk] = _vanishes_below(lk, lk.dim)
            is_cm = cm_cache[lk]
        if is_seq_cm:
            if lk not in seq_cache:
                seq_cache[lk] = is_sequentially_acyclic(lk)
            is_seq_cm = seq_cache[lk]
        if not is_cm and not is_seq_cm:
            break
    report = CMReport(is_cm=is_cm,
                      is_sequentially_acyclic=is_sequentially_acyclic(complex_),
                      is_sequentially_cm=is_seq_cm)
    logger.info("CM checks on %r: %s", complex_, report.to_dict())
    return report
