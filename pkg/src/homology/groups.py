"""
Homology Groups Module

LEARNING: Reading homology off Smith normal forms

What we're building:
- HomologyResult: Betti number and torsion list per dimension
- Reduced integral homology and cohomology of a simplicial complex
- Homology of open intervals of a poset, with the (x, x) convention
- Homology-sphere test

Key Concept:
- beta_i = #i-faces - rank(boundary_i) - rank(boundary_{i+1})
- Torsion of H_i = invariant factors > 1 of boundary_{i+1}
- Torsion of H^i = invariant factors > 1 of delta_{i-1} = transpose of boundary_i
- The degenerate complex has beta_{-2} = 1 and nothing else
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src.complex import SimplicialComplex, order_complex
from src.homology.chains import ChainComplex, chain_complex
from src.homology.smith import SmithForm, smith_normal_form
from src.poset import Poset, open_interval

# Set up module logger
logger = logging.getLogger(__name__)


@dataclass
class HomologyResult:
    """
    Reduced (co)homology, one entry per dimension.

    Attributes:
        betti: dim -> rank of the free part (zero entries omitted)
        torsion: dim -> invariant factors > 1 (empty entries omitted)
    """
    betti: Dict[int, int] = field(default_factory=dict)
    torsion: Dict[int, List[int]] = field(default_factory=dict)

    def __post_init__(self):
        self.betti = {d: b for d, b in self.betti.items() if b}
        self.torsion = {d: list(t) for d, t in self.torsion.items() if t}

    def betti_at(self, dim: int) -> int:
        return self.betti.get(dim, 0)

    def torsion_at(self, dim: int) -> List[int]:
        return list(self.torsion.get(dim, []))

    def nonzero_dims(self) -> List[int]:
        return sorted(set(self.betti) | set(self.torsion))

    def is_torsion_free(self) -> bool:
        return not self.torsion

    def is_acyclic(self) -> bool:
        """No reduced homology at all (over Z)."""
        return not self.betti and not self.torsion

    def is_rationally_acyclic(self) -> bool:
        return not self.betti

    def euler_characteristic(self) -> int:
        """sum_i (-1)^i beta_i, i.e. the reduced Euler characteristic."""
        return sum(b if d % 2 == 0 else -b for d, b in self.betti.items())

    def to_dict(self) -> Dict:
        """{"dims": {"1": {"betti": 6, "torsion": []}, ...}} with nonzero dims only."""
        return {
            "dims": {
                str(d): {"betti": self.betti_at(d), "torsion": self.torsion_at(d)}
                for d in self.nonzero_dims()
            }
        }


def _smith_forms(cc: ChainComplex, transpose: bool = False) -> Dict[int, SmithForm]:
    forms = {}
    for i in range(0, cc.dim + 2):
        matrix = cc.boundary(i)
        forms[i] = smith_normal_form(matrix.transpose() if transpose else matrix)
    return forms


def homology(complex_: SimplicialComplex, max_elements: Optional[int] = None) -> HomologyResult:
    """
    Reduced integral homology.

    Args:
        complex_: Any simplicial complex
        max_elements: Face-count guard (default from settings)

    Returns:
        HomologyResult

    Raises:
        InfeasibleSizeError: If the complex is larger than the guard
    """
    if complex_.is_degenerate:
        return HomologyResult(betti={-2: 1})
    cc = chain_complex(complex_, max_elements=max_elements)
    forms = _smith_forms(cc)
    betti, torsion = {}, {}
    for i in range(-1, cc.dim + 1):
        rank_in = forms[i].rank if i >= 0 else 0
        betti[i] = cc.rank_of_chain_group(i) - rank_in - forms[i + 1].rank
        torsion[i] = forms[i + 1].torsion
    result = HomologyResult(betti=betti, torsion=torsion)
    logger.debug("Homology of %r: %s", complex_, result.to_dict())
    return result


def cohomology(complex_: SimplicialComplex, max_elements: Optional[int] = None) -> HomologyResult:
    """
    Reduced integral cohomology, computed from the transposed (coboundary) maps.

    Torsion of H^i agrees with torsion of H_{i-1}.
    """
    if complex_.is_degenerate:
        return HomologyResult(betti={-2: 1})
    cc = chain_complex(complex_, max_elements=max_elements)
    forms = _smith_forms(cc, transpose=True)
    betti, torsion = {}, {}
    for i in range(-1, cc.dim + 1):
        # delta_i = boundary_{i+1}^T leaves C^i; delta_{i-1} = boundary_i^T enters it
        rank_out = forms[i + 1].rank
        rank_in = forms[i].rank if i >= 0 else 0
        betti[i] = cc.rank_of_chain_group(i) - rank_out - rank_in
        torsion[i] = forms[i].torsion if i >= 0 else []
    return HomologyResult(betti=betti, torsion=torsion)


def poset_homology(P: Poset, max_elements: Optional[int] = None) -> HomologyResult:
    """Reduced homology of the order complex of P."""
    return homology(order_complex(P), max_elements=max_elements)


def betti_open_interval(P: Poset, x: int, y: int, max_elements: Optional[int] = None) -> HomologyResult:
    """
    Homology of the open interval (x, y).

    (x, x) follows the convention beta_{-2} = 1; a cover pair gives {emptyset}
    with beta_{-1} = 1.

    Raises:
        IncomparableError: If x <= y fails
    """
    interval = open_interval(P, x, y)
    if x == y:
        return HomologyResult(betti={-2: 1})
    return poset_homology(interval, max_elements=max_elements)


def is_homology_sphere(complex_: SimplicialComplex) -> bool:
    """Pure, with reduced homology Z in the top dimension and nothing else."""
    if complex_.is_degenerate or not complex_.is_pure():
        return False
    result = homology(complex_)
    return result.betti == {complex_.dim: 1} and result.is_torsion_free()


def sphere_profile(result: HomologyResult) -> str:
    return ", ".join(f"H{d}: b={result.betti_at(d)} t={result.torsion_at(d)}"
                     for d in result.nonzero_dims()) or "acyclic"
