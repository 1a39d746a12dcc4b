"""
Combinatorial Laplacian Module

LEARNING: Discrete Hodge theory with exact rational linear algebra

What we're building:
- Lambda_k = boundary_k^T boundary_k + boundary_{k+1} boundary_{k+1}^T on C_k
- Rational Betti numbers as dim ker Lambda_k (a second route to beta_k)
- The rational eigenvalues of Lambda_k with multiplicities

Key Concept:
- ker Lambda_k is isomorphic to reduced H_k over Q, so
  dim ker Lambda_k must agree with the Smith-normal-form Betti number
- sympy's DomainMatrix keeps every entry exact; nothing here touches floats
"""

import logging
from typing import Dict, Optional

from sympy import Poly, QQ, Rational, Symbol, ZZ
from sympy.polys.matrices import DomainMatrix

from src.complex import SimplicialComplex
from src.homology.chains import ChainComplex, chain_complex

# Set up module logger
logger = logging.getLogger(__name__)

_t = Symbol("t")


def laplacian_matrix(cc: ChainComplex, k: int) -> DomainMatrix:
    """Lambda_k over ZZ as a sympy DomainMatrix (n_k x n_k)."""
    down = cc.boundary(k).to_domain_matrix(ZZ)
    up = cc.boundary(k + 1).to_domain_matrix(ZZ)
    n = cc.rank_of_chain_group(k)
    result = DomainMatrix.zeros((n, n), ZZ)
    if down.shape[0] and n:
        result = result + down.transpose() * down
    if up.shape[1] and n:
        result = result + up * up.transpose()
    return result


def laplacian_betti(complex_: SimplicialComplex, i: int, max_elements: Optional[int] = None) -> int:
    """
    dim_Q ker Lambda_i.

    The degenerate complex reports 1 in dimension -2, matching homology().
    """
    if complex_.is_degenerate:
        return 1 if i == -2 else 0
    if i < -1 or i > complex_.dim:
        return 0
    cc = chain_complex(complex_, max_elements=max_elements)
    n = cc.rank_of_chain_group(i)
    if n == 0:
        return 0
    rank = laplacian_matrix(cc, i).convert_to(QQ).rank()
    logger.debug("Laplacian %d: size %d, rank %d", i, n, rank)
    return n - rank


def laplacian_spectrum(complex_: SimplicialComplex, i: int,
                       max_elements: Optional[int] = None) -> Dict[Rational, int]:
    """
    Rational eigenvalues of Lambda_i with their multiplicities.

    LEARNING POINT:
    - The characteristic polynomial is computed exactly, then factored;
      each linear factor a*t + b contributes the eigenvalue -b/a
    - Irreducible factors of higher degree carry irrational eigenvalues and
      are skipped, so the multiplicities may sum to less than n_i
    """
    if complex_.is_degenerate or i < -1 or i > complex_.dim:
        return {}
    cc = chain_complex(complex_, max_elements=max_elements)
    if cc.rank_of_chain_group(i) == 0:
        return {}
    coefficients = laplacian_matrix(cc, i).to_dense().charpoly()
    poly = Poly([int(c) for c in coefficients], _t)
    spectrum: Dict[Rational, int] = {}
    _, factors = poly.factor_list()
    for factor, multiplicity in factors:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            value = Rational(-b, a)
            spectrum[value] = spectrum.get(value, 0) + multiplicity
    logger.debug("Spectrum of Lambda_%d: %s", i, spectrum)
    return dict(sorted(spectrum.items()))
