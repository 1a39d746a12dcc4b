"""
Fundamental Cycles

LEARNING: Turning a sphere inside a poset into an explicit top-dimensional cycle

What we're building:
- fundamental_cycle(P, S): generator of top homology of Delta(S), written as
  an integer chain of Delta(P)
- independent_in_homology: do given cycles stay independent modulo boundaries?
"""

import logging
from dataclasses import dataclass
from math import gcd, lcm
from typing import Dict, Iterable, List, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.complex import Face, order_complex
from src.exceptions import HomologyError, NotASphereError
from src.homology.chains import chain_complex
from src.homology.groups import homology, sphere_profile
from src.poset import Poset

# Set up module logger
logger = logging.getLogger(__name__)


@dataclass
class Cycle:
    """Integer chain in C_dim of an ambient order complex (faces in ambient ids)."""
    dim: int
    coefficients: Dict[Face, int]


def fundamental_cycle(P: Poset, sub_elements: Iterable[int]) -> Cycle:
    """
    Primitive generator of top homology of the induced subposet, embedded in Delta(P).

    Args:
        P: Ambient poset
        sub_elements: Ids of P spanning a subposet whose order complex is a homology sphere

    Returns:
        Cycle with coprime integer coefficients, sign fixed so the first face has +

    Raises:
        NotASphereError: If Delta(S) is not a homology sphere
    """
    S = P.induced(sub_elements)
    delta = order_complex(S)
    if delta.is_degenerate or not delta.is_pure():
        raise NotASphereError("subcomplex is not pure")
    result = homology(delta)
    if result.betti != {delta.dim: 1} or not result.is_torsion_free():
        raise NotASphereError(sphere_profile(result))

    cc = chain_complex(delta)
    d = delta.dim
    kernel = cc.boundary(d).to_domain_matrix(QQ).nullspace()
    vector = list(kernel.to_Matrix().row(0))
    scale = 1
    for q in vector:
        scale = lcm(scale, int(q.q))
    ints = [int(q * scale) for q in vector]
    common = 0
    for value in ints:
        common = gcd(common, value)
    ints = [value // common for value in ints]
    first = next(value for value in ints if value)
    if first < 0:
        ints = [-value for value in ints]

    parent = S.parent_ids
    coefficients = {}
    for face, value in zip(cc.bases[d], ints):
        if value:
            coefficients[tuple(parent[v] for v in face)] = value
    logger.debug("Fundamental cycle of dim %d with %d faces", d, len(coefficients))
    return Cycle(dim=d, coefficients=coefficients)


def cycle_rank(P: Poset, cycles: Sequence[Cycle]) -> int:
    """
    Rank over Q of the span of `cycles` in reduced homology of Delta(P).

    Raises:
        HomologyError: If the cycles have mixed dimensions or a chain is not a cycle
    """
    if not cycles:
        return 0
    dims = {c.dim for c in cycles}
    if len(dims) != 1:
        raise HomologyError("cycles of mixed dimension")
    d = dims.pop()
    cc = chain_complex(order_complex(P))
    index = cc.index(d)
    n = cc.rank_of_chain_group(d)

    columns: List[Dict[int, int]] = []
    for c in cycles:
        col = {}
        for face, value in c.coefficients.items():
            if face not in index:
                raise HomologyError(f"{list(face)} is not a {d}-face of the ambient complex")
            col[index[face]] = value
        columns.append(col)

    boundary_down = cc.boundary(d)
    for col in columns:
        image: Dict[int, int] = {}
        for r, entries in boundary_down.rows.items():
            total = sum(v * col.get(c, 0) for c, v in entries.items())
            if total:
                image[r] = total
        if image:
            raise HomologyError("chain is not a cycle")

    boundary_up = cc.boundary(d + 1)
    rows: Dict[int, Dict[int, int]] = {r: dict(entries) for r, entries in boundary_up.rows.items()}
    base = boundary_up.ncols
    for k, col in enumerate(columns):
        for r, value in col.items():
            rows.setdefault(r, {})[base + k] = value
    stacked = DomainMatrix({r: {c: QQ(v) for c, v in e.items()} for r, e in rows.items()},
                           (n, base + len(columns)), QQ)
    boundaries = boundary_up.to_domain_matrix(QQ).rank() if base else 0
    return stacked.rank() - boundaries


def independent_in_homology(P: Poset, cycles: Sequence[Cycle]) -> bool:
    """True iff the cycles are linearly independent modulo boundaries (over Q)."""
    return cycle_rank(P, cycles) == len(cycles)
