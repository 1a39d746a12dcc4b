"""
Matching-Type Complexes

LEARNING: Complexes given by their facets, built from small enumerations

What we're building:
- matching_complex(n): M_n, sets of pairwise disjoint edges of K_n
- chessboard_complex(m, n): M_{m,n}, non-attacking rook placements
- inflation(Delta, m): vertex i replaced by m_i colored copies
- colored_chessboard_complex(m, n, r): the (r, ..., r)-inflation of M_{m,n}
"""

import logging
from itertools import combinations, permutations, product
from typing import List, Sequence, Tuple

from src.complex import SimplicialComplex
from src.exceptions import FamilyError, InfeasibleSizeError

# Set up module logger
logger = logging.getLogger(__name__)

MAX_MATCHING_N = 9
MAX_CHESSBOARD_SIDE = 7
MAX_INFLATED_FACETS = 20_000


def _maximal_matchings(points: Tuple[int, ...]) -> List[List[Tuple[int, int]]]:
    """Matchings of K_points leaving at most one point uncovered."""
    if len(points) < 2:
        return [[]]
    out = []
    first, rest = points[0], points[1:]
    for partner in rest:
        left = tuple(v for v in rest if v != partner)
        out.extend([(first, partner)] + tail for tail in _maximal_matchings(left))
    if len(points) % 2:
        out.extend(_maximal_matchings(rest))
    return out


def matching_complex(n: int) -> SimplicialComplex:
    """
    M_n: vertices are the C(n, 2) edges of K_n (lexicographic ids), faces are matchings.

    Maximal matchings of K_n all have floor(n/2) edges, so M_n is pure.
    """
    if n < 0:
        raise FamilyError(f"n must be nonnegative, got {n}")
    if n > MAX_MATCHING_N:
        raise InfeasibleSizeError("matching complex n", n, MAX_MATCHING_N)
    edges = list(combinations(range(1, n + 1), 2))
    index = {e: i for i, e in enumerate(edges)}
    facets = [tuple(sorted(index[e] for e in matching))
              for matching in _maximal_matchings(tuple(range(1, n + 1)))]
    labels = [f"{a}-{b}" for a, b in edges]
    delta = SimplicialComplex(len(edges), facets, labels)
    logger.info("Built matching complex M_%d: %d vertices, %d facets", n, len(edges), len(delta.facets))
    return delta


def chessboard_complex(m: int, n: int) -> SimplicialComplex:
    """
    M_{m,n}: vertex (i, j) has id (i-1)*n + (j-1); faces are rook placements
    with no two rooks in one row or column.
    """
    if m < 0 or n < 0:
        raise FamilyError(f"board sides must be nonnegative, got {m}x{n}")
    if max(m, n) > MAX_CHESSBOARD_SIDE:
        raise InfeasibleSizeError("chessboard side", max(m, n), MAX_CHESSBOARD_SIDE)
    rows, cols = (m, n) if m <= n else (n, m)
    facets = []
    for chosen in permutations(range(cols), rows):
        cells = [(r, c) for r, c in enumerate(chosen)]
        if m > n:
            cells = [(c, r) for r, c in cells]
        facets.append(tuple(sorted(i * n + j for i, j in cells)))
    labels = [f"({i + 1},{j + 1})" for i in range(m) for j in range(n)]
    delta = SimplicialComplex(m * n, facets, labels)
    logger.info("Built chessboard complex M_%d,%d with %d facets", m, n, len(delta.facets))
    return delta


def inflation(delta: SimplicialComplex, multiplicities: Sequence[int]) -> SimplicialComplex:
    """
    Delta_m: vertex i becomes colored copies (i, 1)..(i, m_i); a face is a
    face of Delta with one color chosen per vertex.

    LEARNING POINT:
    - Copy (i, c) has id offset_i + (c - 1), offsets in vertex order
    - Facets of Delta_m are exactly the colorings of facets of Delta

    Raises:
        FamilyError: If the multiplicity vector has the wrong length or a zero entry
    """
    m = [int(v) for v in multiplicities]
    if len(m) != delta.vertex_count:
        raise FamilyError(f"need {delta.vertex_count} multiplicities, got {len(m)}")
    if any(v < 1 for v in m):
        raise FamilyError("multiplicities must be positive")
    offsets = []
    total = 0
    for v in m:
        offsets.append(total)
        total += v

    facet_total = 0
    for facet in delta.facets:
        count = 1
        for v in facet:
            count *= m[v]
        facet_total += count
    if facet_total > MAX_INFLATED_FACETS:
        raise InfeasibleSizeError("inflated facets", facet_total, MAX_INFLATED_FACETS)

    facets = []
    for facet in delta.facets:
        for colors in product(*(range(m[v]) for v in facet)):
            facets.append(tuple(offsets[v] + c for v, c in zip(facet, colors)))
    base_labels = delta.vertex_labels or [str(v) for v in range(delta.vertex_count)]
    labels = [f"{base_labels[v]}:{c + 1}" for v in range(delta.vertex_count) for c in range(m[v])]
    inflated = SimplicialComplex(total, facets, labels)
    logger.debug("Inflated %r by %s -> %r", delta, m, inflated)
    return inflated


def colored_chessboard_complex(m: int, n: int, r: int) -> SimplicialComplex:
    """M^r_{m,n}, every cell of the board in r colors."""
    board = chessboard_complex(m, n)
    return inflation(board, [r] * board.vertex_count)
