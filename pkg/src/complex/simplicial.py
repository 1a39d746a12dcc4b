"""
Simplicial Complex Module

LEARNING: Store the generators, enumerate the rest on demand

What we're building:
- SimplicialComplex kept as its inclusion-maximal facets
- Face enumeration per dimension, cached, never all at once unless asked
- f-vector, h-vector and reduced Euler characteristic

Key Concept:
- Two different "empty" complexes exist:
  {emptyset} (facets == ((),), dim -1) and the degenerate complex with no
  faces at all (facets == (), dim -2)
- Facets are also kept as vertex bitmasks so face membership is one AND per facet
"""

import logging
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.exceptions import ComplexError, DegenerateComplexError

# Set up module logger
logger = logging.getLogger(__name__)

Face = Tuple[int, ...]


def face_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << v
    return mask


class SimplicialComplex:
    """
    Abstract simplicial complex on vertices 0..vertex_count-1.

    Attributes:
        vertex_count: Size of the ground set V (isolated ghost vertices allowed)
        facets: Sorted tuple of sorted vertex tuples, none contained in another
        vertex_labels: Optional display label per vertex
    """

    def __init__(self, vertex_count: int, facets: Iterable[Sequence[int]],
                 vertex_labels: Optional[Sequence[str]] = None):
        self.vertex_count = int(vertex_count)
        cleaned = _maximal(tuple(sorted(set(f))) for f in facets)
        self.facets: Tuple[Face, ...] = tuple(sorted(cleaned))
        self._facet_masks = [face_mask(f) for f in self.facets]
        self.vertex_labels = tuple(vertex_labels) if vertex_labels is not None else None
        self._faces: Dict[int, List[Face]] = {}

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={self.vertex_count}, facets={len(self.facets)}, dim={self.dim})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.facets))

    @property
    def is_degenerate(self) -> bool:
        return len(self.facets) == 0

    @property
    def is_void_face_only(self) -> bool:
        """True for the complex {emptyset}."""
        return self.facets == ((),)

    @property
    def dim(self) -> int:
        if self.is_degenerate:
            return -2
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def vertices(self) -> List[int]:
        """Vertices that lie in some face."""
        mask = 0
        for m in self._facet_masks:
            mask |= m
        return [v for v in range(self.vertex_count) if mask >> v & 1]

    def contains(self, face: Iterable[int]) -> bool:
        """True iff `face` is a face (the empty face lies in every nondegenerate complex)."""
        mask = face_mask(face)
        return any(m & mask == mask for m in self._facet_masks)

    def faces(self, dim: int) -> List[Face]:
        """
        All faces of dimension `dim`, sorted lexicographically.

        LEARNING POINT:
        - Generated from facets with itertools.combinations and deduplicated
        - Cached per dimension since homology asks for each dimension twice
        """
        if dim in self._faces:
            return self._faces[dim]
        size = dim + 1
        if self.is_degenerate or size < 0:
            result: List[Face] = []
        elif size == 0:
            result = [()]
        else:
            found = set()
            for facet in self.facets:
                if len(facet) >= size:
                    found.update(combinations(facet, size))
            result = sorted(found)
        self._faces[dim] = result
        return result

    def all_faces(self) -> List[Face]:
        """Every face including the empty face, ordered by dimension then lexicographically."""
        out: List[Face] = []
        for d in range(-1, self.dim + 1):
            out.extend(self.faces(d))
        return out

    def face_count(self) -> int:
        return sum(len(self.faces(d)) for d in range(-1, self.dim + 1))

    def f_vector(self) -> List[int]:
        """(f_{-1}, f_0, ..., f_d); empty list for the degenerate complex."""
        return [len(self.faces(d)) for d in range(-1, self.dim + 1)]

    def h_vector(self) -> List[int]:
        """
        h-vector from sum h_i x^{d-i} = sum f_{i-1} (x-1)^{d-i}, d = dim + 1.

        Raises:
            DegenerateComplexError: For the degenerate complex
        """
        if self.is_degenerate:
            raise DegenerateComplexError("h-vector")
        f = self.f_vector()
        d = self.dim + 1
        h = []
        for k in range(d + 1):
            total = 0
            for i in range(k + 1):
                total += (-1) ** (k - i) * comb(d - i, k - i) * f[i]
            h.append(total)
        return h

    def reduced_euler_characteristic(self) -> int:
        """sum_{i >= -1} (-1)^i f_i."""
        # index 0 holds f_{-1}
        return sum((count if i % 2 == 1 else -count) for i, count in enumerate(self.f_vector()))

    def to_dict(self) -> Dict:
        return {"vertex_count": self.vertex_count, "facets": [list(f) for f in self.facets]}


def _maximal(faces: Iterable[Face]) -> List[Face]:
    """Keep only faces not strictly contained in another one."""
    unique = sorted(set(faces), key=len, reverse=True)
    kept: List[Face] = []
    kept_masks: List[int] = []
    for f in unique:
        mask = face_mask(f)
        if any(m & mask == mask for m in kept_masks):
            continue
        kept.append(f)
        kept_masks.append(mask)
    return kept


def from_facets(vertex_count: int, facets: Iterable[Sequence[int]],
                vertex_labels: Optional[Sequence[str]] = None) -> SimplicialComplex:
    """
    Build a complex from (not necessarily maximal) facets.

    Raises:
        ComplexError: If a vertex id is out of range
    """
    facets = [tuple(f) for f in facets]
    for f in facets:
        for v in f:
            if not 0 <= v < vertex_count:
                raise ComplexError(f"vertex {v} out of range for {vertex_count} vertices")
    complex_ = SimplicialComplex(vertex_count, facets, vertex_labels)
    logger.debug("Built %r", complex_)
    return complex_


def void_complex(vertex_count: int = 0) -> SimplicialComplex:
    """The complex {emptyset}."""
    return SimplicialComplex(vertex_count, [()])


def degenerate_complex(vertex_count: int = 0) -> SimplicialComplex:
    """The degenerate complex with no faces."""
    return SimplicialComplex(vertex_count, [])


def simplex(n: int) -> SimplicialComplex:
    """Full simplex on n vertices."""
    return SimplicialComplex(n, [tuple(range(n))])


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the simplex on n vertices, a sphere of dimension n-2."""
    return SimplicialComplex(n, list(combinations(range(n), n - 1)))
