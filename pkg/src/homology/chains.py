"""
Chain Complex Module

LEARNING: Sparse exact-integer boundary matrices

What we're building:
- SparseIntegerMatrix: dict-of-dicts (row -> {col: value}) with Python ints
- ChainComplex: one sorted face basis per dimension, boundary maps between them
- The augmented (reduced) complex: the empty face spans dimension -1
- Sparse triplet export ("row col value" lines) for external checking

Key Concept:
- Face F = (v_0 < ... < v_i) maps to sum_j (-1)^j (F - v_j)
- delta_j is the transpose of boundary_{j+1}
"""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from src.complex import Face, SimplicialComplex
from src.config import get_settings
from src.exceptions import DegenerateComplexError, InfeasibleSizeError

# Set up module logger
logger = logging.getLogger(__name__)


class SparseIntegerMatrix:
    """
    Sparse matrix of exact integers.

    Attributes:
        nrows: Number of rows
        ncols: Number of columns
        rows: Mapping row -> {col: nonzero value}
    """

    def __init__(self, nrows: int, ncols: int, rows: Optional[Dict[int, Dict[int, int]]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: Dict[int, Dict[int, int]] = {}
        for r, entries in (rows or {}).items():
            kept = {c: int(v) for c, v in entries.items() if v}
            if kept:
                self.rows[r] = kept

    @classmethod
    def from_triplets(cls, nrows: int, ncols: int, triplets: Iterable[Tuple[int, int, int]]) -> "SparseIntegerMatrix":
        rows: Dict[int, Dict[int, int]] = {}
        for r, c, v in triplets:
            row = rows.setdefault(r, {})
            row[c] = row.get(c, 0) + int(v)
        return cls(nrows, ncols, rows)

    @classmethod
    def from_dense(cls, dense: List[List[int]]) -> "SparseIntegerMatrix":
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        return cls(nrows, ncols, {r: {c: v for c, v in enumerate(row) if v} for r, row in enumerate(dense)})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def nnz(self) -> int:
        return sum(len(entries) for entries in self.rows.values())

    def get(self, r: int, c: int) -> int:
        return self.rows.get(r, {}).get(c, 0)

    def is_zero(self) -> bool:
        return not self.rows

    def transpose(self) -> "SparseIntegerMatrix":
        cols: Dict[int, Dict[int, int]] = {}
        for r, entries in self.rows.items():
            for c, v in entries.items():
                cols.setdefault(c, {})[r] = v
        return SparseIntegerMatrix(self.ncols, self.nrows, cols)

    def matmul(self, other: "SparseIntegerMatrix") -> "SparseIntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
        out: Dict[int, Dict[int, int]] = {}
        for r, entries in self.rows.items():
            acc: Dict[int, int] = {}
            for k, v in entries.items():
                for c, w in other.rows.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + v * w
            out[r] = acc
        return SparseIntegerMatrix(self.nrows, other.ncols, out)

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.ncols for _ in range(self.nrows)]
        for r, entries in self.rows.items():
            for c, v in entries.items():
                dense[r][c] = v
        return dense

    def to_domain_matrix(self, domain=ZZ) -> DomainMatrix:
        """sympy DomainMatrix (sparse representation) over ZZ or QQ."""
        rows = {r: {c: domain(v) for c, v in entries.items()} for r, entries in self.rows.items()}
        return DomainMatrix(rows, self.shape, domain)

    def to_triplets(self) -> str:
        """One 'row col value' line per nonzero entry, row-major order."""
        lines = []
        for r in sorted(self.rows):
            for c in sorted(self.rows[r]):
                lines.append(f"{r} {c} {self.rows[r][c]}")
        return "\n".join(lines) + ("\n" if lines else "")


class ChainComplex:
    """
    Augmented simplicial chain complex of a nondegenerate complex.

    LEARNING POINT:
    - bases[i] lists the i-faces (i = -1 .. dim) in lexicographic order
    - boundary(i) is the (#(i-1)-faces) x (#i-faces) matrix of the boundary map,
      built lazily and cached
    - boundary(i) for i outside -1..dim+1 is an empty map
    """

    def __init__(self, complex_: SimplicialComplex):
        if complex_.is_degenerate:
            raise DegenerateComplexError("chain complex")
        self.complex = complex_
        self.dim = complex_.dim
        self.bases: Dict[int, List[Face]] = {i: complex_.faces(i) for i in range(-1, self.dim + 1)}
        self._index: Dict[int, Dict[Face, int]] = {}
        self._boundaries: Dict[int, SparseIntegerMatrix] = {}

    def rank_of_chain_group(self, i: int) -> int:
        return len(self.bases.get(i, []))

    def index(self, i: int) -> Dict[Face, int]:
        if i not in self._index:
            self._index[i] = {f: k for k, f in enumerate(self.bases.get(i, []))}
        return self._index[i]

    def boundary(self, i: int) -> SparseIntegerMatrix:
        if i in self._boundaries:
            return self._boundaries[i]
        source = self.bases.get(i, [])
        target_index = self.index(i - 1)
        rows: Dict[int, Dict[int, int]] = {}
        if i >= 0:
            for col, face in enumerate(source):
                for j in range(len(face)):
                    row = target_index[face[:j] + face[j + 1:]]
                    rows.setdefault(row, {})[col] = -1 if j % 2 else 1
        matrix = SparseIntegerMatrix(self.rank_of_chain_group(i - 1), len(source), rows)
        self._boundaries[i] = matrix
        return matrix

    def coboundary(self, i: int) -> SparseIntegerMatrix:
        """delta_i : C^i -> C^{i+1}, the transpose of boundary(i + 1)."""
        return self.boundary(i + 1).transpose()

    def boundary_squared_is_zero(self) -> bool:
        for i in range(0, self.dim + 1):
            if not self.boundary(i).matmul(self.boundary(i + 1)).is_zero():
                logger.error("boundary o boundary != 0 in dimension %d", i + 1)
                return False
        return True


def chain_complex(complex_: SimplicialComplex, max_elements: Optional[int] = None) -> ChainComplex:
    """
    Build the augmented chain complex of a complex.

    Args:
        complex_: Nondegenerate simplicial complex
        max_elements: Guard on the total number of faces (default from settings)

    Raises:
        DegenerateComplexError: For the degenerate complex
        InfeasibleSizeError: If the face count exceeds the guard
    """
    limit = max_elements if max_elements is not None else get_settings().max_elements
    total = complex_.face_count()
    if total > limit:
        raise InfeasibleSizeError("chain complex", total, limit)
    cc = ChainComplex(complex_)
    logger.debug("Chain complex with ranks %s",
                 [cc.rank_of_chain_group(i) for i in range(-1, cc.dim + 1)])
    return cc
