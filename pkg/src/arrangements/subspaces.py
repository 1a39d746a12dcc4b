"""
Affine Subspaces and Arrangements

LEARNING: Exact rational row reduction gives every subspace one canonical key

What we're building:
- AffineSubspace: {x : Ax = b} over QQ, stored as the reduced row echelon
  form of the augmented matrix [A | b]
- Arrangement: ambient dimension plus a list of subspaces, real or complex
- builtin_arrangement: coordinate, type B coordinate, braid, type B braid, k-equal
- JSON with rationals written as "p/q" strings

Key Concept:
- A pivot in the last column of rref([A | b]) means 0 = 1: the system is inconsistent
- Two constraint systems define the same subspace iff their rrefs agree
"""

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import Matrix, Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from src.exceptions import ArrangementError, InconsistentSubspaceError, InfeasibleSizeError

# Set up module logger
logger = logging.getLogger(__name__)

MAX_ARRANGEMENT_N = 7
ARRANGEMENT_KINDS = ("coordinate", "type_b_coordinate", "braid", "type_b_braid", "k_equal")

Row = Tuple[Rational, ...]


def _rational(value) -> Rational:
    try:
        return Rational(str(value)) if isinstance(value, str) else Rational(value)
    except (TypeError, ValueError):
        raise ArrangementError(f"not a rational number: {value!r}")


def canonical_rows(rows: Sequence[Sequence], dim: int) -> Tuple[Row, ...]:
    """
    Nonzero rows of rref([A | b]) over QQ.

    Raises:
        InconsistentSubspaceError: If some row reads 0 = c with c != 0
    """
    rows = [[_rational(v) for v in row] for row in rows]
    if not rows:
        return ()
    if any(len(row) != dim + 1 for row in rows):
        raise ArrangementError(f"every constraint needs {dim} coefficients and a right-hand side")
    matrix = DomainMatrix.from_Matrix(Matrix(rows)).convert_to(QQ)
    reduced, pivots = matrix.rref()
    if dim in pivots:
        raise InconsistentSubspaceError()
    entries = reduced.to_Matrix()
    return tuple(tuple(entries[i, j] for j in range(dim + 1)) for i in range(len(pivots)))


@dataclass(frozen=True)
class AffineSubspace:
    """
    {x in R^dim : Ax = b}, kept in canonical form.

    Attributes:
        dim_ambient: Dimension of the ambient space
        rows: Nonzero rows of rref([A | b]); () is the whole space
    """
    dim_ambient: int
    rows: Tuple[Row, ...] = ()

    @classmethod
    def from_system(cls, A: Sequence[Sequence], b: Sequence, dim_ambient: Optional[int] = None) -> "AffineSubspace":
        """
        Build from a coefficient matrix and right-hand side.

        Raises:
            InconsistentSubspaceError: If the system has no solution
        """
        A = [list(row) for row in A]
        if dim_ambient is None:
            if not A:
                raise ArrangementError("ambient dimension is needed for an empty system")
            dim_ambient = len(A[0])
        if len(b) != len(A):
            raise ArrangementError("A and b need the same number of rows")
        rows = [list(row) + [rhs] for row, rhs in zip(A, b)]
        return cls(dim_ambient, canonical_rows(rows, dim_ambient))

    @property
    def codim(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return self.dim_ambient - len(self.rows)

    @property
    def is_hyperplane(self) -> bool:
        return len(self.rows) == 1

    @property
    def is_central(self) -> bool:
        """Passes through the origin."""
        return all(row[-1] == 0 for row in self.rows)

    def intersect(self, other: "AffineSubspace") -> Optional["AffineSubspace"]:
        """The intersection, or None when it is empty."""
        try:
            return AffineSubspace(self.dim_ambient, canonical_rows(self.rows + other.rows, self.dim_ambient))
        except InconsistentSubspaceError:
            return None

    def contains(self, other: "AffineSubspace") -> bool:
        """True iff other is a subset of self."""
        return self.intersect(other) == other

    def equations(self) -> List[str]:
        """Rows written as "x1 - x2 = 0"."""
        out = []
        for row in self.rows:
            terms = []
            for j, c in enumerate(row[:-1]):
                if c == 0:
                    continue
                name = f"x{j + 1}"
                if c == 1:
                    term = name
                elif c == -1:
                    term = f"-{name}"
                else:
                    term = f"{c}*{name}"
                if terms and not term.startswith("-"):
                    term = "+ " + term
                elif terms:
                    term = "- " + term[1:]
                terms.append(term)
            out.append(f"{' '.join(terms)} = {row[-1]}")
        return out

    def label(self) -> str:
        return "; ".join(self.equations()) or f"R^{self.dim_ambient}"

    def to_dict(self) -> Dict:
        return {"A": [[str(v) for v in row[:-1]] for row in self.rows],
                "b": [str(row[-1]) for row in self.rows]}


@dataclass
class Arrangement:
    """
    A finite collection of affine subspaces of R^dim (or C^dim when complex_).

    Attributes:
        dim: Ambient dimension
        subspaces: Members, in input order
        complex_: Read the same rational data over C
        name: Optional description, e.g. "braid 4"
    """
    dim: int
    subspaces: List[AffineSubspace] = field(default_factory=list)
    complex_: bool = False
    name: str = ""

    def __len__(self) -> int:
        return len(self.subspaces)

    def is_hyperplane_arrangement(self) -> bool:
        return all(s.is_hyperplane for s in self.subspaces)

    def is_central(self) -> bool:
        return all(s.is_central for s in self.subspaces)

    def ambient(self) -> AffineSubspace:
        return AffineSubspace(self.dim)

    def to_dict(self) -> Dict:
        return {"dim": self.dim, "subspaces": [s.to_dict() for s in self.subspaces]}


def arrangement_from_dict(data: Dict, complex_: bool = False) -> Arrangement:
    """
    Parse {"dim": d, "subspaces": [{"A": [[...]], "b": [...]}, ...]}.

    Raises:
        ArrangementError: If keys are missing or entries are not rationals
        InconsistentSubspaceError: If a member is empty
    """
    if not isinstance(data, dict) or "dim" not in data or "subspaces" not in data:
        raise ArrangementError("arrangement JSON needs 'dim' and 'subspaces'")
    dim = int(data["dim"])
    members = []
    for entry in data["subspaces"]:
        if "A" not in entry or "b" not in entry:
            raise ArrangementError("each subspace needs 'A' and 'b'")
        members.append(AffineSubspace.from_system(entry["A"], entry["b"], dim))
    return Arrangement(dim, members, complex_=complex_)


def write_arrangement(arrangement: Arrangement, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(arrangement.to_dict(), handle, sort_keys=True)
    logger.info("Wrote arrangement with %d subspaces to %s", len(arrangement), path)


def read_arrangement(path: Union[str, Path], complex_: bool = False) -> Arrangement:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    return arrangement_from_dict(data, complex_=complex_)


def _unit(n: int, i: int, value: int = 1) -> List[int]:
    row = [0] * n
    row[i] = value
    return row


def _equal_rows(n: int, block: Sequence[int]) -> List[List[int]]:
    """x_{b0} = x_{b1} = ... as consecutive differences, right-hand side 0."""
    rows = []
    for a, c in zip(block, block[1:]):
        row = [0] * (n + 1)
        row[a] = 1
        row[c] = -1
        rows.append(row)
    return rows


def builtin_arrangement(kind: str, n: int, k: Optional[int] = None, complex_: bool = False) -> Arrangement:
    """
    Named arrangements in R^n.

    Args:
        kind: One of ARRANGEMENT_KINDS
            - coordinate: x_i = 0
            - type_b_coordinate: x_i = 1 and x_i = -1
            - braid: x_i = x_j for i < j
            - type_b_braid: x_i = x_j, x_i = -x_j for i < j, and x_i = 0
            - k_equal: x_{i1} = ... = x_{ik} for every k-subset
        n: Ambient dimension
        k: Block size for k_equal
        complex_: Read over C

    Raises:
        InfeasibleSizeError: If n > MAX_ARRANGEMENT_N
        ArrangementError: Unknown kind or bad k
    """
    if n < 0:
        raise ArrangementError(f"dimension must be nonnegative, got {n}")
    if n > MAX_ARRANGEMENT_N:
        raise InfeasibleSizeError("arrangement dimension", n, MAX_ARRANGEMENT_N)
    systems: List[List[List[int]]] = []
    if kind == "coordinate":
        systems = [[_unit(n + 1, i)] for i in range(n)]
    elif kind == "type_b_coordinate":
        for i in range(n):
            systems.append([_unit(n, i) + [1]])
            systems.append([_unit(n, i) + [-1]])
    elif kind == "braid":
        systems = [_equal_rows(n, (i, j)) for i, j in combinations(range(n), 2)]
    elif kind == "type_b_braid":
        for i, j in combinations(range(n), 2):
            systems.append(_equal_rows(n, (i, j)))
            row = [0] * (n + 1)
            row[i] = row[j] = 1
            systems.append([row])
        systems.extend([_unit(n + 1, i)] for i in range(n))
    elif kind == "k_equal":
        if k is None or not 2 <= k <= n:
            raise ArrangementError(f"k_equal needs 2 <= k <= n, got k={k}")
        systems = [_equal_rows(n, block) for block in combinations(range(n), k)]
    else:
        raise ArrangementError(f"unknown arrangement {kind!r}, expected one of {', '.join(ARRANGEMENT_KINDS)}")
    members = [AffineSubspace(n, canonical_rows(rows, n)) for rows in systems]
    name = f"{kind} {n}" + (f" {k}" if k is not None else "")
    logger.info("Built arrangement %s with %d subspaces", name, len(members))
    return Arrangement(n, members, complex_=complex_, name=name)
