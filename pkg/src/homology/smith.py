"""
Smith Normal Form Module

LEARNING: Exact elimination over the integers without coefficient blow-up

What we're building:
- Invariant factors d_1 | d_2 | ... | d_r of a sparse integer matrix
- Its rank r (number of nonzero invariant factors)

Key Concept:
- Phase 1 eliminates on unit (+-1) pivots while the matrix is still sparse.
  A unit pivot clears its column by row operations; the matching column
  operations would only touch the pivot row, so the row and column are
  simply dropped and a 1 is recorded. Boundary matrices are mostly +-1,
  so this phase does nearly all of the work
- Phase 2 runs textbook Smith reduction (smallest-|entry| pivot) on the
  small dense remainder
- Phase 3 turns the diagonal into a divisibility chain with gcd/lcm swaps
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Set

from src.homology.chains import SparseIntegerMatrix

# Set up module logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithForm:
    """Nonzero invariant factors (a divisibility chain) and the rank."""
    invariant_factors: List[int] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> List[int]:
        """Invariant factors greater than 1."""
        return [d for d in self.invariant_factors if d > 1]


def _unit_phase(rows: Dict[int, Dict[int, int]]) -> int:
    """
    Eliminate unit pivots in place; return how many were removed.

    Pivot choice: sparsest column first, then the shortest row holding a unit
    in that column, to keep fill-in low.
    """
    cols: Dict[int, Set[int]] = {}
    for r, entries in rows.items():
        for c in entries:
            cols.setdefault(c, set()).add(r)

    removed = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols, key=lambda k: (len(cols[k]), k)):
            holders = cols.get(c)
            if not holders:
                cols.pop(c, None)
                continue
            units = [r for r in holders if abs(rows[r][c]) == 1]
            if not units:
                continue
            p = min(units, key=lambda r: (len(rows[r]), r))
            pivot_row = rows.pop(p)
            sign = pivot_row[c]  # +-1, its own inverse
            for r in list(holders):
                if r == p:
                    continue
                row = rows[r]
                factor = row[c] * sign
                for k, v in pivot_row.items():
                    new = row.get(k, 0) - factor * v
                    if new:
                        if k not in row:
                            cols.setdefault(k, set()).add(r)
                        row[k] = new
                    elif k in row:
                        del row[k]
                        cols[k].discard(r)
                if not row:
                    del rows[r]
            for k in pivot_row:
                if k in cols:
                    cols[k].discard(p)
            cols.pop(c, None)
            removed += 1
            progress = True
    return removed


def _dense_diagonal(rows: Dict[int, Dict[int, int]]) -> List[int]:
    """Smith reduction on what is left after the unit phase; returns |diagonal| entries."""
    row_ids = sorted(rows)
    col_ids = sorted({c for entries in rows.values() for c in entries})
    if not row_ids or not col_ids:
        return []
    col_pos = {c: k for k, c in enumerate(col_ids)}
    A = [[0] * len(col_ids) for _ in row_ids]
    for i, r in enumerate(row_ids):
        for c, v in rows[r].items():
            A[i][col_pos[c]] = v
    m, n = len(A), len(A[0])
    logger.debug("Dense Smith phase on %d x %d remainder", m, n)

    diagonal = []
    t = 0
    while t < min(m, n):
        # smallest nonzero |entry| in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]

        while True:
            pivot = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // pivot
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // pivot
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        dirty = True
            if not dirty:
                break
            # a remainder survived: move the smallest entry of row/col t to the pivot
            best = (t, t)
            for i in range(t, m):
                if A[i][t] and abs(A[i][t]) < abs(A[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, n):
                if A[t][j] and abs(A[t][j]) < abs(A[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diagonal.append(abs(A[t][t]))
        t += 1
    return diagonal


def _divisibility_chain(diagonal: List[int]) -> List[int]:
    d = sorted(x for x in diagonal if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def smith_normal_form(matrix: SparseIntegerMatrix) -> SmithForm:
    """
    Invariant factors of an integer matrix.

    Args:
        matrix: Sparse integer matrix (not modified)

    Returns:
        SmithForm with the nonzero invariant factors, smallest first

    Example:
        [[2, 4], [6, 8]] -> invariant factors [2, 4]
    """
    rows = {r: dict(entries) for r, entries in matrix.rows.items()}
    units = _unit_phase(rows)
    rest = _dense_diagonal(rows)
    factors = [1] * units + _divisibility_chain(rest)
    logger.debug("SNF of %dx%d: %d unit pivots, %d from dense phase, torsion %s",
                 matrix.nrows, matrix.ncols, units, len(rest), [d for d in factors if d > 1])
    return SmithForm(invariant_factors=factors)


def integer_rank(matrix: SparseIntegerMatrix) -> int:
    return smith_normal_form(matrix).rank
