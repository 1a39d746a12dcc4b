"""
Finite Fields

LEARNING: Small exact field arithmetic from lookup tables

What we're building:
- FiniteField(q) for q a prime power, elements coded as 0..q-1
- Tables built once: prime fields by modular arithmetic, extension fields
  by polynomial arithmetic modulo an irreducible polynomial (sympy galoistools)
- Row reduction helpers used by the subspace lattice

Key Concept:
- Element e of GF(p^k) is the polynomial whose coefficients are the base-p
  digits of e (constant term last digit)
- The modulus is the first monic irreducible polynomial of degree k in
  counting order, so tables are reproducible run to run
"""

import logging
from itertools import combinations, product
from typing import List, Sequence, Tuple

from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_rem, gf_strip

from src.exceptions import FamilyError

# Set up module logger
logger = logging.getLogger(__name__)

MAX_FIELD_SIZE = 64

Vector = Tuple[int, ...]


def _to_poly(e: int, p: int) -> List[int]:
    digits = []
    while e:
        digits.append(e % p)
        e //= p
    return gf_strip([ZZ(v) for v in reversed(digits)])


def _from_poly(poly: Sequence, p: int) -> int:
    value = 0
    for c in poly:
        value = value * p + int(c)
    return value


def _first_irreducible(k: int, p: int) -> List:
    for tail in product(range(p), repeat=k):
        candidate = [ZZ(1)] + [ZZ(c) for c in tail]
        if gf_irreducible_p(candidate, p, ZZ):
            return candidate
    raise FamilyError(f"no irreducible polynomial of degree {k} over GF({p})")


class FiniteField:
    """
    GF(q) with add/mul/neg/inv tables.

    Attributes:
        q: Field size
        p: Characteristic
    """

    def __init__(self, q: int):
        if q < 2:
            raise FamilyError(f"field size must be at least 2, got {q}")
        if q > MAX_FIELD_SIZE:
            raise FamilyError(f"field size {q} exceeds {MAX_FIELD_SIZE}")
        factors = factorint(q)
        if len(factors) != 1:
            raise FamilyError(f"{q} is not a prime power")
        (p, k), = factors.items()
        self.q = q
        self.p = int(p)
        self.degree = int(k)

        if self.degree == 1:
            self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            modulus = _first_irreducible(self.degree, self.p)
            polys = [_to_poly(e, self.p) for e in range(q)]
            self.add_table = [[_from_poly(gf_add(polys[a], polys[b], self.p, ZZ), self.p)
                               for b in range(q)] for a in range(q)]
            self.mul_table = [[_from_poly(gf_rem(gf_mul(polys[a], polys[b], self.p, ZZ), modulus, self.p, ZZ),
                                          self.p) for b in range(q)] for a in range(q)]
            logger.debug("GF(%d) built with modulus %s", q, [int(c) for c in modulus])

        self.neg_table = [self.add_table[a].index(0) for a in range(q)]
        self.inv_table = [0] + [self.mul_table[a].index(1) for a in range(1, q)]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def axpy(self, a: int, x: Sequence[int], y: Sequence[int]) -> Vector:
        """y + a*x componentwise."""
        return tuple(self.add_table[yi][self.mul_table[a][xi]] for xi, yi in zip(x, y))

    def reduce(self, vector: Sequence[int], rref: Sequence[Sequence[int]]) -> Vector:
        """Reduce a vector against the rows of a reduced row-echelon matrix."""
        v = tuple(vector)
        for row in rref:
            pivot = next(i for i, c in enumerate(row) if c)
            if v[pivot]:
                v = self.axpy(self.neg_table[v[pivot]], row, v)
        return v

    def in_span(self, vector: Sequence[int], rref: Sequence[Sequence[int]]) -> bool:
        return not any(self.reduce(vector, rref))


def rref_matrices(field: FiniteField, n: int, k: int):
    """
    Every k x n matrix over the field in reduced row-echelon form.

    LEARNING POINT:
    - Choose pivot columns, put 1 at each pivot and 0 in the other pivot
      columns, then fill the free entries to the right of each pivot in all ways
    - These matrices are in bijection with the k-dimensional subspaces
    """
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivot_set]
        for values in product(range(field.q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), value in zip(free, values):
                rows[r][c] = value
            yield tuple(tuple(row) for row in rows)
