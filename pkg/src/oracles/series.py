"""
Truncated Power Series

LEARNING: Exact formal power series, cut off at a fixed order

What we're building:
- TruncatedSeries: c_0 + c_1 u + ... + c_N u^N with sympy coefficients,
  either rationals or polynomials in a second variable t
- Ring operations, derivative, integral, reciprocal, exp, log, composition
  and the compositional inverse
- from_egf / egf_coefficient to move between a_n and a_n u^n / n!

Key Concept:
- Every operation keeps the smaller truncation order of its operands, so
  no coefficient is ever reported past the order it is known to
"""

import logging
from typing import Callable, Iterable, List, Sequence, Union

from sympy import Expr, Integer, Rational, S, Symbol, expand, factorial, sympify

from src.exceptions import OracleError

# Set up module logger
logger = logging.getLogger(__name__)

T = Symbol("t")  # second variable of bivariate series

Scalar = Union[int, Rational, Expr]


class TruncatedSeries:
    """Power series in u known up to u^order."""

    def __init__(self, coefficients: Iterable[Scalar], order: int):
        if order < 0:
            raise OracleError(f"truncation order must be nonnegative, got {order}")
        values = [expand(sympify(c)) for c in coefficients][: order + 1]
        values.extend([S.Zero] * (order + 1 - len(values)))
        self.order = order
        self.coefficients: List[Expr] = values

    # ---- constructors ----

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        """The series u."""
        return cls([0, 1], order)

    @classmethod
    def from_egf(cls, values: Sequence[Scalar], order: int) -> "TruncatedSeries":
        """sum a_n u^n / n! from the list a_0, a_1, ..."""
        return cls([sympify(a) / factorial(n) for n, a in enumerate(values)], order)

    @classmethod
    def from_function(cls, term: Callable[[int], Scalar], order: int) -> "TruncatedSeries":
        """Coefficient c_n = term(n) for n = 0..order."""
        return cls([term(n) for n in range(order + 1)], order)

    # ---- access ----

    def __getitem__(self, n: int) -> Expr:
        if n < 0 or n > self.order:
            raise OracleError(f"coefficient u^{n} is outside the truncation order {self.order}")
        return self.coefficients[n]

    def egf_coefficient(self, n: int) -> Expr:
        """n! [u^n]."""
        return expand(self[n] * factorial(n))

    def coefficient(self, n: int, m: int) -> Expr:
        """[u^n t^m] of a bivariate series."""
        return self[n].coeff(T, m)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order + 1 for the zero series)."""
        for n, c in enumerate(self.coefficients):
            if c != 0:
                return n
        return self.order + 1

    # ---- arithmetic ----

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries((a + b for a, b in zip(self.coefficients, other.coefficients)), order)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-c for c in self.coefficients), self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            scalar = sympify(other)
            return TruncatedSeries((scalar * c for c in self.coefficients), self.order)
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        product = [S.Zero] * (order + 1)
        for i in range(order + 1):
            if a[i] == 0:
                continue
            for j in range(order + 1 - i):
                if b[j] != 0:
                    product[i + j] += a[i] * b[j]
        return TruncatedSeries(product, order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return self * (S.One / sympify(other))

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.reciprocal() ** (-k)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(expand(a - b) == 0 for a, b in zip(self.coefficients[: order + 1],
                                                       other.coefficients[: order + 1]))

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients, min(order, self.order))

    # ---- calculus ----

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries.zero(0)
        return TruncatedSeries((n * self.coefficients[n] for n in range(1, self.order + 1)), self.order - 1)

    def integral(self, constant: Scalar = 0) -> "TruncatedSeries":
        return TruncatedSeries([constant] + [c / (n + 1) for n, c in enumerate(self.coefficients)],
                               self.order + 1)

    def _require_constant(self, operation: str, allowed=None) -> Expr:
        c0 = self.coefficients[0]
        if allowed is not None and expand(c0 - allowed) != 0:
            raise OracleError(f"{operation} needs constant term {allowed}, got {c0}")
        if allowed is None and (not c0.is_number or c0 == 0):
            raise OracleError(f"{operation} needs a nonzero numeric constant term, got {c0}")
        return c0

    def reciprocal(self) -> "TruncatedSeries":
        c0 = self._require_constant("reciprocal")
        f = self.coefficients
        g = [S.One / c0]
        for n in range(1, self.order + 1):
            g.append(expand(-sum(f[k] * g[n - k] for k in range(1, n + 1)) / c0))
        return TruncatedSeries(g, self.order)

    def exp(self) -> "TruncatedSeries":
        """
        exp of a series without constant term.

        LEARNING POINT:
        - g = exp(f) satisfies g' = f' g, so n g_n = sum_k k f_k g_{n-k}
        """
        self._require_constant("exp", 0)
        f = self.coefficients
        g = [S.One]
        for n in range(1, self.order + 1):
            g.append(expand(sum(k * f[k] * g[n - k] for k in range(1, n + 1)) / n))
        return TruncatedSeries(g, self.order)

    def log(self) -> "TruncatedSeries":
        """log of a series with constant term 1, from f' = f g'."""
        self._require_constant("log", 1)
        f = self.coefficients
        g = [S.Zero]
        for n in range(1, self.order + 1):
            correction = sum(k * g[k] * f[n - k] for k in range(1, n))
            g.append(expand((n * f[n] - correction) / n))
        return TruncatedSeries(g, self.order)

    # ---- composition ----

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """
        self(inner(u)) by Horner's rule.

        Raises:
            OracleError: If inner has a constant term
        """
        inner._require_constant("compose (inner series)", 0)
        order = min(self.order, inner.order)
        result = TruncatedSeries.constant(self.coefficients[order], order)
        for n in range(order - 1, -1, -1):
            result = result * inner + self.coefficients[n]
        return result

    def compositional_inverse(self) -> "TruncatedSeries":
        """
        g with self(g(u)) = u, solved one coefficient at a time.

        Adding delta u^n to g moves [u^n] self(g) by c_1 delta and leaves the
        lower coefficients alone, so each step cancels one error term.

        Raises:
            OracleError: If the constant term is not 0 or c_1 is not a nonzero number
        """
        self._require_constant("compositional inverse", 0)
        if self.order < 1:
            raise OracleError("compositional inverse needs truncation order >= 1")
        c1 = self.coefficients[1]
        if not c1.is_number or c1 == 0:
            raise OracleError(f"compositional inverse needs a nonzero numeric linear term, got {c1}")
        g = [S.Zero, S.One / c1] + [S.Zero] * (self.order - 1)
        for n in range(2, self.order + 1):
            error = self.compose(TruncatedSeries(g, self.order))[n]
            g[n] = expand(-error / c1)
        inverse = TruncatedSeries(g, self.order)
        logger.debug("Compositional inverse computed to order %d", self.order)
        return inverse

    def __repr__(self) -> str:
        terms = [f"({c})*u^{n}" for n, c in enumerate(self.coefficients) if c != 0]
        return f"TruncatedSeries({' + '.join(terms) or '0'}, order={self.order})"


def alternating_block_series(step: int, offset: int, order: int, sign: bool = True) -> TruncatedSeries:
    """
    sum_j (-1)^j u^(j*step + offset) / (j*step + offset)!  (sign dropped when sign=False).

    With step 2 this is cos u (offset 0) or sin u (offset 1).
    """
    if step < 1:
        raise OracleError(f"block step must be positive, got {step}")
    coefficients: List[Expr] = [S.Zero] * (order + 1)
    j = 0
    while j * step + offset <= order:
        n = j * step + offset
        coefficients[n] = (Integer(-1) ** j if sign else S.One) / factorial(n)
        j += 1
    return TruncatedSeries(coefficients, order)


def cos_series(order: int) -> TruncatedSeries:
    return alternating_block_series(2, 0, order)


def sin_series(order: int) -> TruncatedSeries:
    return alternating_block_series(2, 1, order)


def exp_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_function(lambda n: S.One / factorial(n), order)
