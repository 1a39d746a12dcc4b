"""
Identity Check Results

LEARNING: Every checker hands back the same small record

What we're building:
- IdentityCheck: name, both sides, agreement flag, free-form detail
- Truthiness follows the agreement flag, so `assert check` reads naturally
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict

from sympy import Basic


def _key_order(key: Any):
    try:
        return (0, int(key), "")
    except (TypeError, ValueError):
        return (1, 0, str(key))


def jsonable(value: Any) -> Any:
    """
    Plain JSON data from checker output.

    Dict keys become strings in numeric order, sympy integers become ints and
    every other exact value (rationals, polynomials) becomes its string.
    """
    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in sorted(value.items(), key=lambda kv: _key_order(kv[0]))}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=_key_order)
    if isinstance(value, bool) or value is None or isinstance(value, (int, float, str)):
        return value
    if isinstance(value, Basic):
        return int(value) if value.is_Integer else str(value)
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    return str(value)


@dataclass
class IdentityCheck:
    """
    Both sides of an identity, evaluated by independent code paths.

    Attributes:
        name: Check name (philip_hall, kunneth_join, ...)
        holds: True iff lhs == rhs
        lhs: Left-hand side (an integer or a dim -> value dict)
        rhs: Right-hand side
        detail: Human-readable note on the instance
    """
    name: str
    holds: bool
    lhs: Any = None
    rhs: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "detail": self.detail,
        }


def compare(name: str, lhs: Any, rhs: Any, detail: str = "") -> IdentityCheck:
    return IdentityCheck(name=name, holds=lhs == rhs, lhs=lhs, rhs=rhs, detail=detail)
