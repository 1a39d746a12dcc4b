"""
Custom exceptions for posettop.

This module defines a hierarchy of exceptions used throughout the project.
All custom exceptions inherit from PosetTopError for easy catching.
"""


class PosetTopError(Exception):
    """Base exception for all posettop errors."""
    pass


# ============== POSETS ==============

class PosetError(PosetTopError):
    """Base exception for order-theoretic errors."""
    pass


class CycleError(PosetError):
    """
    Raised when a cover list contains a directed cycle.

    The offending cycle is kept on the exception so callers can show it.
    """
    def __init__(self, cycle):
        self.cycle = list(cycle)
        self.message = f"cycle in cover relation: {' -> '.join(str(c) for c in self.cycle)}"
        super().__init__(self.message)


class IncomparableError(PosetError):
    """Raised when an operation needs x <= y but the pair is incomparable."""
    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        self.message = f"elements {x} and {y} are not comparable as x <= y"
        super().__init__(self.message)


class NotBoundedError(PosetError):
    """Raised when a unique bottom or top element is required but missing."""
    def __init__(self, what: str = "poset"):
        self.message = f"{what} must have a unique minimum and maximum"
        super().__init__(self.message)


class MissingBoundError(PosetError):
    """Raised when a bottom (or top) element is required but missing."""
    def __init__(self, which: str = "bottom"):
        self.message = f"poset has no unique {which} element"
        super().__init__(self.message)


class NotPureError(PosetError):
    """Raised when a rank function or rank selection is asked of a non-pure poset."""
    def __init__(self, what: str = "poset"):
        self.message = f"{what} is not pure"
        super().__init__(self.message)


class NotALatticeError(PosetError):
    """Raised when meets or joins are required but some pair lacks one."""
    def __init__(self, message: str = None):
        self.message = message or "poset is not a lattice"
        super().__init__(self.message)


# ============== COMPLEXES ==============

class ComplexError(PosetTopError):
    """Base exception for simplicial complex errors."""
    pass


class DegenerateComplexError(ComplexError):
    """Raised when an operation needs a nondegenerate complex (one containing the empty face)."""
    def __init__(self, operation: str):
        self.message = f"{operation} is undefined on the degenerate empty complex"
        super().__init__(self.message)


class FaceNotFoundError(ComplexError):
    """Raised when a face is not in the complex (e.g. link of a nonface)."""
    def __init__(self, face):
        self.face = tuple(face)
        self.message = f"{list(self.face)} is not a face of the complex"
        super().__init__(self.message)


# ============== HOMOLOGY ==============

class HomologyError(PosetTopError):
    """Base exception for homology computations."""
    pass


class NotASphereError(HomologyError):
    """
    Raised when a subcomplex expected to be a homology sphere is not one.

    This can happen when:
    - The complex is not pure
    - Top homology is not a single copy of Z
    - Some lower reduced homology survives
    """
    def __init__(self, profile: str):
        self.message = f"not a homology sphere: {profile}"
        super().__init__(self.message)


# ============== SHELLING ==============

class ShellingError(PosetTopError):
    """Base exception for shelling and labeling checks."""
    pass


class InvalidOrderError(ShellingError):
    """Raised when a facet order is not a permutation of the facets."""
    def __init__(self, reason: str):
        self.message = f"invalid facet order: {reason}"
        super().__init__(self.message)


class MissingLabelError(ShellingError):
    """Raised when an edge labeling misses a cover edge."""
    def __init__(self, edge):
        self.edge = tuple(edge)
        self.message = f"cover edge {self.edge} has no label"
        super().__init__(self.message)


class NotELError(ShellingError):
    """Raised when a labeling must be EL but fails on some interval."""
    def __init__(self, interval, reason: str = None):
        self.interval = tuple(interval)
        self.reason = reason or "no unique lexicographically first increasing chain"
        self.message = f"{self.reason}: interval {list(self.interval)}"
        super().__init__(self.message)


class CertificateError(ShellingError):
    """Raised when a recursive atom ordering certificate misses an interval."""
    def __init__(self, path, reason: str = None):
        self.path = tuple(path)
        self.reason = reason or "certificate has no atom order for interval"
        self.message = f"{self.reason}: rooted at {list(self.path)}"
        super().__init__(self.message)


# ============== FAMILIES ==============

class FamilyError(PosetTopError):
    """Base exception for family constructors."""
    pass


class UnknownFamilyError(FamilyError):
    """Raised when a family name or parameter set is not recognised."""
    def __init__(self, name: str, reason: str = None):
        self.name = name
        self.reason = reason or "unknown family"
        self.message = f"{self.reason}: {name}"
        super().__init__(self.message)


class InfeasibleSizeError(FamilyError):
    """
    Raised when a construction would exceed the configured feasibility guard.

    User action: lower the parameters or raise POSETTOP_MAX_ELEMENTS.
    """
    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        self.message = f"{what} needs {size} cells, above the limit {limit}"
        super().__init__(self.message)


class UnsupportedLabelingError(FamilyError):
    """Raised when a built-in labeling is requested for a family that has none."""
    def __init__(self, family: str, labeling: str):
        self.message = f"labeling '{labeling}' is not defined for family '{family}'"
        super().__init__(self.message)


# ============== IDENTITIES ==============

class IdentityError(PosetTopError):
    """Base exception for identity checks."""
    pass


class HypothesisError(IdentityError):
    """
    Raised when the hypothesis of a theorem does not hold for the input.

    This is not an identity failure: the identity is simply not applicable.
    """
    def __init__(self, check: str, detail: str):
        self.check = check
        self.detail = detail
        self.message = f"{check}: hypothesis fails ({detail})"
        super().__init__(self.message)


class NotOrderPreservingError(IdentityError):
    """Raised when a map or group element does not preserve the order."""
    def __init__(self, x: int, y: int):
        self.message = f"map is not order-preserving on the pair ({x}, {y})"
        super().__init__(self.message)


class NotAClosureError(IdentityError):
    """Raised when a map is not a closure operator."""
    def __init__(self, reason: str):
        self.message = f"not a closure operator: {reason}"
        super().__init__(self.message)


# ============== ARRANGEMENTS ==============

class ArrangementError(PosetTopError):
    """Base exception for arrangement errors."""
    pass


class InconsistentSubspaceError(ArrangementError):
    """Raised when a linear system defining a subspace has no solution."""
    def __init__(self, message: str = None):
        self.message = message or "constraint system is inconsistent (empty subspace)"
        super().__init__(self.message)


class NotHyperplaneError(ArrangementError):
    """Raised when a hyperplane-only formula is applied to a higher-codimension subspace."""
    def __init__(self, index: int):
        self.message = f"member {index} of the arrangement is not a hyperplane"
        super().__init__(self.message)


# ============== ORACLES ==============

class OracleError(PosetTopError):
    """Raised for invalid oracle input (not a partition, bad series operation)."""
    def __init__(self, reason: str):
        self.message = reason
        super().__init__(self.message)


# ============== CONFIG ==============

class ConfigError(PosetTopError):
    """Raised when configuration values are missing or invalid."""
    def __init__(self, key: str, reason: str):
        self.key = key
        self.message = f"config '{key}': {reason}"
        super().__init__(self.message)


# ============== CLI ==============

class UsageError(PosetTopError):
    """Raised when command-line options do not fit together (exit code 2)."""
    def __init__(self, reason: str):
        self.message = reason
        super().__init__(self.message)
