"""
Complex Operations

LEARNING: Every construction returns a fresh immutable complex

What we're building:
- join, cone, suspension
- link of a face, induced subcomplex
- k-skeleton, pure m-skeleton, the facet filtration generated by big facets
- Alexander dual with respect to the full vertex set
"""

import logging
from typing import Iterable, List, Sequence

from src.complex.simplicial import Face, SimplicialComplex, face_mask
from src.exceptions import ComplexError, FaceNotFoundError

# Set up module logger
logger = logging.getLogger(__name__)

OPERATION_KINDS = ("join", "link", "skeleton", "pure_skeleton", "upper_facets", "generated", "suspension", "cone")


def join(delta: SimplicialComplex, gamma: SimplicialComplex) -> SimplicialComplex:
    """
    Delta * Gamma with Gamma's vertices shifted by delta.vertex_count.

    Joining with the degenerate complex gives the degenerate complex;
    joining with {emptyset} is the identity.
    """
    offset = delta.vertex_count
    facets = [f + tuple(v + offset for v in g) for f in delta.facets for g in gamma.facets]
    labels = None
    if delta.vertex_labels is not None and gamma.vertex_labels is not None:
        labels = list(delta.vertex_labels) + list(gamma.vertex_labels)
    return SimplicialComplex(offset + gamma.vertex_count, facets, labels)


def cone(delta: SimplicialComplex) -> SimplicialComplex:
    """Cone with apex delta.vertex_count."""
    return join(delta, SimplicialComplex(1, [(0,)]))


def suspension(delta: SimplicialComplex) -> SimplicialComplex:
    """susp(Delta) = Delta * {{a}, {b}}."""
    return join(delta, SimplicialComplex(2, [(0,), (1,)]))


def link(delta: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """
    lk F = {G in Delta : G u F in Delta, G n F = 0}.

    Raises:
        FaceNotFoundError: If F is not a face of Delta
    """
    face = tuple(sorted(set(face)))
    if not delta.contains(face):
        raise FaceNotFoundError(face)
    mask = face_mask(face)
    facets = []
    for f in delta.facets:
        if face_mask(f) & mask == mask:
            facets.append(tuple(v for v in f if not mask >> v & 1))
    return SimplicialComplex(delta.vertex_count, facets, delta.vertex_labels)


def induced_subcomplex(delta: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Faces of Delta contained in the given vertex set."""
    mask = face_mask(vertices)
    facets = [tuple(v for v in f if mask >> v & 1) for f in delta.facets]
    return SimplicialComplex(delta.vertex_count, facets, delta.vertex_labels)


def skeleton(delta: SimplicialComplex, k: int) -> SimplicialComplex:
    """All faces of dimension at most k."""
    if delta.is_degenerate:
        return delta
    facets: List[Face] = [f for f in delta.facets if len(f) - 1 <= k]
    if k >= -1:
        facets.extend(delta.faces(k))
    return SimplicialComplex(delta.vertex_count, facets, delta.vertex_labels)


def pure_skeleton(delta: SimplicialComplex, m: int) -> SimplicialComplex:
    """Faces of dimension m together with all their subfaces ({emptyset} if there are none)."""
    if delta.is_degenerate:
        return delta
    facets = delta.faces(m) if m >= -1 else []
    return SimplicialComplex(delta.vertex_count, facets or [()], delta.vertex_labels)


def upper_facets(delta: SimplicialComplex, m: int) -> SimplicialComplex:
    """
    Delta^<m>: the subcomplex generated by the facets of dimension at least m.

    Returns {emptyset} if no facet is that big.
    """
    if delta.is_degenerate:
        return delta
    facets = [f for f in delta.facets if len(f) - 1 >= m]
    return SimplicialComplex(delta.vertex_count, facets or [()], delta.vertex_labels)


def generated(vertex_count: int, faces: Iterable[Sequence[int]]) -> SimplicialComplex:
    """<F_1, ..., F_k>: the smallest complex containing the given faces."""
    return SimplicialComplex(vertex_count, [tuple(f) for f in faces])


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    """
    Delta^v = {V - F : F a subset of V, F not in Delta} for V = all vertex ids.

    LEARNING POINT:
    - Facets of the dual are complements of minimal nonfaces
    - A minimal nonface N has every N - w in Delta, so N = G + {v} for a face G;
      scanning faces G (the empty face included) finds them all
    - The full simplex has no nonface, so its dual is degenerate; the
      degenerate complex has the empty set as its only minimal nonface,
      so its dual is the full simplex
    """
    n = delta.vertex_count
    full = tuple(range(n))
    if delta.is_degenerate:
        return SimplicialComplex(n, [full])
    minimal_nonfaces = set()
    for G in delta.all_faces():
        g_mask = face_mask(G)
        for v in range(n):
            if g_mask >> v & 1:
                continue
            candidate = tuple(sorted(G + (v,)))
            if delta.contains(candidate):
                continue
            if all(delta.contains(candidate[:i] + candidate[i + 1:]) for i in range(len(candidate))):
                minimal_nonfaces.add(candidate)
    facets = [tuple(v for v in full if v not in N) for N in minimal_nonfaces]
    dual = SimplicialComplex(n, facets, delta.vertex_labels)
    logger.debug("Alexander dual: %d minimal nonfaces -> %r", len(minimal_nonfaces), dual)
    return dual


def apply_operation(delta: SimplicialComplex, kind: str, argument=None) -> SimplicialComplex:
    """
    Dispatch on an operation name.

    Args:
        delta: Input complex
        kind: One of OPERATION_KINDS
        argument: Second complex for join, a face for link, an integer for
            skeleton/pure_skeleton/upper_facets, a list of faces for generated

    Raises:
        ComplexError: Unknown kind or missing argument
    """
    if kind == "join":
        if not isinstance(argument, SimplicialComplex):
            raise ComplexError("join needs a second complex")
        return join(delta, argument)
    if kind == "link":
        return link(delta, argument or ())
    if kind in ("skeleton", "pure_skeleton", "upper_facets"):
        if argument is None:
            raise ComplexError(f"{kind} needs a dimension")
        return {"skeleton": skeleton, "pure_skeleton": pure_skeleton,
                "upper_facets": upper_facets}[kind](delta, int(argument))
    if kind == "generated":
        return generated(delta.vertex_count, argument or [])
    if kind == "suspension":
        return suspension(delta)
    if kind == "cone":
        return cone(delta)
    raise ComplexError(f"unknown complex operation: {kind}")
