"""
Order Complex / Face Poset Bridge

LEARNING: Two functors between posets and complexes

What we're building:
- order_complex(P): faces are the chains of P
- face_poset(Delta): nonempty faces by inclusion; face_lattice adds fresh bounds
- barycentric_subdivision(Delta) = order_complex(face_poset(Delta))

Key Concept:
- Vertex v of the order complex is element v of P
- Faces are stored as sorted id tuples; that fixes the orientation used by
  homology whatever linear extension the ids happen to follow
"""

import logging

from src.complex.simplicial import SimplicialComplex
from src.exceptions import DegenerateComplexError
from src.poset import Poset, bounded_extension, iter_maximal_chains

# Set up module logger
logger = logging.getLogger(__name__)


def order_complex(P: Poset) -> SimplicialComplex:
    """
    Delta(P): vertices are elements, facets are maximal chains.

    The empty poset gives {emptyset}.
    """
    facets = [chain.elements for chain in iter_maximal_chains(P)]
    delta = SimplicialComplex(len(P), facets, P.labels)
    logger.debug("Order complex of %r: %d facets, dim %d", P, len(facets), delta.dim)
    return delta


def _face_label(face) -> str:
    return "{" + ",".join(str(v) for v in face) + "}"


def face_poset(delta: SimplicialComplex) -> Poset:
    """
    Poset of nonempty faces ordered by inclusion.

    Ids list faces by dimension, then lexicographically; `elements` holds the
    face tuples.

    Raises:
        DegenerateComplexError: For the degenerate complex
    """
    if delta.is_degenerate:
        raise DegenerateComplexError("face poset")
    faces = [f for f in delta.all_faces() if f]
    index = {f: i for i, f in enumerate(faces)}
    covers = []
    for f in faces:
        if len(f) < 2:
            continue
        for i in range(len(f)):
            covers.append((index[f[:i] + f[i + 1:]], index[f]))
    return Poset([_face_label(f) for f in faces], covers, elements=faces)


def face_lattice(delta: SimplicialComplex) -> Poset:
    """face_poset with a fresh bottom (the empty face) and top adjoined."""
    return bounded_extension(face_poset(delta))


def barycentric_subdivision(delta: SimplicialComplex) -> SimplicialComplex:
    return order_complex(face_poset(delta))
