"""Complex module - simplicial complexes and the poset bridge."""

from src.complex.simplicial import (
    Face, SimplicialComplex, face_mask, from_facets, void_complex,
    degenerate_complex, simplex, simplex_boundary,
)
from src.complex.operations import (
    OPERATION_KINDS, join, cone, suspension, link, induced_subcomplex, skeleton,
    pure_skeleton, upper_facets, generated, alexander_dual, apply_operation,
)
from src.complex.bridge import order_complex, face_poset, face_lattice, barycentric_subdivision
from src.complex.io import complex_to_dict, complex_from_dict, read_complex, write_complex

__all__ = [
    'Face', 'SimplicialComplex', 'face_mask', 'from_facets', 'void_complex',
    'degenerate_complex', 'simplex', 'simplex_boundary',
    'OPERATION_KINDS', 'join', 'cone', 'suspension', 'link', 'induced_subcomplex', 'skeleton',
    'pure_skeleton', 'upper_facets', 'generated', 'alexander_dual', 'apply_operation',
    'order_complex', 'face_poset', 'face_lattice', 'barycentric_subdivision',
    'complex_to_dict', 'complex_from_dict', 'read_complex', 'write_complex',
]
