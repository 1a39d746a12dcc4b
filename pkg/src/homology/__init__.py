"""Homology module - exact chain complexes, Smith normal form, Laplacians."""

from src.homology.chains import SparseIntegerMatrix, ChainComplex, chain_complex
from src.homology.smith import SmithForm, smith_normal_form, integer_rank
from src.homology.groups import (
    HomologyResult, homology, cohomology, poset_homology, betti_open_interval,
    is_homology_sphere, sphere_profile,
)
from src.homology.laplacian import laplacian_matrix, laplacian_betti, laplacian_spectrum
from src.homology.cohen_macaulay import CMReport, cm_checks, is_sequentially_acyclic
from src.homology.cycles import Cycle, fundamental_cycle, cycle_rank, independent_in_homology

__all__ = [
    'SparseIntegerMatrix', 'ChainComplex', 'chain_complex',
    'SmithForm', 'smith_normal_form', 'integer_rank',
    'HomologyResult', 'homology', 'cohomology', 'poset_homology', 'betti_open_interval',
    'is_homology_sphere', 'sphere_profile',
    'laplacian_matrix', 'laplacian_betti', 'laplacian_spectrum',
    'CMReport', 'cm_checks', 'is_sequentially_acyclic',
    'Cycle', 'fundamental_cycle', 'cycle_rank', 'independent_in_homology',
]
