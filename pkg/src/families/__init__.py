"""Families module - built-in posets, complexes and their labelings."""

from src.families.partitions import (
    SetPartition, BlockSizeSpec, canonical, partition_label, refines, merged_pair, is_noncrossing,
    iter_set_partitions, partition_lattice, noncrossing, block_restricted_partition_poset,
    zero_mod, residue_mod, at_least, k_equal, size_set, k_equal_partition_lattice,
    splitting_partitions, splitting_subposet, type_b_partition_lattice,
)
from src.families.fields import FiniteField, rref_matrices
from src.families.lattices import (
    CLASSICAL_LATTICES, classical_lattice, boolean, truncated_boolean, gaussian_binomial,
    subspace_lattice, divisor_lattice, cross_polytope_face_lattice, inversions, bruhat,
)
from src.families.words import WORD_KINDS, word_poset, is_subword, word_count
from src.families.graphs import GRAPH_PREDICATES, graph_property_poset, graph_predicate, is_k_connected
from src.families.complexes import matching_complex, chessboard_complex, inflation, colored_chessboard_complex
from src.families.labelings import (
    boolean_labeling, partition_lambda1, partition_lambda2, geometric_labeling, k_equal_labeling,
    noncrossing_stanley_labeling, builtin_el_labeling, LABELINGS,
)
from src.families.actions import (
    ACTION_KINDS, letter_action, symmetric_group_generators, random_letter_permutations,
    n_cycle, fixed_letters,
)
from src.families.registry import FAMILIES, FamilySpec, build_family, family_names

__all__ = [
    'SetPartition', 'BlockSizeSpec', 'canonical', 'partition_label', 'refines', 'merged_pair', 'is_noncrossing',
    'iter_set_partitions', 'partition_lattice', 'noncrossing', 'block_restricted_partition_poset',
    'zero_mod', 'residue_mod', 'at_least', 'k_equal', 'size_set', 'k_equal_partition_lattice',
    'splitting_partitions', 'splitting_subposet', 'type_b_partition_lattice',
    'FiniteField', 'rref_matrices',
    'CLASSICAL_LATTICES', 'classical_lattice', 'boolean', 'truncated_boolean', 'gaussian_binomial',
    'subspace_lattice', 'divisor_lattice', 'cross_polytope_face_lattice', 'inversions', 'bruhat',
    'WORD_KINDS', 'word_poset', 'is_subword', 'word_count',
    'GRAPH_PREDICATES', 'graph_property_poset', 'graph_predicate', 'is_k_connected',
    'matching_complex', 'chessboard_complex', 'inflation', 'colored_chessboard_complex',
    'boolean_labeling', 'partition_lambda1', 'partition_lambda2', 'geometric_labeling', 'k_equal_labeling',
    'noncrossing_stanley_labeling', 'builtin_el_labeling', 'LABELINGS',
    'ACTION_KINDS', 'letter_action', 'symmetric_group_generators', 'random_letter_permutations',
    'n_cycle', 'fixed_letters',
    'FAMILIES', 'FamilySpec', 'build_family', 'family_names',
]
