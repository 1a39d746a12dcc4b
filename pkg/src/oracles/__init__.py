"""Oracles module - closed-form counts, partitions and series that homology is checked against."""

from src.oracles.partitions import (
    IntegerPartition, partitions_of, partition_tools, bouc_betti, laplacian_eigenvalue, matching_partitions,
)
from src.oracles.series import (
    T, TruncatedSeries, alternating_block_series, cos_series, sin_series, exp_series,
)
from src.oracles.counting import (
    derangements, derangements_enumerated, euler_number, alternating_permutations,
    zigzag_numbers, tangent_numbers, d_euler, d_euler_enumerated,
    descent_class, descent_class_enumerated, descent_class_q, descent_class_q_enumerated,
    signed_descent_class, signed_descent_class_enumerated,
    catalan, double_factorial, k_equal_betti, chessboard_connectivity, COUNTING_KINDS, counting,
)
from src.oracles.betti_gf import (
    BETTI_GF_FAMILIES, betti_gf, at_least_k, zero_mod_d, one_mod_d, k_mod_d,
)

__all__ = [
    'IntegerPartition', 'partitions_of', 'partition_tools', 'bouc_betti', 'laplacian_eigenvalue',
    'matching_partitions',
    'T', 'TruncatedSeries', 'alternating_block_series', 'cos_series', 'sin_series', 'exp_series',
    'derangements', 'derangements_enumerated', 'euler_number', 'alternating_permutations',
    'zigzag_numbers', 'tangent_numbers', 'd_euler', 'd_euler_enumerated',
    'descent_class', 'descent_class_enumerated', 'descent_class_q', 'descent_class_q_enumerated',
    'signed_descent_class', 'signed_descent_class_enumerated',
    'catalan', 'double_factorial', 'k_equal_betti', 'chessboard_connectivity', 'COUNTING_KINDS', 'counting',
    'BETTI_GF_FAMILIES', 'betti_gf', 'at_least_k', 'zero_mod_d', 'one_mod_d', 'k_mod_d',
]
